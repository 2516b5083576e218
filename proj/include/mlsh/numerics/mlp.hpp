#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mlsh/numerics/param_vector.hpp"
#include "mlsh/numerics/rng.hpp"
#include "mlsh/numerics/tape.hpp"

namespace mlsh::numerics {

// Dense tanh network. Weight segments are stored input x output so a batch
// of row observations multiplies from the left.
struct MlpSpec {
  int input_dim = 0;
  std::vector<int> hidden;
  int output_dim = 0;
};

// Segment names: {prefix}l{i}.W / {prefix}l{i}.b per hidden layer, then
// {prefix}out.W / {prefix}out.b.
std::vector<Segment> mlp_segments(const MlpSpec& spec, std::string_view prefix);

// Throws with the offending segment name when params do not match spec.
void check_mlp_params(const MlpSpec& spec, const ParamVector& params, std::string_view prefix);

// Orthogonal columns scaled by gain; zero biases; final layer scaled by
// final_gain (0.01 for policy heads keeps the initial action distribution
// near its mean).
void mlp_init(ParamVector& params, const MlpSpec& spec, std::string_view prefix, Rng& rng,
              double final_gain);

Eigen::VectorXd mlp_forward(const MlpSpec& spec, const ParamVector& params,
                            std::string_view prefix, const Eigen::VectorXd& input);

Mat mlp_forward_batch(const MlpSpec& spec, const ParamVector& params, std::string_view prefix,
                      const Mat& inputs);

// Tape version used by the update path; same arithmetic as mlp_forward_batch.
Var mlp_apply(Tape& tape, const MlpSpec& spec, const ParamLeaves& leaves,
              std::string_view prefix, Var inputs);

// QR-based orthogonal matrix, deterministic in rng.
Mat orthogonal_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

}  // namespace mlsh::numerics
