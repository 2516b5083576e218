#include "mlsh/numerics/mlp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace mlsh::numerics {

namespace {

void check_spec(const MlpSpec& spec) {
  if (spec.input_dim < 1 || spec.output_dim < 1) {
    throw std::invalid_argument("mlp: input and output dims must be >= 1");
  }
  for (int h : spec.hidden) {
    if (h < 1) throw std::invalid_argument("mlp: hidden widths must be >= 1");
  }
}

std::string layer_name(std::string_view prefix, int layer, int n_hidden, bool weight) {
  std::string base(prefix);
  if (layer < n_hidden) {
    base += "l" + std::to_string(layer);
  } else {
    base += "out";
  }
  return base + (weight ? ".W" : ".b");
}

}  // namespace

std::vector<Segment> mlp_segments(const MlpSpec& spec, std::string_view prefix) {
  check_spec(spec);
  std::vector<Segment> segs;
  const int n_hidden = static_cast<int>(spec.hidden.size());
  int in = spec.input_dim;
  for (int l = 0; l <= n_hidden; ++l) {
    const int out = l < n_hidden ? spec.hidden[static_cast<size_t>(l)] : spec.output_dim;
    segs.push_back({layer_name(prefix, l, n_hidden, true), in, out});
    segs.push_back({layer_name(prefix, l, n_hidden, false), 1, out});
    in = out;
  }
  return segs;
}

void check_mlp_params(const MlpSpec& spec, const ParamVector& params, std::string_view prefix) {
  check_spec(spec);
  const int n_hidden = static_cast<int>(spec.hidden.size());
  int in = spec.input_dim;
  for (int l = 0; l <= n_hidden; ++l) {
    const int out = l < n_hidden ? spec.hidden[static_cast<size_t>(l)] : spec.output_dim;
    for (bool weight : {true, false}) {
      const std::string name = layer_name(prefix, l, n_hidden, weight);
      const int idx = params.index_of(name);
      if (idx < 0) throw std::invalid_argument("mlp: missing param segment '" + name + "'");
      const Segment& s = params.layout()[static_cast<size_t>(idx)];
      const Eigen::Index want_rows = weight ? in : 1;
      if (s.rows != want_rows || s.cols != out) {
        throw std::invalid_argument("mlp: segment '" + name + "' has shape " +
                                    std::to_string(s.rows) + "x" + std::to_string(s.cols) +
                                    ", expected " + std::to_string(want_rows) + "x" +
                                    std::to_string(out));
      }
    }
    in = out;
  }
}

Mat orthogonal_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  const bool transposed = rows < cols;
  const Eigen::Index r = transposed ? cols : rows;
  const Eigen::Index c = transposed ? rows : cols;
  Mat g(r, c);
  for (Eigen::Index j = 0; j < c; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(r, c);
  const Mat rmat = qr.matrixQR().topRows(c).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < c; ++j) {
    if (rmat(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return transposed ? Mat(q.transpose()) : q;
}

void mlp_init(ParamVector& params, const MlpSpec& spec, std::string_view prefix, Rng& rng,
              double final_gain) {
  check_mlp_params(spec, params, prefix);
  const int n_hidden = static_cast<int>(spec.hidden.size());
  const double hidden_gain = std::sqrt(2.0);
  for (int l = 0; l <= n_hidden; ++l) {
    const double gain = l < n_hidden ? hidden_gain : final_gain;
    auto w = params.seg(layer_name(prefix, l, n_hidden, true));
    w = gain * orthogonal_matrix(w.rows(), w.cols(), rng);
    params.seg(layer_name(prefix, l, n_hidden, false)).setZero();
  }
}

Eigen::VectorXd mlp_forward(const MlpSpec& spec, const ParamVector& params,
                            std::string_view prefix, const Eigen::VectorXd& input) {
  if (input.size() != spec.input_dim) {
    throw std::invalid_argument("mlp: input length " + std::to_string(input.size()) +
                                " != input_dim " + std::to_string(spec.input_dim));
  }
  const Mat out = mlp_forward_batch(spec, params, prefix, input.transpose());
  return out.row(0).transpose();
}

Mat mlp_forward_batch(const MlpSpec& spec, const ParamVector& params, std::string_view prefix,
                      const Mat& inputs) {
  check_mlp_params(spec, params, prefix);
  if (inputs.cols() != spec.input_dim) {
    throw std::invalid_argument("mlp: batch has " + std::to_string(inputs.cols()) +
                                " columns, expected " + std::to_string(spec.input_dim));
  }
  const int n_hidden = static_cast<int>(spec.hidden.size());
  Mat h = inputs;
  for (int l = 0; l <= n_hidden; ++l) {
    const auto w = params.seg(layer_name(prefix, l, n_hidden, true));
    const auto b = params.seg(layer_name(prefix, l, n_hidden, false));
    Mat z = h * w;
    z.rowwise() += b.row(0);
    h = l < n_hidden ? Mat(z.array().tanh().matrix()) : z;
  }
  return h;
}

Var mlp_apply(Tape& tape, const MlpSpec& spec, const ParamLeaves& leaves,
              std::string_view prefix, Var inputs) {
  check_spec(spec);
  const int n_hidden = static_cast<int>(spec.hidden.size());
  Var h = inputs;
  for (int l = 0; l <= n_hidden; ++l) {
    const Var w = leaves.at(layer_name(prefix, l, n_hidden, true));
    const Var b = leaves.at(layer_name(prefix, l, n_hidden, false));
    Var z = tape.add_row(tape.matmul(h, w), b);
    h = l < n_hidden ? tape.tanh(z) : z;
  }
  return h;
}

}  // namespace mlsh::numerics
