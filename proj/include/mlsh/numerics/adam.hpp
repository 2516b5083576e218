#pragma once

#include <cstdint>

#include "mlsh/numerics/param_vector.hpp"

namespace mlsh::numerics {

struct AdamState {
  ParamVector m;
  ParamVector v;
  int64_t step = 0;
};

AdamState make_adam_state(const ParamVector& like);

// Standard Adam with bias correction. Throws on lr <= 0 or layout mismatch.
void adam_step(ParamVector& params, const ParamVector& grad, AdamState& state, double lr,
               double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

}  // namespace mlsh::numerics
