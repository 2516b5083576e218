#include "mlsh/numerics/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace mlsh::numerics {

AdamState make_adam_state(const ParamVector& like) {
  AdamState s;
  s.m = ParamVector(like.layout());
  s.v = ParamVector(like.layout());
  return s;
}

void adam_step(ParamVector& params, const ParamVector& grad, AdamState& state, double lr,
               double beta1, double beta2, double eps) {
  if (lr <= 0.0) throw std::invalid_argument("adam_step: lr must be positive");
  if (!params.same_layout(grad) || !params.same_layout(state.m)) {
    throw std::invalid_argument("adam_step: layout mismatch");
  }
  state.step += 1;
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(state.step));
  const double alpha = lr * std::sqrt(bc2) / bc1;

  auto m = state.m.flat();
  auto v = state.v.flat();
  auto g = grad.flat();
  auto p = params.flat();
  m = beta1 * m + (1.0 - beta1) * g;
  v.array() = beta2 * v.array() + (1.0 - beta2) * g.array().square();
  p.array() -= alpha * m.array() / (v.array().sqrt() + eps);
}

}  // namespace mlsh::numerics
