#include "mlsh/config.hpp"

#include <stdexcept>
#include <string>

namespace mlsh {

namespace {
void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("config: " + msg);
}
}  // namespace

void MlshConfig::validate() const {
  require(sub_policy_count >= 1, "sub_policy_count (K) must be >= 1");
  require(macro_duration >= 1, "macro_duration (N) must be >= 1");
  require(warmup_iters >= 0, "warmup_iters (W) must be >= 0");
  require(joint_iters >= 0, "joint_iters (U) must be >= 0");
  require(steps_per_iter >= macro_duration, "steps_per_iter (D) must be >= macro_duration (N)");
  require(horizon >= 1, "horizon (T) must be >= 1");
  require(horizon % macro_duration == 0, "horizon (T) must be divisible by macro_duration (N)");
  require(gamma > 0.0 && gamma <= 1.0, "gamma must be in (0, 1]");
  require(lam >= 0.0 && lam <= 1.0, "lam must be in [0, 1]");
  require(clip_eps > 0.0, "clip_eps must be > 0");
  require(epochs >= 1, "epochs must be >= 1");
  require(minibatch_size >= 1, "minibatch_size must be >= 1");
  require(lr_master > 0.0, "lr_master must be > 0");
  require(lr_sub > 0.0, "lr_sub must be > 0");
  require(entropy_coef_master >= 0.0, "entropy_coef_master must be >= 0");
  require(entropy_coef_sub >= 0.0, "entropy_coef_sub must be >= 0");
  require(value_coef >= 0.0, "value_coef must be >= 0");
  require(meta_rounds >= 0, "meta_rounds must be >= 0");
  require(rollout_slots >= 1, "rollout_slots must be >= 1");
  require(steps_per_iter % (rollout_slots * macro_duration) == 0,
          "steps_per_iter (D) must be divisible by rollout_slots * macro_duration");
}

}  // namespace mlsh
