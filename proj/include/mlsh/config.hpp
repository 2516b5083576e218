#pragma once

#include <cstdint>

namespace mlsh {

// Hyperparameters of the two-level training scheme. Letters in comments are
// the conventional MLSH names.
struct MlshConfig {
  int sub_policy_count = 4;  // K
  int macro_duration = 5;    // N, env steps per master decision
  int warmup_iters = 20;     // W, master-only iterations after a task switch
  int joint_iters = 200;     // U, iterations updating both levels
  int steps_per_iter = 2000; // D, env steps collected per iteration
  int horizon = 200;         // T, episode length; multiple of N

  double gamma = 0.99;
  double lam = 0.95;
  double clip_eps = 0.2;
  int epochs = 4;
  int minibatch_size = 64;
  double lr_master = 3e-4;
  double lr_sub = 3e-4;
  double entropy_coef_master = 0.01;
  double entropy_coef_sub = 0.01;
  double value_coef = 0.5;

  int meta_rounds = 30;      // outer task-switch repetitions
  bool early_stop = true;    // stop when round distances plateau (< 1 mm over 5 rounds)
  int rollout_slots = 4;     // parallel experience streams; fixed per run so
                             // results are independent of the worker count
  uint64_t seed = 1;

  // Throws std::invalid_argument listing the first violated constraint.
  void validate() const;
};

}  // namespace mlsh
