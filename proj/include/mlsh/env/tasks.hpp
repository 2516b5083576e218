#pragma once

#include <vector>

#include "mlsh/env/reacher.hpp"
#include "mlsh/numerics/rng.hpp"

namespace mlsh::env {

// The task distribution P: every (configuration, target) pair sampled during
// meta-training. Target reachability is validated at construction.
struct TaskDistribution {
  std::vector<ArmConfig> arms;
  std::vector<Task> tasks;

  const ArmConfig& arm_of(const Task& t) const { return arms[static_cast<size_t>(t.arm_index)]; }
};

// Validates arms and targets (1 mm reachability margin); task_ids are
// assigned 0..n-1 in input order. Throws std::invalid_argument on the first
// unreachable target.
TaskDistribution make_task_distribution(std::vector<ArmConfig> arms,
                                        std::vector<Task> task_defs);

// The dual-configuration reaching setup: 3-DoF and 4-DoF arms, targets H and
// O per configuration, four tasks total.
TaskDistribution default_task_distribution();

// Small 2-DoF, two-target distribution used by fast tests.
TaskDistribution toy_task_distribution();

int sample_task(const TaskDistribution& dist, numerics::Rng& rng);  // uniform task_id

}  // namespace mlsh::env
