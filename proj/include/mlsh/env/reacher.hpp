#pragma once

#include <Eigen/Core>

#include <string>

#include "mlsh/env/arm.hpp"
#include "mlsh/numerics/rng.hpp"

namespace mlsh::env {

// One (configuration, target) pair of the task distribution.
struct Task {
  int arm_index = 0;     // into TaskDistribution::arms
  std::string label;     // e.g. "H", "O"
  Eigen::Vector3d target = Eigen::Vector3d::Zero();
  int task_id = 0;
};

struct EnvState {
  Eigen::Vector4d joint_angles = Eigen::Vector4d::Zero();  // padded to kMaxDof
  int step_index = 0;
  Eigen::Vector3d ee_position = Eigen::Vector3d::Zero();
};

double euclidean_distance_mm(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

// Reaching environment over a single task. Owns its state; reward is the
// negative Euclidean distance between end-effector and target after the move.
class ReacherEnv {
 public:
  ReacherEnv(ArmConfig arm, Task task, int horizon);

  struct StepResult {
    Eigen::VectorXd observation;
    double reward = 0.0;
    bool done = false;
  };

  // Active joints start uniformly within +-0.1 rad of zero.
  Eigen::VectorXd reset(numerics::Rng& rng);

  // action has kMaxDof entries in [-1, 1] (clamped); active joints move by
  // action * max_joint_step within joint limits, padded entries are ignored.
  StepResult step(const Eigen::Vector4d& action);

  Eigen::VectorXd observation() const;
  const EnvState& state() const { return state_; }
  const ArmConfig& arm() const { return arm_; }
  const Task& task() const { return task_; }
  int horizon() const { return horizon_; }
  double distance_m() const { return (state_.ee_position - task_.target).norm(); }

 private:
  void refresh_ee();

  ArmConfig arm_;
  Task task_;
  int horizon_;
  EnvState state_;
};

}  // namespace mlsh::env
