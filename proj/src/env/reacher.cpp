#include "mlsh/env/reacher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlsh::env {

double euclidean_distance_mm(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return (a - b).norm() * 1000.0;
}

ReacherEnv::ReacherEnv(ArmConfig arm, Task task, int horizon)
    : arm_(std::move(arm)), task_(std::move(task)), horizon_(horizon) {
  arm_.validate();
  if (horizon_ < 1) throw std::invalid_argument("reacher: horizon must be >= 1");
  refresh_ee();
}

void ReacherEnv::refresh_ee() {
  state_.ee_position =
      forward_kinematics(arm_, {state_.joint_angles.data(), static_cast<size_t>(arm_.dof)});
}

Eigen::VectorXd ReacherEnv::reset(numerics::Rng& rng) {
  state_.joint_angles.setZero();
  for (int i = 0; i < arm_.dof; ++i) {
    const auto& [lo, hi] = arm_.joint_limits[static_cast<size_t>(i)];
    const double a = (rng.uniform() * 2.0 - 1.0) * 0.1;
    state_.joint_angles(i) = std::clamp(a, lo, hi);
  }
  state_.step_index = 0;
  refresh_ee();
  return observation();
}

ReacherEnv::StepResult ReacherEnv::step(const Eigen::Vector4d& action) {
  if (!action.allFinite()) throw std::invalid_argument("reacher: non-finite action");
  for (int i = 0; i < arm_.dof; ++i) {
    const double a = std::clamp(action(i), -1.0, 1.0);
    const auto& [lo, hi] = arm_.joint_limits[static_cast<size_t>(i)];
    state_.joint_angles(i) = std::clamp(state_.joint_angles(i) + a * arm_.max_joint_step, lo, hi);
  }
  state_.step_index += 1;
  refresh_ee();

  StepResult r;
  r.observation = observation();
  r.reward = -distance_m();
  r.done = state_.step_index >= horizon_;
  return r;
}

Eigen::VectorXd ReacherEnv::observation() const {
  Eigen::VectorXd obs(kObsDim);
  for (int i = 0; i < kMaxDof; ++i) {
    obs(i) = std::cos(state_.joint_angles(i));
    obs(kMaxDof + i) = std::sin(state_.joint_angles(i));
  }
  obs.segment<3>(2 * kMaxDof) = state_.ee_position;
  obs.segment<3>(2 * kMaxDof + 3) = task_.target;
  for (int i = 0; i < kMaxDof; ++i) {
    obs(2 * kMaxDof + 6 + i) = i < arm_.dof ? 1.0 : 0.0;
  }
  return obs;
}

}  // namespace mlsh::env
