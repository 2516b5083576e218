#include "mlsh/env/arm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mlsh::env {

double ArmConfig::max_reach() const {
  return std::accumulate(link_lengths.begin(), link_lengths.end(), 0.0);
}

double ArmConfig::min_reach() const {
  if (link_lengths.empty()) return 0.0;
  const double longest = *std::max_element(link_lengths.begin(), link_lengths.end());
  return std::max(0.0, 2.0 * longest - max_reach());
}

void ArmConfig::validate() const {
  if (dof < 1 || dof > kMaxDof) {
    throw std::invalid_argument("arm '" + name + "': dof must be in [1, " +
                                std::to_string(kMaxDof) + "]");
  }
  if (static_cast<int>(link_lengths.size()) != dof) {
    throw std::invalid_argument("arm '" + name + "': link count != dof");
  }
  if (static_cast<int>(joint_limits.size()) != dof) {
    throw std::invalid_argument("arm '" + name + "': joint limit count != dof");
  }
  for (double l : link_lengths) {
    if (!(l > 0.0)) throw std::invalid_argument("arm '" + name + "': link lengths must be > 0");
  }
  for (const auto& [lo, hi] : joint_limits) {
    if (!(lo < hi)) throw std::invalid_argument("arm '" + name + "': empty joint limit range");
  }
  if (!(max_joint_step > 0.0)) {
    throw std::invalid_argument("arm '" + name + "': max_joint_step must be > 0");
  }
}

Eigen::Vector3d forward_kinematics(const ArmConfig& arm, std::span<const double> joint_angles) {
  if (static_cast<int>(joint_angles.size()) != arm.dof) {
    throw std::invalid_argument("forward_kinematics: expected " + std::to_string(arm.dof) +
                                " joint angles, got " + std::to_string(joint_angles.size()));
  }
  double x = 0.0, y = 0.0, a = 0.0;
  for (int i = 0; i < arm.dof; ++i) {
    a += joint_angles[static_cast<size_t>(i)];
    x += arm.link_lengths[static_cast<size_t>(i)] * std::cos(a);
    y += arm.link_lengths[static_cast<size_t>(i)] * std::sin(a);
  }
  return {x, y, arm.base_height};
}

}  // namespace mlsh::env
