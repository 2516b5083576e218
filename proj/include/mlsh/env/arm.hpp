#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mlsh::env {

// Action and observation sizes are shared across every configuration so one
// policy network can drive any arm; shorter arms are zero-padded and masked.
inline constexpr int kMaxDof = 4;
inline constexpr int kObsDim = 2 * kMaxDof + 3 + 3 + kMaxDof;  // cos, sin, ee, target, mask

// Geometric description of one serial-arm configuration. All joints are
// revolute about the vertical axis; the end-effector moves in a horizontal
// plane at base_height.
struct ArmConfig {
  std::string name;
  int dof = 0;
  std::vector<double> link_lengths;                  // meters
  double base_height = 0.0;                          // meters
  std::vector<std::pair<double, double>> joint_limits;  // radians, (min, max)
  double max_joint_step = 0.0;                       // radians per control step

  double max_reach() const;
  double min_reach() const;
  void validate() const;  // throws std::invalid_argument
};

// Planar cumulative-angle kinematics; z is fixed at base_height.
Eigen::Vector3d forward_kinematics(const ArmConfig& arm, std::span<const double> joint_angles);

}  // namespace mlsh::env
