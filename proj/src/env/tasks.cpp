#include "mlsh/env/tasks.hpp"

#include <cmath>
#include <stdexcept>

namespace mlsh::env {

namespace {

constexpr double kReachMarginM = 1e-3;

ArmConfig make_arm(std::string name, std::vector<double> links, double base_height) {
  ArmConfig a;
  a.name = std::move(name);
  a.dof = static_cast<int>(links.size());
  a.link_lengths = std::move(links);
  a.base_height = base_height;
  a.joint_limits.assign(static_cast<size_t>(a.dof), {-3.14159265358979323846, 3.14159265358979323846});
  a.max_joint_step = 0.05;
  return a;
}

void check_reachable(const ArmConfig& arm, const Task& t) {
  const double planar = std::hypot(t.target.x(), t.target.y());
  const double max_r = arm.max_reach() - kReachMarginM;
  const double min_r = arm.min_reach();
  if (planar > max_r) {
    throw std::invalid_argument("task " + std::to_string(t.task_id) + " ('" + t.label +
                                "'): planar radius " + std::to_string(planar) +
                                " m exceeds reach of arm '" + arm.name + "'");
  }
  if (min_r > 0.0 && planar < min_r + kReachMarginM) {
    throw std::invalid_argument("task " + std::to_string(t.task_id) + " ('" + t.label +
                                "'): planar radius " + std::to_string(planar) +
                                " m inside dead zone of arm '" + arm.name + "'");
  }
  if (std::abs(t.target.z() - arm.base_height) > kReachMarginM) {
    throw std::invalid_argument("task " + std::to_string(t.task_id) + " ('" + t.label +
                                "'): target z " + std::to_string(t.target.z()) +
                                " m does not match base height " +
                                std::to_string(arm.base_height) + " m of arm '" + arm.name + "'");
  }
}

}  // namespace

TaskDistribution make_task_distribution(std::vector<ArmConfig> arms,
                                        std::vector<Task> task_defs) {
  if (arms.empty()) throw std::invalid_argument("task distribution: no arms defined");
  if (task_defs.empty()) throw std::invalid_argument("task distribution: no tasks defined");
  for (const ArmConfig& a : arms) a.validate();

  TaskDistribution dist;
  dist.arms = std::move(arms);
  dist.tasks = std::move(task_defs);
  for (size_t i = 0; i < dist.tasks.size(); ++i) {
    Task& t = dist.tasks[i];
    t.task_id = static_cast<int>(i);
    if (t.arm_index < 0 || t.arm_index >= static_cast<int>(dist.arms.size())) {
      throw std::invalid_argument("task " + std::to_string(i) + ": arm index out of range");
    }
    check_reachable(dist.arm_of(t), t);
  }
  return dist;
}

TaskDistribution default_task_distribution() {
  std::vector<ArmConfig> arms;
  arms.push_back(make_arm("scara3", {0.15, 0.15, 0.10}, 0.3746));
  arms.push_back(make_arm("scara4", {0.15, 0.15, 0.10, 0.08}, 0.4868));

  const Eigen::Vector2d h(0.3305805, -0.1326121);
  const Eigen::Vector2d o(0.3325683, 0.0657366);

  std::vector<Task> tasks;
  tasks.push_back({0, "H", {h.x(), h.y(), 0.3746}, 0});
  tasks.push_back({0, "O", {o.x(), o.y(), 0.3746}, 1});
  tasks.push_back({1, "H", {h.x(), h.y(), 0.4868}, 2});
  tasks.push_back({1, "O", {o.x(), o.y(), 0.4868}, 3});
  return make_task_distribution(std::move(arms), std::move(tasks));
}

TaskDistribution toy_task_distribution() {
  std::vector<ArmConfig> arms;
  arms.push_back(make_arm("planar2", {0.15, 0.15}, 0.1));

  std::vector<Task> tasks;
  tasks.push_back({0, "A", {0.20, 0.10, 0.1}, 0});
  tasks.push_back({0, "B", {0.12, -0.16, 0.1}, 1});
  return make_task_distribution(std::move(arms), std::move(tasks));
}

int sample_task(const TaskDistribution& dist, numerics::Rng& rng) {
  return rng.uniform_int(static_cast<int>(dist.tasks.size()));
}

}  // namespace mlsh::env
