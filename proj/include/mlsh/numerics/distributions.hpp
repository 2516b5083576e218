#pragma once

#include <Eigen/Core>

#include "mlsh/numerics/rng.hpp"

namespace mlsh::numerics {

// Sampling-side distribution math. The differentiable counterparts live on
// the Tape; agreement between the two is covered by tests.

Eigen::VectorXd softmax(const Eigen::VectorXd& logits);

int categorical_sample(const Eigen::VectorXd& logits, Rng& rng);
double categorical_logprob(const Eigen::VectorXd& logits, int index);
double entropy(const Eigen::VectorXd& logits);  // categorical

Eigen::VectorXd gaussian_sample(const Eigen::VectorXd& mean, const Eigen::VectorXd& log_std,
                                Rng& rng);
double gaussian_logprob(const Eigen::VectorXd& mean, const Eigen::VectorXd& log_std,
                        const Eigen::VectorXd& action);
double gaussian_entropy(const Eigen::VectorXd& log_std);

}  // namespace mlsh::numerics
