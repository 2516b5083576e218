#include "mlsh/numerics/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace mlsh::numerics {

namespace {
constexpr double kLogTwoPi = 1.8378770664093454836;

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite input");
}
}  // namespace

Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
  if (logits.size() == 0) throw std::invalid_argument("softmax: empty logits");
  const double m = logits.maxCoeff();
  Eigen::VectorXd p = (logits.array() - m).exp();
  p /= p.sum();
  return p;
}

int categorical_sample(const Eigen::VectorXd& logits, Rng& rng) {
  if (logits.size() == 0) throw std::invalid_argument("categorical_sample: empty logits");
  require_finite(logits, "categorical_sample");
  const Eigen::VectorXd p = softmax(logits);
  const double u = rng.uniform();
  double acc = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    acc += p(k);
    if (u < acc) return static_cast<int>(k);
  }
  return static_cast<int>(p.size()) - 1;  // u landed in rounding slack
}

double categorical_logprob(const Eigen::VectorXd& logits, int index) {
  if (index < 0 || index >= logits.size()) {
    throw std::out_of_range("categorical_logprob: index out of range");
  }
  const double m = logits.maxCoeff();
  const double lse = m + std::log((logits.array() - m).exp().sum());
  return logits(index) - lse;
}

double entropy(const Eigen::VectorXd& logits) {
  const Eigen::VectorXd p = softmax(logits);
  double h = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    if (p(k) > 0.0) h -= p(k) * std::log(p(k));
  }
  return h;
}

Eigen::VectorXd gaussian_sample(const Eigen::VectorXd& mean, const Eigen::VectorXd& log_std,
                                Rng& rng) {
  if (mean.size() != log_std.size()) {
    throw std::invalid_argument("gaussian_sample: mean/log_std size mismatch");
  }
  Eigen::VectorXd a(mean.size());
  for (Eigen::Index i = 0; i < mean.size(); ++i) {
    a(i) = mean(i) + std::exp(log_std(i)) * rng.normal();
  }
  return a;
}

double gaussian_logprob(const Eigen::VectorXd& mean, const Eigen::VectorXd& log_std,
                        const Eigen::VectorXd& action) {
  if (mean.size() != log_std.size() || mean.size() != action.size()) {
    throw std::invalid_argument("gaussian_logprob: size mismatch");
  }
  double lp = -0.5 * static_cast<double>(mean.size()) * kLogTwoPi;
  for (Eigen::Index i = 0; i < mean.size(); ++i) {
    const double z = (action(i) - mean(i)) * std::exp(-log_std(i));
    lp += -0.5 * z * z - log_std(i);
  }
  return lp;
}

double gaussian_entropy(const Eigen::VectorXd& log_std) {
  // sum_d (log_std_d + 0.5 ln(2 pi e))
  return log_std.sum() + 0.5 * static_cast<double>(log_std.size()) * (kLogTwoPi + 1.0);
}

}  // namespace mlsh::numerics
