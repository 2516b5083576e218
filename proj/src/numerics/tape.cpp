#include "mlsh/numerics/tape.hpp"

#include <cmath>
#include <stdexcept>

namespace mlsh::numerics {

namespace {
constexpr double kLogTwoPi = 1.8378770664093454836;

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

// rowwise softmax with max subtraction
Mat softmax_rows(const Mat& logits) {
  Mat p(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double m = logits.row(i).maxCoeff();
    p.row(i) = (logits.row(i).array() - m).exp();
    p.row(i) /= p.row(i).sum();
  }
  return p;
}
}  // namespace

Var Tape::push(Mat value, const char* op, bool requires_grad,
               std::function<void(Tape&, int)> back) {
  Node n;
  n.value = std::move(value);
  n.op = op;
  n.requires_grad = requires_grad;
  n.back = std::move(back);
  nodes_.push_back(std::move(n));
  return Var(static_cast<int>(nodes_.size()) - 1);
}

Var Tape::matmul(Var a, Var b) {
  const Mat& A = value(a);
  const Mat& B = value(b);
  if (A.cols() != B.rows()) {
    throw std::invalid_argument("matmul: inner dimensions disagree");
  }
  const int ia = a.idx_, ib = b.idx_;
  return push(A * B, "matmul", needs_grad(a) || needs_grad(b), [ia, ib](Tape& t, int self) {
    const Mat& g = t.grad_ref(self);
    if (t.nodes_[static_cast<size_t>(ia)].requires_grad)
      t.grad_ref(ia).noalias() += g * t.val(ib).transpose();
    if (t.nodes_[static_cast<size_t>(ib)].requires_grad)
      t.grad_ref(ib).noalias() += t.val(ia).transpose() * g;
  });
}

Var Tape::add(Var a, Var b) {
  require_same_shape(value(a), value(b), "add");
  const int ia = a.idx_, ib = b.idx_;
  return push(value(a) + value(b), "add", needs_grad(a) || needs_grad(b),
              [ia, ib](Tape& t, int self) {
                const Mat& g = t.grad_ref(self);
                if (t.nodes_[static_cast<size_t>(ia)].requires_grad) t.grad_ref(ia) += g;
                if (t.nodes_[static_cast<size_t>(ib)].requires_grad) t.grad_ref(ib) += g;
              });
}

Var Tape::add_row(Var a, Var row) {
  const Mat& A = value(a);
  const Mat& R = value(row);
  if (R.rows() != 1 || R.cols() != A.cols()) {
    throw std::invalid_argument("add_row: expected 1x" + std::to_string(A.cols()) + " row");
  }
  const int ia = a.idx_, ir = row.idx_;
  Mat out = A.rowwise() + R.row(0);
  return push(std::move(out), "add_row", needs_grad(a) || needs_grad(row),
              [ia, ir](Tape& t, int self) {
                const Mat& g = t.grad_ref(self);
                if (t.nodes_[static_cast<size_t>(ia)].requires_grad) t.grad_ref(ia) += g;
                if (t.nodes_[static_cast<size_t>(ir)].requires_grad)
                  t.grad_ref(ir) += g.colwise().sum();
              });
}

Var Tape::sub(Var a, Var b) {
  require_same_shape(value(a), value(b), "sub");
  const int ia = a.idx_, ib = b.idx_;
  return push(value(a) - value(b), "sub", needs_grad(a) || needs_grad(b),
              [ia, ib](Tape& t, int self) {
                const Mat& g = t.grad_ref(self);
                if (t.nodes_[static_cast<size_t>(ia)].requires_grad) t.grad_ref(ia) += g;
                if (t.nodes_[static_cast<size_t>(ib)].requires_grad) t.grad_ref(ib) -= g;
              });
}

Var Tape::mul(Var a, Var b) {
  require_same_shape(value(a), value(b), "mul");
  const int ia = a.idx_, ib = b.idx_;
  return push(value(a).cwiseProduct(value(b)), "mul", needs_grad(a) || needs_grad(b),
              [ia, ib](Tape& t, int self) {
                const Mat& g = t.grad_ref(self);
                if (t.nodes_[static_cast<size_t>(ia)].requires_grad)
                  t.grad_ref(ia) += g.cwiseProduct(t.val(ib));
                if (t.nodes_[static_cast<size_t>(ib)].requires_grad)
                  t.grad_ref(ib) += g.cwiseProduct(t.val(ia));
              });
}

Var Tape::scale(Var a, double c) {
  const int ia = a.idx_;
  return push(value(a) * c, "scale", needs_grad(a), [ia, c](Tape& t, int self) {
    if (t.nodes_[static_cast<size_t>(ia)].requires_grad) t.grad_ref(ia) += c * t.grad_ref(self);
  });
}

Var Tape::add_scalar(Var a, double c) {
  const int ia = a.idx_;
  return push((value(a).array() + c).matrix(), "add_scalar", needs_grad(a),
              [ia](Tape& t, int self) {
                if (t.nodes_[static_cast<size_t>(ia)].requires_grad)
                  t.grad_ref(ia) += t.grad_ref(self);
              });
}

Var Tape::tanh(Var a) {
  const int ia = a.idx_;
  return push(value(a).array().tanh().matrix(), "tanh", needs_grad(a), [ia](Tape& t, int self) {
    if (!t.nodes_[static_cast<size_t>(ia)].requires_grad) return;
    const Mat& y = t.val(self);
    t.grad_ref(ia).array() += t.grad_ref(self).array() * (1.0 - y.array().square());
  });
}

Var Tape::exp(Var a) {
  const int ia = a.idx_;
  return push(value(a).array().exp().matrix(), "exp", needs_grad(a), [ia](Tape& t, int self) {
    if (!t.nodes_[static_cast<size_t>(ia)].requires_grad) return;
    t.grad_ref(ia).array() += t.grad_ref(self).array() * t.val(self).array();
  });
}

Var Tape::log(Var a) {
  const int ia = a.idx_;
  return push(value(a).array().log().matrix(), "log", needs_grad(a), [ia](Tape& t, int self) {
    if (!t.nodes_[static_cast<size_t>(ia)].requires_grad) return;
    t.grad_ref(ia).array() += t.grad_ref(self).array() / t.val(ia).array();
  });
}

Var Tape::square(Var a) {
  const int ia = a.idx_;
  return push(value(a).array().square().matrix(), "square", needs_grad(a),
              [ia](Tape& t, int self) {
                if (!t.nodes_[static_cast<size_t>(ia)].requires_grad) return;
                t.grad_ref(ia).array() += 2.0 * t.grad_ref(self).array() * t.val(ia).array();
              });
}

Var Tape::clamp(Var a, double lo, double hi) {
  const int ia = a.idx_;
  return push(value(a).cwiseMax(lo).cwiseMin(hi), "clamp", needs_grad(a),
              [ia, lo, hi](Tape& t, int self) {
                if (!t.nodes_[static_cast<size_t>(ia)].requires_grad) return;
                const Mat& x = t.val(ia);
                t.grad_ref(ia).array() +=
                    t.grad_ref(self).array() *
                    ((x.array() > lo) && (x.array() < hi)).cast<double>();
              });
}

Var Tape::min(Var a, Var b) {
  require_same_shape(value(a), value(b), "min");
  const int ia = a.idx_, ib = b.idx_;
  return push(value(a).cwiseMin(value(b)), "min", needs_grad(a) || needs_grad(b),
              [ia, ib](Tape& t, int self) {
                const Mat& g = t.grad_ref(self);
                const Eigen::ArrayXXd take_a =
                    (t.val(ia).array() <= t.val(ib).array()).cast<double>();
                if (t.nodes_[static_cast<size_t>(ia)].requires_grad)
                  t.grad_ref(ia).array() += g.array() * take_a;
                if (t.nodes_[static_cast<size_t>(ib)].requires_grad)
                  t.grad_ref(ib).array() += g.array() * (1.0 - take_a);
              });
}

Var Tape::sum(Var a) {
  const int ia = a.idx_;
  return push(Mat::Constant(1, 1, value(a).sum()), "sum", needs_grad(a),
              [ia](Tape& t, int self) {
                if (!t.nodes_[static_cast<size_t>(ia)].requires_grad) return;
                t.grad_ref(ia).array() += t.grad_ref(self)(0, 0);
              });
}

Var Tape::mean(Var a) {
  const int ia = a.idx_;
  const double n = static_cast<double>(value(a).size());
  return push(Mat::Constant(1, 1, value(a).mean()), "mean", needs_grad(a),
              [ia, n](Tape& t, int self) {
                if (!t.nodes_[static_cast<size_t>(ia)].requires_grad) return;
                t.grad_ref(ia).array() += t.grad_ref(self)(0, 0) / n;
              });
}

Var Tape::categorical_logprob(Var logits, const std::vector<int>& index) {
  const Mat& L = value(logits);
  if (static_cast<Eigen::Index>(index.size()) != L.rows()) {
    throw std::invalid_argument("categorical_logprob: one index per row required");
  }
  const Eigen::Index k_count = L.cols();
  for (int k : index) {
    if (k < 0 || k >= k_count) throw std::out_of_range("categorical_logprob: index out of range");
  }
  Mat p = softmax_rows(L);
  Mat out(L.rows(), 1);
  for (Eigen::Index i = 0; i < L.rows(); ++i) {
    const double m = L.row(i).maxCoeff();
    const double lse = m + std::log((L.row(i).array() - m).exp().sum());
    out(i, 0) = L(i, index[static_cast<size_t>(i)]) - lse;
  }
  const int il = logits.idx_;
  return push(std::move(out), "categorical_logprob", needs_grad(logits),
              [il, p = std::move(p), index](Tape& t, int self) {
                if (!t.nodes_[static_cast<size_t>(il)].requires_grad) return;
                const Mat& g = t.grad_ref(self);
                Mat& gl = t.grad_ref(il);
                for (Eigen::Index i = 0; i < p.rows(); ++i) {
                  gl.row(i) -= g(i, 0) * p.row(i);
                  gl(i, index[static_cast<size_t>(i)]) += g(i, 0);
                }
              });
}

Var Tape::categorical_entropy(Var logits) {
  const Mat& L = value(logits);
  Mat p = softmax_rows(L);
  Mat out(L.rows(), 1);
  for (Eigen::Index i = 0; i < L.rows(); ++i) {
    double h = 0.0;
    for (Eigen::Index j = 0; j < L.cols(); ++j) {
      if (p(i, j) > 0.0) h -= p(i, j) * std::log(p(i, j));
    }
    out(i, 0) = h;
  }
  const int il = logits.idx_;
  Mat h_col = out;
  return push(std::move(out), "categorical_entropy", needs_grad(logits),
              [il, p = std::move(p), h_col = std::move(h_col)](Tape& t, int self) {
                if (!t.nodes_[static_cast<size_t>(il)].requires_grad) return;
                const Mat& g = t.grad_ref(self);
                Mat& gl = t.grad_ref(il);
                for (Eigen::Index i = 0; i < p.rows(); ++i) {
                  for (Eigen::Index j = 0; j < p.cols(); ++j) {
                    const double logp = p(i, j) > 0.0 ? std::log(p(i, j)) : 0.0;
                    gl(i, j) -= g(i, 0) * p(i, j) * (logp + h_col(i, 0));
                  }
                }
              });
}

Var Tape::gaussian_logprob(Var mean, Var log_std, const Mat& actions) {
  const Mat& mu = value(mean);
  const Mat& s = value(log_std);
  require_same_shape(mu, actions, "gaussian_logprob");
  if (s.rows() != 1 || s.cols() != mu.cols()) {
    throw std::invalid_argument("gaussian_logprob: log_std must be 1 x action_dim");
  }
  const Eigen::Index d = mu.cols();
  Mat inv_sigma_row = (-s.row(0).array()).exp().matrix();
  Mat z(mu.rows(), d);
  for (Eigen::Index i = 0; i < mu.rows(); ++i) {
    z.row(i) = (actions.row(i) - mu.row(i)).cwiseProduct(inv_sigma_row.row(0));
  }
  Mat out(mu.rows(), 1);
  const double base = -0.5 * static_cast<double>(d) * kLogTwoPi - s.row(0).sum();
  for (Eigen::Index i = 0; i < mu.rows(); ++i) {
    out(i, 0) = base - 0.5 * z.row(i).squaredNorm();
  }
  const int im = mean.idx_, is = log_std.idx_;
  return push(std::move(out), "gaussian_logprob", needs_grad(mean) || needs_grad(log_std),
              [im, is, z = std::move(z), inv_sigma_row = std::move(inv_sigma_row)](
                  Tape& t, int self) {
                const Mat& g = t.grad_ref(self);
                if (t.nodes_[static_cast<size_t>(im)].requires_grad) {
                  Mat& gm = t.grad_ref(im);
                  for (Eigen::Index i = 0; i < z.rows(); ++i) {
                    gm.row(i).array() +=
                        g(i, 0) * z.row(i).array() * inv_sigma_row.row(0).array();
                  }
                }
                if (t.nodes_[static_cast<size_t>(is)].requires_grad) {
                  Mat& gs = t.grad_ref(is);
                  for (Eigen::Index i = 0; i < z.rows(); ++i) {
                    gs.row(0).array() += g(i, 0) * (z.row(i).array().square() - 1.0);
                  }
                }
              });
}

double Tape::backward(Var out) {
  if (out.idx_ < 0 || static_cast<size_t>(out.idx_) >= nodes_.size()) {
    throw std::invalid_argument("backward: invalid node");
  }
  Node& top = nodes_[static_cast<size_t>(out.idx_)];
  if (top.value.rows() != 1 || top.value.cols() != 1) {
    throw std::invalid_argument("backward: output must be a 1x1 scalar");
  }
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].value.allFinite()) {
      throw std::runtime_error("non-finite value in op '" + std::string(nodes_[i].op) +
                               "' (node " + std::to_string(i) + ")");
    }
  }
  for (Node& n : nodes_) {
    n.grad = Mat::Zero(n.value.rows(), n.value.cols());
  }
  top.grad(0, 0) = 1.0;
  for (int i = out.idx_; i >= 0; --i) {
    Node& n = nodes_[static_cast<size_t>(i)];
    if (n.requires_grad && n.back) n.back(*this, i);
  }
  return top.value(0, 0);
}

ParamLeaves::ParamLeaves(Tape& tape, const ParamVector& params) : params_(&params) {
  vars_.reserve(static_cast<size_t>(params.segment_count()));
  for (int i = 0; i < params.segment_count(); ++i) {
    vars_.push_back(tape.leaf(params.seg(i)));
  }
}

Var ParamLeaves::at(std::string_view name) const {
  const int i = params_->index_of(name);
  if (i < 0) throw std::out_of_range("no param segment named '" + std::string(name) + "'");
  return vars_[static_cast<size_t>(i)];
}

ParamVector ParamLeaves::grads(const Tape& tape) const {
  ParamVector g(params_->layout());
  for (int i = 0; i < params_->segment_count(); ++i) {
    g.seg(i) = tape.grad(vars_[static_cast<size_t>(i)]);
  }
  return g;
}

GradResult grad_of_scalar(const std::function<Var(Tape&, const ParamLeaves&)>& f,
                          const ParamVector& params) {
  Tape tape;
  ParamLeaves leaves(tape, params);
  Var out = f(tape, leaves);
  GradResult r;
  r.value = tape.backward(out);
  r.grad = leaves.grads(tape);
  return r;
}

}  // namespace mlsh::numerics
