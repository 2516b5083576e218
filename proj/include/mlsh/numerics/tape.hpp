#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mlsh/numerics/param_vector.hpp"

namespace mlsh::numerics {

class Tape;

// Handle to one node of a Tape.
class Var {
 public:
  Var() = default;
  int id() const { return idx_; }

 private:
  friend class Tape;
  explicit Var(int idx) : idx_(idx) {}
  int idx_ = -1;
};

// Reverse-mode tape over dense matrices. Forward calls append nodes;
// backward() seeds a 1x1 output with 1 and walks the tape in reverse.
// Subgradient convention at kinks: clamp passes zero outside the range,
// min routes to the smaller argument (ties to the first).
class Tape {
 public:
  Var leaf(const Mat& value) { return push(value, "leaf", true, {}); }
  Var constant(const Mat& value) { return push(value, "constant", false, {}); }
  Var constant(double value) { return constant(Mat::Constant(1, 1, value)); }

  Var matmul(Var a, Var b);
  Var add(Var a, Var b);       // same shape
  Var add_row(Var a, Var row); // a[m x n] + row[1 x n], broadcast over rows
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);       // elementwise
  Var scale(Var a, double c);
  Var add_scalar(Var a, double c);
  Var tanh(Var a);
  Var exp(Var a);
  Var log(Var a);
  Var square(Var a);
  Var clamp(Var a, double lo, double hi);
  Var min(Var a, Var b);
  Var sum(Var a);   // 1x1
  Var mean(Var a);  // 1x1

  // log pi(index | softmax(logits)) per row, m x 1
  Var categorical_logprob(Var logits, const std::vector<int>& index);
  // entropy of softmax(logits) per row, m x 1
  Var categorical_entropy(Var logits);
  // diagonal Gaussian log density of `actions` under (mean, exp(log_std)), m x 1
  Var gaussian_logprob(Var mean, Var log_std, const Mat& actions);

  const Mat& value(Var v) const { return nodes_[static_cast<size_t>(v.idx_)].value; }
  const Mat& grad(Var v) const { return nodes_[static_cast<size_t>(v.idx_)].grad; }
  double scalar(Var v) const { return value(v)(0, 0); }
  size_t size() const { return nodes_.size(); }

  // Differentiates a 1x1 node; returns its value. Throws if any node value
  // on the tape is non-finite, naming the first offending op.
  double backward(Var out);

 private:
  struct Node {
    Mat value;
    Mat grad;
    const char* op;
    bool requires_grad;
    std::function<void(Tape&, int)> back;
  };

  Var push(Mat value, const char* op, bool requires_grad,
           std::function<void(Tape&, int)> back);
  bool needs_grad(Var v) const { return nodes_[static_cast<size_t>(v.idx_)].requires_grad; }
  Mat& grad_ref(int i) { return nodes_[static_cast<size_t>(i)].grad; }
  const Mat& val(int i) const { return nodes_[static_cast<size_t>(i)].value; }

  std::vector<Node> nodes_;
};

// One differentiable leaf per segment of a ParamVector.
class ParamLeaves {
 public:
  ParamLeaves(Tape& tape, const ParamVector& params);

  Var at(std::string_view name) const;
  Var at(int segment_index) const { return vars_.at(static_cast<size_t>(segment_index)); }

  // Gathers the leaves' gradients into a ParamVector with the same layout.
  // Valid after Tape::backward.
  ParamVector grads(const Tape& tape) const;

 private:
  const ParamVector* params_;
  std::vector<Var> vars_;
};

struct GradResult {
  double value = 0.0;
  ParamVector grad;
};

// Value and gradient of a scalar function built from tape operations.
GradResult grad_of_scalar(const std::function<Var(Tape&, const ParamLeaves&)>& f,
                          const ParamVector& params);

}  // namespace mlsh::numerics
