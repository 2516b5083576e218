#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlsh::numerics {

using Mat = Eigen::MatrixXd;

// One named block of a flat parameter vector, stored column-major.
struct Segment {
  std::string name;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index size() const { return rows * cols; }
};

// Flat array of real parameters with a named (name, shape) layout.
// Segment names are unique; total length equals the sum of segment sizes.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::vector<Segment> layout);

  Eigen::Index size() const { return static_cast<Eigen::Index>(values_.size()); }
  const std::vector<Segment>& layout() const { return layout_; }
  bool same_layout(const ParamVector& other) const;

  int segment_count() const { return static_cast<int>(layout_.size()); }
  int index_of(std::string_view name) const;  // -1 when absent
  bool has(std::string_view name) const { return index_of(name) >= 0; }

  Eigen::Map<Mat> seg(int i);
  Eigen::Map<const Mat> seg(int i) const;
  Eigen::Map<Mat> seg(std::string_view name);
  Eigen::Map<const Mat> seg(std::string_view name) const;

  Eigen::Map<Eigen::VectorXd> flat() {
    return {values_.data(), static_cast<Eigen::Index>(values_.size())};
  }
  Eigen::Map<const Eigen::VectorXd> flat() const {
    return {values_.data(), static_cast<Eigen::Index>(values_.size())};
  }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  void set_zero() { std::fill(values_.begin(), values_.end(), 0.0); }

  bool operator==(const ParamVector& other) const {
    return same_layout(other) && values_ == other.values_;
  }

 private:
  int checked_index(std::string_view name) const;

  std::vector<Segment> layout_;
  std::vector<Eigen::Index> offsets_;
  std::vector<double> values_;
};

}  // namespace mlsh::numerics
