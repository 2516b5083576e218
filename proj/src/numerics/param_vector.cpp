#include "mlsh/numerics/param_vector.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace mlsh::numerics {

ParamVector::ParamVector(std::vector<Segment> layout) : layout_(std::move(layout)) {
  std::unordered_set<std::string_view> seen;
  Eigen::Index total = 0;
  offsets_.reserve(layout_.size());
  for (const Segment& s : layout_) {
    if (s.rows < 1 || s.cols < 1) {
      throw std::invalid_argument("param segment '" + s.name + "' has non-positive shape");
    }
    if (!seen.insert(s.name).second) {
      throw std::invalid_argument("duplicate param segment name '" + s.name + "'");
    }
    offsets_.push_back(total);
    total += s.size();
  }
  values_.assign(static_cast<size_t>(total), 0.0);
}

bool ParamVector::same_layout(const ParamVector& other) const {
  if (layout_.size() != other.layout_.size()) return false;
  for (size_t i = 0; i < layout_.size(); ++i) {
    const Segment& a = layout_[i];
    const Segment& b = other.layout_[i];
    if (a.name != b.name || a.rows != b.rows || a.cols != b.cols) return false;
  }
  return true;
}

int ParamVector::index_of(std::string_view name) const {
  for (size_t i = 0; i < layout_.size(); ++i) {
    if (layout_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int ParamVector::checked_index(std::string_view name) const {
  const int i = index_of(name);
  if (i < 0) throw std::out_of_range("no param segment named '" + std::string(name) + "'");
  return i;
}

Eigen::Map<Mat> ParamVector::seg(int i) {
  const Segment& s = layout_.at(static_cast<size_t>(i));
  return {values_.data() + offsets_[static_cast<size_t>(i)], s.rows, s.cols};
}

Eigen::Map<const Mat> ParamVector::seg(int i) const {
  const Segment& s = layout_.at(static_cast<size_t>(i));
  return {values_.data() + offsets_[static_cast<size_t>(i)], s.rows, s.cols};
}

Eigen::Map<Mat> ParamVector::seg(std::string_view name) { return seg(checked_index(name)); }

Eigen::Map<const Mat> ParamVector::seg(std::string_view name) const {
  return seg(checked_index(name));
}

}  // namespace mlsh::numerics
