#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wafomlab {

/// N points of [0,1)^S stored row-major.
class PointSet {
 public:
  explicit PointSet(int dimensions) : dimensions_(dimensions) {}

  int dimensions() const { return dimensions_; }
  std::size_t size() const { return dimensions_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(dimensions_); }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * static_cast<std::size_t>(dimensions_),
                                                   static_cast<std::size_t>(dimensions_));
  }
  void push_back(std::span<const double> x) { coords_.insert(coords_.end(), x.begin(), x.end()); }
  void reserve(std::size_t points) { coords_.reserve(points * static_cast<std::size_t>(dimensions_)); }

 private:
  int dimensions_;
  std::vector<double> coords_;
};

}  // namespace wafomlab
