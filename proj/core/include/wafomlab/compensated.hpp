#pragma once

#include <cmath>

namespace wafomlab {

/// Compensated summation with Knuth's branch-free TwoSum: each step recovers
/// the exact rounding error of sum + value, whichever operand is larger. This
/// matters when O(1) terms cancel to a tiny total, where the running sum keeps
/// changing sign and a magnitude branch would be unpredictable.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    const double z = t - sum_;
    compensation_ += (sum_ - (t - z)) + (value - z);
    sum_ = t;
  }

  CompensatedSum& operator+=(double value) {
    add(value);
    return *this;
  }

  /// Folds another partial sum in; used for ordered reductions of per-block sums.
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace wafomlab
