#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace hosc::detail {

// Neumaier's compensated summation. Terms are consumed in call order, so a
// fixed loop order gives bit-reproducible results.
template <class T = double>
class Accumulator {
 public:
  void add(T x) {
    using std::abs;
    T t = sum_ + x;
    if (abs(sum_) >= abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_ += abs(x);
  }
  T value() const { return sum_ + comp_; }
  // Sum of |terms|; value()/abs_sum() measures cancellation.
  T abs_sum() const { return abs_; }

 private:
  T sum_{0};
  T comp_{0};
  T abs_{0};
};

// log(sum exp(v_i)) without overflow.
inline double log_sum_exp(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  Accumulator<> acc;
  for (double x : v) acc.add(std::exp(x - m));
  return m + std::log(acc.value());
}

// Signed value represented as sign * exp(log_abs). sign == 0 means exact zero.
struct LogValue {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

}  // namespace hosc::detail
