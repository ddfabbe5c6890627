#pragma once

// Log-space and exact evaluation primitives for binomial products and the
// nested sums built from them.
//
// Binomials follow the counting convention: C(m, k) = 0 whenever m < 0,
// k < 0 or k > m. Every sum in the distribution kernels relies on
// out-of-range terms vanishing.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace urnsect {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Natural logarithm of a nonnegative real. The zero element is -inf.
class LogWeight {
 public:
  constexpr LogWeight() = default;
  constexpr explicit LogWeight(double log_value) : value_(log_value) {}

  static constexpr LogWeight zero() {
    return LogWeight(-std::numeric_limits<double>::infinity());
  }
  static constexpr LogWeight one() { return LogWeight(0.0); }
  static LogWeight from_linear(double x) {
    return x > 0.0 ? LogWeight(std::log(x)) : zero();
  }

  constexpr double value() const { return value_; }
  constexpr bool is_zero() const {
    return value_ == -std::numeric_limits<double>::infinity();
  }
  double linear() const { return std::exp(value_); }

  friend constexpr LogWeight operator*(LogWeight lhs, LogWeight rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return zero();
    return LogWeight(lhs.value_ + rhs.value_);
  }
  LogWeight& operator*=(LogWeight rhs) { return *this = *this * rhs; }

  // Division by the zero element is undefined; callers guard.
  friend constexpr LogWeight operator/(LogWeight lhs, LogWeight rhs) {
    if (lhs.is_zero()) return zero();
    return LogWeight(lhs.value_ - rhs.value_);
  }

  friend constexpr bool operator==(LogWeight, LogWeight) = default;

 private:
  double value_ = -std::numeric_limits<double>::infinity();
};

/// ln C(m, k), or the zero element outside 0 <= k <= m.
LogWeight log_binomial(std::int64_t m, std::int64_t k);

/// ln k! from the shared table. Requires k >= 0.
double log_factorial(std::int64_t k);

/// ln sum exp(t_i): shifted by the largest term, then Neumaier-compensated.
LogWeight log_sum_exp(std::span<const LogWeight> terms);

/// C(m, k) as an integer, 0 outside 0 <= k <= m.
BigInt exact_binomial_count(std::int64_t m, std::int64_t k);

/// C(m, k) as a rational, 0/1 outside 0 <= k <= m.
ExactRational exact_binomial(std::int64_t m, std::int64_t k);

/// Unit-argument 3F2 with integer parameters, summed exactly:
///   sum_i (u1)_i (u2)_i (u3)_i / (i! (l1)_i (l2)_i).
/// The series must terminate (some upper parameter is a nonpositive integer)
/// at an index <= truncation, and no lower rising factorial may vanish up to
/// that index. Throws InvalidParameter otherwise.
ExactRational hyp3f2_terminating_exact(const std::array<std::int64_t, 3>& upper,
                                       const std::array<std::int64_t, 2>& lower,
                                       std::int64_t truncation);

double hyp3f2_terminating(const std::array<std::int64_t, 3>& upper,
                          const std::array<std::int64_t, 2>& lower,
                          std::int64_t truncation);

/// Nearest double to an exact rational.
double to_double(const ExactRational& x);

/// ln x for a positive rational, without overflowing on huge terms.
double log_of(const ExactRational& x);

}  // namespace urnsect
