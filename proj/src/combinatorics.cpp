#include "urnsect/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "urnsect/errors.hpp"

namespace urnsect {
namespace {

// ln k! for k = 0..size-1, grown on demand. Entries are prefix sums of ln k
// with Neumaier compensation, so a given entry never changes once written.
class LogFactorialTable {
 public:
  double at(std::int64_t k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(k) < values_.size()) return values_[k];
    }
    std::unique_lock lock(mutex_);
    grow(static_cast<std::size_t>(k) + 1);
    return values_[k];
  }

 private:
  void grow(std::size_t size) {
    if (size <= values_.size()) return;
    std::size_t target = std::max(size, 2 * values_.size());
    values_.reserve(target);
    for (std::size_t k = values_.size(); k < target; ++k) {
      double term = std::log(static_cast<double>(k));
      double t = sum_ + term;
      if (std::abs(sum_) >= std::abs(term)) {
        carry_ += (sum_ - t) + term;
      } else {
        carry_ += (term - t) + sum_;
      }
      sum_ = t;
      values_.push_back(sum_ + carry_);
    }
  }

  std::shared_mutex mutex_;
  // ln 0! = ln 1! = 0; the running sum starts after k = 1.
  std::vector<double> values_{0.0, 0.0};
  double sum_ = 0.0;
  double carry_ = 0.0;
};

LogFactorialTable& factorial_table() {
  static LogFactorialTable table;
  return table;
}

}  // namespace

double log_factorial(std::int64_t k) {
  if (k < 0) throw InvalidParameter("log_factorial of negative argument");
  return factorial_table().at(k);
}

LogWeight log_binomial(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return LogWeight::zero();
  if (k == 0 || k == m) return LogWeight::one();
  auto& table = factorial_table();
  return LogWeight(table.at(m) - table.at(k) - table.at(m - k));
}

LogWeight log_sum_exp(std::span<const LogWeight> terms) {
  double shift = -std::numeric_limits<double>::infinity();
  for (LogWeight t : terms) shift = std::max(shift, t.value());
  if (terms.empty() || std::isinf(shift)) return LogWeight::zero();

  double sum = 0.0;
  double carry = 0.0;
  for (LogWeight t : terms) {
    if (t.is_zero()) continue;
    double x = std::exp(t.value() - shift);
    double s = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - s) + x;
    } else {
      carry += (x - s) + sum;
    }
    sum = s;
  }
  return LogWeight(shift + std::log(sum + carry));
}

BigInt exact_binomial_count(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return BigInt(0);
  k = std::min(k, m - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return result;
}

ExactRational exact_binomial(std::int64_t m, std::int64_t k) {
  return ExactRational(exact_binomial_count(m, k));
}

ExactRational hyp3f2_terminating_exact(const std::array<std::int64_t, 3>& upper,
                                       const std::array<std::int64_t, 2>& lower,
                                       std::int64_t truncation) {
  // Index of the last nonzero term: (u)_i vanishes for i > -u when u <= 0.
  std::int64_t last = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t u : upper) {
    if (u <= 0) last = std::min(last, -u);
  }
  if (last == std::numeric_limits<std::int64_t>::max() || last > truncation) {
    throw InvalidParameter("3F2 series does not terminate within truncation " +
                           std::to_string(truncation));
  }
  // (l)_i vanishes for i > -l when l <= 0; every term up to `last` needs it.
  for (std::int64_t l : lower) {
    if (l <= 0 && last > -l) {
      throw InvalidParameter("3F2 lower parameter " + std::to_string(l) +
                             " reaches zero before the series terminates");
    }
  }

  ExactRational term = 1;
  ExactRational sum = 1;
  for (std::int64_t i = 0; i < last; ++i) {
    BigInt num = BigInt(upper[0] + i) * (upper[1] + i) * (upper[2] + i);
    BigInt den = BigInt(i + 1) * (lower[0] + i) * (lower[1] + i);
    // Boost 1.74 rejects a negative denominator in the two-argument form.
    if (den < 0) {
      num = -num;
      den = -den;
    }
    term *= ExactRational(num, den);
    sum += term;
  }
  return sum;
}

double hyp3f2_terminating(const std::array<std::int64_t, 3>& upper,
                          const std::array<std::int64_t, 2>& lower,
                          std::int64_t truncation) {
  return to_double(hyp3f2_terminating_exact(upper, lower, truncation));
}

double to_double(const ExactRational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  if (num == 0) return 0.0;
  bool negative = num < 0;
  if (negative) num = -num;
  // Scale so the integer quotient carries ~64 significant bits.
  long shift = 64 - (static_cast<long>(boost::multiprecision::msb(num)) -
                     static_cast<long>(boost::multiprecision::msb(den)));
  if (shift > 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  BigInt quotient = num / den;
  double value = std::ldexp(quotient.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -value : value;
}

double log_of(const ExactRational& x) {
  if (x <= 0) throw InvalidParameter("log_of requires a positive argument");
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  long shift = 64 - (static_cast<long>(boost::multiprecision::msb(num)) -
                     static_cast<long>(boost::multiprecision::msb(den)));
  if (shift > 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  BigInt quotient = num / den;
  return std::log(quotient.convert_to<double>()) - static_cast<double>(shift) * std::log(2.0);
}

}  // namespace urnsect
