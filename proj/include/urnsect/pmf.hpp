#pragma once

#include <cstdint>
#include <vector>

#include "urnsect/combinatorics.hpp"

namespace urnsect {

/// Finite distribution over consecutive integer outcomes starting at
/// support_min. Leading and trailing masses below 1e-300 are trimmed on
/// construction, so the first and last listed probabilities are positive.
class Pmf {
 public:
  static constexpr double kTrimThreshold = 1e-300;

  Pmf() = default;
  Pmf(std::int64_t support_min, std::vector<double> probabilities);

  /// Point mass at `outcome`.
  static Pmf point_mass(std::int64_t outcome);

  std::int64_t support_min() const { return support_min_; }
  std::int64_t support_max() const {
    return support_min_ + static_cast<std::int64_t>(probabilities_.size()) - 1;
  }
  const std::vector<double>& probabilities() const { return probabilities_; }
  bool empty() const { return probabilities_.empty(); }

  bool in_support(std::int64_t x) const {
    return !empty() && x >= support_min_ && x <= support_max();
  }
  /// P(X = x); 0 outside the support.
  double operator()(std::int64_t x) const;

  double total() const;
  double mean() const;
  double variance() const;

  /// P(X <= x).
  double cdf(std::int64_t x) const;
  /// P(X >= x).
  double sf(std::int64_t x) const;

 private:
  std::int64_t support_min_ = 0;
  std::vector<double> probabilities_;
};

/// Same shape as Pmf with exact rational masses; exact zeros are trimmed.
class ExactPmf {
 public:
  ExactPmf() = default;
  ExactPmf(std::int64_t support_min, std::vector<ExactRational> probabilities);

  std::int64_t support_min() const { return support_min_; }
  std::int64_t support_max() const {
    return support_min_ + static_cast<std::int64_t>(probabilities_.size()) - 1;
  }
  const std::vector<ExactRational>& probabilities() const { return probabilities_; }

  ExactRational operator()(std::int64_t x) const;
  ExactRational total() const;
  Pmf to_pmf() const;

  friend bool operator==(const ExactPmf&, const ExactPmf&) = default;

 private:
  std::int64_t support_min_ = 0;
  std::vector<ExactRational> probabilities_;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  /// Set when the closed form is undefined (n = 1) and variance is reported as 0.
  bool degenerate = false;
};

}  // namespace urnsect
