#pragma once

// Intersection distributions for draws without replacement from several urns
// that share n categories.
//
// Every PMF is evaluated in log space (`urnsect::`) and, for cross-checks,
// with exact integer counts (`urnsect::exact::`). Both routes share the
// summation code and differ only in the arithmetic backend.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "urnsect/pmf.hpp"

namespace urnsect {

/// Symmetric N-urn instance: every urn holds one ball in each of n categories
/// and samples[k] balls are drawn from urn k.
class UrnEnsemble {
 public:
  UrnEnsemble(std::int64_t n, std::vector<std::int64_t> samples);

  std::int64_t n() const { return n_; }
  const std::vector<std::int64_t>& samples() const { return samples_; }
  std::size_t urns() const { return samples_.size(); }

  friend bool operator==(const UrnEnsemble&, const UrnEnsemble&) = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> samples_;
};

/// Two urns over n categories; q categories of the second urn hold two balls,
/// so it contains n + q balls.
class DuplicateUrnPair {
 public:
  DuplicateUrnPair(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t q);

  std::int64_t n() const { return n_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const DuplicateUrnPair&, const DuplicateUrnPair&) = default;

 private:
  std::int64_t n_, a_, b_, q_;
};

/// One urn over n categories with q > 0 duplicated categories; a balls drawn.
/// The statistic is the number of distinct categories drawn.
class SingleUrnSpec {
 public:
  SingleUrnSpec(std::int64_t n, std::int64_t q, std::int64_t a);

  std::int64_t n() const { return n_; }
  std::int64_t q() const { return q_; }
  std::int64_t a() const { return a_; }

  friend bool operator==(const SingleUrnSpec&, const SingleUrnSpec&) = default;

 private:
  std::int64_t n_, q_, a_;
};

using DistributionSpec = std::variant<UrnEnsemble, DuplicateUrnPair, SingleUrnSpec>;

/// Human-readable echo, e.g. "nurn n=100 samples=20,30".
std::string describe(const DistributionSpec& spec);

enum class Tail { greater, less, two_sided };

std::string_view to_string(Tail tail);
/// Accepts "greater", "less", "two-sided" (also "two_sided").
Tail parse_tail(std::string_view text);

/// [max(sum a_k - (N-1) n, 0), min_k a_k]; every v outside has probability 0.
std::pair<std::int64_t, std::int64_t> support_bounds(const UrnEnsemble& ensemble);
/// Every attainable value of the statistic, as a closed range. Duplicate pair:
/// [max(a+b-n-min(b/2,q), 0), min(a,b)]; single urn: [a-min(a/2,q), min(a,n)].
/// Computed PMFs may be narrower where tail masses underflow.
std::pair<std::int64_t, std::int64_t> support_bounds(const DistributionSpec& spec);

// Symmetric urns. The fixed-N forms take the urns in the given order; they
// exist as independent routes to check pmf_n_urns against.
Pmf pmf_two_urns(const UrnEnsemble& ensemble);
Pmf pmf_two_urns_unreduced(const UrnEnsemble& ensemble);
Pmf pmf_three_urns(const UrnEnsemble& ensemble);
/// Three urns via the terminating 3F2 form of the inner sum. Where the usual
/// leading term C(n-a, b-v) vanishes (v < a+b-n) the series is expanded from
/// its first nonzero term instead.
Pmf pmf_three_urns_via_3f2(const UrnEnsemble& ensemble);
Pmf pmf_four_urns(const UrnEnsemble& ensemble);
/// General N >= 2. Urns are sorted by descending sample size first; the
/// nested sum over cross-urn intersections is eliminated one index at a time.
Pmf pmf_n_urns(const UrnEnsemble& ensemble);

/// Closed-form mean and variance. For n = 1 the variance is reported as 0
/// and `degenerate` is set.
Moments moments_n_urns(const UrnEnsemble& ensemble);

/// argmin_k a_k, lowest index on ties.
std::size_t default_small_urn(const UrnEnsemble& ensemble);

/// Binomial(b, prod p_k) with b the small-sample urn and p_k = a_k / n for
/// the others.
Pmf pmf_binomial_approx(const UrnEnsemble& ensemble,
                        std::optional<std::size_t> small_urn = std::nullopt);
Moments binomial_approx_moments(const UrnEnsemble& ensemble,
                                std::optional<std::size_t> small_urn = std::nullopt);

/// Continuity-corrected Gaussian tail with the closed-form moments. Throws
/// InvalidParameter when the variance is not positive.
double normal_approx_pvalue(const UrnEnsemble& ensemble, std::int64_t observed, Tail tail);
/// Gaussian mass of [v - 0.5, v + 0.5] on the exact support.
Pmf pmf_normal_approx(const UrnEnsemble& ensemble);

Pmf pmf_duplicates(const DuplicateUrnPair& pair);
Pmf pmf_single_urn(const SingleUrnSpec& spec);
/// Single urn with every category duplicated (q = n). Requires 1 <= a <= 2n.
Pmf pmf_single_urn_full_dup(std::int64_t n, std::int64_t a);
/// a (1 - (a - 1) / (4n - 2)). Requires a >= 1.
double mean_single_urn_full_dup(std::int64_t n, std::int64_t a);

/// Dispatch: UrnEnsemble -> pmf_n_urns, DuplicateUrnPair -> pmf_duplicates,
/// SingleUrnSpec -> pmf_single_urn.
Pmf pmf(const DistributionSpec& spec);

namespace exact {

ExactPmf pmf_two_urns(const UrnEnsemble& ensemble);
ExactPmf pmf_two_urns_unreduced(const UrnEnsemble& ensemble);
ExactPmf pmf_three_urns(const UrnEnsemble& ensemble);
ExactPmf pmf_three_urns_via_3f2(const UrnEnsemble& ensemble);
ExactPmf pmf_four_urns(const UrnEnsemble& ensemble);
ExactPmf pmf_n_urns(const UrnEnsemble& ensemble);
ExactPmf pmf_duplicates(const DuplicateUrnPair& pair);
ExactPmf pmf_single_urn(const SingleUrnSpec& spec);
ExactPmf pmf_single_urn_full_dup(std::int64_t n, std::int64_t a);
ExactPmf pmf(const DistributionSpec& spec);

}  // namespace exact
}  // namespace urnsect
