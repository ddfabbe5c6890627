#pragma once

// Exact tests on intersection statistics: enrichment/depletion of a single
// intersection, the distance between two intersections, and enrichment
// matrices over groups of category sets.

#include <cstdint>
#include <string>
#include <vector>

#include "urnsect/distributions.hpp"
#include "urnsect/membership.hpp"

namespace urnsect {

struct TestResult {
  std::int64_t statistic = 0;
  Tail tail = Tail::greater;
  double p_value = 1.0;
  /// Echo of the null distribution's parameters.
  std::string parameters;
  /// The statistic lies outside the null support; p_value is then 1.
  bool out_of_support = false;
};

/// Tail probability of `observed` under `null`.
///   greater: sum_{x >= observed} P(x)    less: sum_{x <= observed} P(x)
///   two-sided: sum of P(x) over outcomes no more likely than the observed one
/// Each one-sided tail is taken from whichever side is smaller and
/// complemented when that side is the other one.
/// Outside the PMF's listed outcomes the result is p = 1, flagged out of support.
TestResult tail_test(const Pmf& null, std::int64_t observed, Tail tail, std::string parameters = {});
/// As above, but `attainable` is the statistic's true range. An attainable
/// outcome beyond the listed ones (its mass underflowed) is not flagged: its
/// extreme tails get the smallest normal double and the opposite tails 1.
TestResult tail_test(const Pmf& null, std::pair<std::int64_t, std::int64_t> attainable,
                     std::int64_t observed, Tail tail, std::string parameters = {});

/// tail_test against the exact null of `spec`. Throws InvalidParameter for a
/// negative observation.
TestResult intersection_test(const DistributionSpec& spec, std::int64_t observed, Tail tail);

struct DistancePair {
  DistributionSpec first;
  DistributionSpec second;
};

/// Distribution of |v1 - v2| for independent v1 ~ p1, v2 ~ p2.
Pmf pmf_distance(const Pmf& p1, const Pmf& p2);
Pmf pmf_distance(const DistancePair& pair);

TestResult distance_test(const DistancePair& pair, std::int64_t observed_distance, Tail tail);

/// Size of D_d, the set of (v1, v2) in R x S with |v1 - v2| = d, by the case
/// analysis |R n S| (d = 0) and max(min(|R|,|S|-d),0) + max(min(|S|,|R|-d),0)
/// (d > 0). R = [r_lo, r_hi], S = [s_lo, s_hi]. The d > 0 form counts pairs
/// exactly when both ranges start at the same value.
std::int64_t distance_pair_count(std::int64_t r_lo, std::int64_t r_hi, std::int64_t s_lo,
                                 std::int64_t s_hi, std::int64_t d);

struct EnrichmentCell {
  /// One index into MembershipTable::sets() per group.
  std::vector<std::size_t> sets;
  std::int64_t intersection = 0;
  TestResult test;
};

/// Cells in row-major order over (group 0 set, group 1 set, ...): rows are
/// the sets of group 0, columns the combinations of the remaining groups.
struct EnrichmentMatrix {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<EnrichmentCell> cells;

  std::size_t rows() const { return groups.empty() ? 0 : groups[0].size(); }
  std::size_t columns() const { return rows() == 0 ? 0 : cells.size() / rows(); }
  const EnrichmentCell& at(std::size_t row, std::size_t column) const {
    return cells[row * columns() + column];
  }
};

/// One-tailed (greater) tests for every tuple with one set per group. The
/// observed statistic is the number of categories common to all sets of the
/// tuple; the null is pmf_n_urns with n = universe size and a_k = set sizes.
/// When the universe marks duplicated categories there must be exactly two
/// groups and the null is pmf_duplicates (second group drawn from the
/// duplicated urn).
EnrichmentMatrix enrichment_matrix(const MembershipTable& table,
                                   const std::vector<std::vector<std::string>>& groups);

}  // namespace urnsect
