#pragma once

// Ground truth independent of the summation kernels: exhaustive enumeration
// of equally likely draws (exact) and seeded Monte Carlo simulation.

#include <cstdint>
#include <string>
#include <vector>

#include "urnsect/distributions.hpp"

namespace urnsect {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Number of equally likely joint draws: prod_k C(balls_k, draws_k).
/// Saturates at UINT64_MAX.
std::uint64_t outcome_count(const DistributionSpec& spec);

/// Exact distribution by visiting every joint draw of labelled balls and
/// tallying the statistic. Throws BudgetExceeded above `budget` outcomes and
/// InvalidParameter for more than 64 categories.
ExactPmf enumerate_exact(const DistributionSpec& spec,
                         std::uint64_t budget = kDefaultEnumerationBudget);

struct SimulationReport {
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  DistributionSpec parameters{UrnEnsemble(1, {0, 0})};
  /// counts[i] replicates produced outcome count_min + i.
  std::int64_t count_min = 0;
  std::vector<std::uint64_t> counts;
  /// counts / draws.
  Pmf empirical;
};

/// Draws without replacement via partial Fisher-Yates over ball labels.
/// Replicates are split into fixed-size shards whose RNG streams derive from
/// (seed, shard index), so the report does not depend on `workers`.
SimulationReport simulate(const DistributionSpec& spec, std::uint64_t draws, std::uint64_t seed,
                          unsigned workers = 1);

/// 1/2 sum |p(x) - q(x)| over the union of supports.
double total_variation(const Pmf& p, const Pmf& q);

}  // namespace urnsect
