#include "urnsect/hypothesis.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "urnsect/errors.hpp"

namespace urnsect {
namespace {

using Int = std::int64_t;

// Sums P(x) for x in [lo, hi], starting from the end farther from the mode
// so that small terms are added first.
double range_sum(const Pmf& p, Int lo, Int hi, bool from_high) {
  lo = std::max(lo, p.support_min());
  hi = std::min(hi, p.support_max());
  double s = 0.0;
  if (from_high) {
    for (Int x = hi; x >= lo; --x) s += p(x);
  } else {
    for (Int x = lo; x <= hi; ++x) s += p(x);
  }
  return s;
}

double upper_tail(const Pmf& p, Int x) {
  const double upper = range_sum(p, x, p.support_max(), true);
  const double lower = range_sum(p, p.support_min(), x - 1, false);
  return upper <= lower ? upper : 1.0 - lower;
}

double lower_tail(const Pmf& p, Int x) {
  const double lower = range_sum(p, p.support_min(), x, false);
  const double upper = range_sum(p, x + 1, p.support_max(), true);
  return lower <= upper ? lower : 1.0 - upper;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
  return out;
}

}  // namespace

TestResult tail_test(const Pmf& null, std::int64_t observed, Tail tail, std::string parameters) {
  TestResult result{observed, tail, 1.0, std::move(parameters), false};
  if (!null.in_support(observed)) {
    result.out_of_support = true;
    return result;
  }
  double p = 1.0;
  switch (tail) {
    case Tail::greater:
      p = upper_tail(null, observed);
      break;
    case Tail::less:
      p = lower_tail(null, observed);
      break;
    case Tail::two_sided: {
      const double threshold = null(observed) * (1.0 + 1e-12);
      std::vector<double> small;
      for (double q : null.probabilities()) {
        if (q <= threshold) small.push_back(q);
      }
      std::sort(small.begin(), small.end());
      p = 0.0;
      for (double q : small) p += q;
      break;
    }
  }
  result.p_value = std::clamp(p, std::numeric_limits<double>::min(), 1.0);
  return result;
}

TestResult tail_test(const Pmf& null, std::pair<std::int64_t, std::int64_t> attainable,
                     std::int64_t observed, Tail tail, std::string parameters) {
  if (observed < attainable.first || observed > attainable.second || null.in_support(observed)) {
    return tail_test(null, observed, tail, std::move(parameters));
  }
  const double floor = std::numeric_limits<double>::min();
  const bool below = null.empty() || observed < null.support_min();
  double p = floor;
  if (tail == Tail::greater && below) p = 1.0;
  if (tail == Tail::less && !below) p = 1.0;
  return {observed, tail, p, std::move(parameters), false};
}

TestResult intersection_test(const DistributionSpec& spec, std::int64_t observed, Tail tail) {
  if (observed < 0) throw InvalidParameter("observed intersection must be >= 0");
  return tail_test(pmf(spec), support_bounds(spec), observed, tail, describe(spec));
}

Pmf pmf_distance(const Pmf& p1, const Pmf& p2) {
  if (p1.empty() || p2.empty()) return {};
  const Int max_d = std::max(p1.support_max() - p2.support_min(), p2.support_max() - p1.support_min());
  std::vector<double> probs(std::max<Int>(max_d, 0) + 1, 0.0);
  for (Int v1 = p1.support_min(); v1 <= p1.support_max(); ++v1) {
    for (Int v2 = p2.support_min(); v2 <= p2.support_max(); ++v2) {
      probs[std::abs(v1 - v2)] += p1(v1) * p2(v2);
    }
  }
  return Pmf(0, std::move(probs));
}

Pmf pmf_distance(const DistancePair& pair) {
  return pmf_distance(pmf(pair.first), pmf(pair.second));
}

TestResult distance_test(const DistancePair& pair, std::int64_t observed_distance, Tail tail) {
  if (observed_distance < 0) throw InvalidParameter("observed distance must be >= 0");
  // |v1 - v2| reaches every value between the gap of the two ranges and
  // their widest spread.
  const auto [lo1, hi1] = support_bounds(pair.first);
  const auto [lo2, hi2] = support_bounds(pair.second);
  const std::pair<Int, Int> attainable{std::max<Int>({lo2 - hi1, lo1 - hi2, 0}),
                                       std::max(hi1 - lo2, hi2 - lo1)};
  return tail_test(pmf_distance(pair), attainable, observed_distance, tail,
                   "distance first=(" + describe(pair.first) + ") second=(" +
                       describe(pair.second) + ")");
}

std::int64_t distance_pair_count(std::int64_t r_lo, std::int64_t r_hi, std::int64_t s_lo,
                                 std::int64_t s_hi, std::int64_t d) {
  const Int r = r_hi - r_lo + 1;
  const Int s = s_hi - s_lo + 1;
  if (d == 0) return std::max<Int>(std::min(r_hi, s_hi) - std::max(r_lo, s_lo) + 1, 0);
  return std::max<Int>(std::min(r, s - d), 0) + std::max<Int>(std::min(s, r - d), 0);
}

EnrichmentMatrix enrichment_matrix(const MembershipTable& table,
                                   const std::vector<std::vector<std::string>>& groups) {
  if (groups.size() < 2) throw InvalidParameter("enrichment needs at least two groups");
  const Int n = static_cast<Int>(table.size());
  const Int q = table.duplicated_count();
  if (q > 0 && groups.size() != 2) {
    throw InvalidParameter("a universe with duplicated categories supports exactly two groups");
  }

  EnrichmentMatrix matrix;
  const auto& sets = table.sets();
  for (const auto& group : groups) {
    if (group.empty()) throw InvalidParameter("enrichment group is empty");
    std::vector<std::size_t> idx;
    for (const auto& name : group) {
      auto it = std::find_if(sets.begin(), sets.end(), [&](const auto& s) { return s.name == name; });
      if (it == sets.end()) throw DataError("no set named '" + name + "'");
      idx.push_back(static_cast<std::size_t>(it - sets.begin()));
    }
    matrix.groups.push_back(std::move(idx));
  }
  for (std::size_t i : matrix.groups[0]) {
    if (!sets[i].doubled.empty()) {
      throw DataError("set '" + sets[i].name + "' lists a category twice but belongs to group 1");
    }
  }

  std::map<std::vector<Int>, Pmf> nulls;
  std::vector<std::size_t> pick(groups.size(), 0);
  std::vector<int> hits(table.size());
  while (true) {
    EnrichmentCell cell;
    std::vector<Int> sizes;
    std::vector<std::string> names;
    std::fill(hits.begin(), hits.end(), 0);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& set = sets[matrix.groups[g][pick[g]]];
      cell.sets.push_back(matrix.groups[g][pick[g]]);
      sizes.push_back(set.ball_count());
      names.push_back(set.name);
      for (std::size_t m : set.members) ++hits[m];
    }
    cell.intersection = std::count(hits.begin(), hits.end(), static_cast<int>(groups.size()));

    DistributionSpec spec = q > 0 ? DistributionSpec(DuplicateUrnPair(n, sizes[0], sizes[1], q))
                                  : DistributionSpec(UrnEnsemble(n, sizes));
    std::vector<Int> key = sizes;
    if (q == 0) std::sort(key.begin(), key.end());
    auto it = nulls.find(key);
    if (it == nulls.end()) it = nulls.emplace(key, pmf(spec)).first;
    cell.test = tail_test(it->second, support_bounds(spec), cell.intersection, Tail::greater,
                          describe(spec) + " sets=" + join_names(names));
    matrix.cells.push_back(std::move(cell));

    // Odometer with the last group fastest.
    std::size_t g = groups.size();
    while (g > 0) {
      --g;
      if (++pick[g] < matrix.groups[g].size()) break;
      pick[g] = 0;
      if (g == 0) return matrix;
    }
  }
}

}  // namespace urnsect
