#include "urnsect/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "urnsect/errors.hpp"

namespace urnsect {
namespace {

using Row = std::vector<double>;

double squared_distance(const Row& x, const Row& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] - y[i];
    d += t * t;
  }
  return d;
}

ClusterAssignment lloyd(const std::vector<Row>& rows, std::size_t k, std::mt19937_64& rng,
                        std::size_t max_iterations) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Row> centroids;
  for (std::size_t c = 0; c < k; ++c) centroids.push_back(rows[order[c]]);

  ClusterAssignment result;
  result.k = k;
  result.labels.assign(rows.size(), k);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    double inertia = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = squared_distance(rows[r], centroids[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (result.labels[r] != best) {
        result.labels[r] = best;
        changed = true;
      }
      inertia += best_d;
    }
    result.inertia = inertia;
    result.inertia_history.push_back(inertia);
    if (!changed) break;

    std::vector<Row> sums(k, Row(rows[0].size(), 0.0));
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto& s = sums[result.labels[r]];
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += rows[r][i];
      ++sizes[result.labels[r]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] == 0) continue;
      for (std::size_t i = 0; i < sums[c].size(); ++i) {
        centroids[c][i] = sums[c][i] / static_cast<double>(sizes[c]);
      }
    }
  }
  return result;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

ClusterAssignment kmeans(const std::vector<std::vector<double>>& rows, std::size_t k,
                         std::uint64_t seed, std::size_t restarts, std::size_t max_iterations) {
  if (k < 1 || k > rows.size()) {
    throw InvalidParameter("kmeans requires 1 <= k <= rows (got k=" + std::to_string(k) +
                           ", rows=" + std::to_string(rows.size()) + ")");
  }
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw InvalidParameter("kmeans rows differ in width");
  }
  restarts = std::max<std::size_t>(restarts, 1);

  ClusterAssignment best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (std::size_t run = 0; run < restarts; ++run) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(run)};
    std::mt19937_64 rng(seq);
    ClusterAssignment candidate = lloyd(rows, k, rng, max_iterations);
    if (candidate.inertia < best.inertia) best = std::move(candidate);
  }
  best.seed = seed;
  return best;
}

double adjusted_rand_index(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) throw InvalidParameter("labelings differ in length");
  if (a.size() < 2) return 1.0;
  std::map<std::pair<std::size_t, std::size_t>, double> joint;
  std::map<std::size_t, double> row, col;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1.0;
    row[a[i]] += 1.0;
    col[b[i]] += 1.0;
  }
  double index = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (const auto& [key, count] : joint) index += choose2(count);
  for (const auto& [key, count] : row) sum_a += choose2(count);
  for (const auto& [key, count] : col) sum_b += choose2(count);
  const double expected = sum_a * sum_b / choose2(static_cast<double>(a.size()));
  const double maximum = 0.5 * (sum_a + sum_b);
  if (maximum == expected) return 1.0;
  return (index - expected) / (maximum - expected);
}

}  // namespace urnsect
