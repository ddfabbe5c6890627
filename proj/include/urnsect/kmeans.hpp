#pragma once

#include <cstdint>
#include <vector>

namespace urnsect {

struct ClusterAssignment {
  std::size_t k = 0;
  std::vector<std::size_t> labels;
  /// Within-cluster sum of squared Euclidean distances.
  double inertia = 0.0;
  std::uint64_t seed = 0;
  /// Inertia after each assignment step of the winning restart.
  std::vector<double> inertia_history;
};

/// Lloyd's algorithm with Euclidean distance. Each restart seeds its centroids
/// with k distinct rows chosen uniformly at random, iterates until the
/// assignment stops changing or `max_iterations` is reached, and the restart
/// with the lowest inertia wins. An emptied cluster keeps its old centroid.
/// Throws InvalidParameter unless 1 <= k <= rows and all rows share a width.
ClusterAssignment kmeans(const std::vector<std::vector<double>>& rows, std::size_t k,
                         std::uint64_t seed, std::size_t restarts = 25,
                         std::size_t max_iterations = 300);

/// Adjusted Rand index between two labelings of the same items.
double adjusted_rand_index(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace urnsect
