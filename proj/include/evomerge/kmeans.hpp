#pragma once

#include <cstdint>
#include <vector>

namespace evomerge {

struct KMeansResult {
  std::vector<std::vector<double>> centers;
  std::vector<int> labels;
  double inertia = 0.0;  // within-cluster sum of squared distances
  int iterations = 0;
};

// Lloyd's algorithm with k-means++ seeding. A restart stops once no center
// moves more than tol (Euclidean) or after max_iters sweeps; empty clusters
// are reseeded to the point farthest from its assigned center. n_init
// restarts are run with seeds derived from `seed` and the best inertia wins
// (ties broken by restart index). Deterministic for any `jobs`.
//
// Zero-variance clusters keep their member value exactly, so duplicating a
// set of k distinct points and clustering with that k recovers the points
// bit-for-bit.
KMeansResult kmeans(const std::vector<std::vector<double>>& points, int k,
                    std::uint64_t seed, int max_iters = 300, double tol = 1e-6,
                    int n_init = 10, int jobs = 1);

}  // namespace evomerge
