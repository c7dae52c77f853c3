#include "evomerge/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "evomerge/errors.hpp"
#include "evomerge/parallel.hpp"
#include "evomerge/rng.hpp"

namespace evomerge {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// k-means++: first center uniform, then proportional to squared distance
// from the nearest chosen center.
std::vector<std::vector<double>> seed_centers(
    const std::vector<std::vector<double>>& points, int k, Rng& rng) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<double>> centers;
  centers.reserve(k);
  centers.push_back(points[rng.integer(n)]);

  std::vector<double> d2(n);
  for (int i = 0; i < n; ++i) d2[i] = sq_dist(points[i], centers[0]);

  while (static_cast<int>(centers.size()) < k) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += d2[i];
    int pick = -1;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= target && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
    }
    if (pick < 0) {
      // all remaining mass is zero; take the first point not yet a center
      for (int i = 0; i < n && pick < 0; ++i) {
        if (d2[i] > 0.0) pick = i;
      }
      if (pick < 0) pick = static_cast<int>(rng.integer(n));
    }
    centers.push_back(points[pick]);
    for (int i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], sq_dist(points[i], centers.back()));
    }
  }
  return centers;
}

KMeansResult lloyd(const std::vector<std::vector<double>>& points, int k,
                   std::uint64_t seed, int max_iters, double tol) {
  const int n = static_cast<int>(points.size());
  const int d = static_cast<int>(points[0].size());
  Rng rng(seed);

  KMeansResult res;
  res.centers = seed_centers(points, k, rng);
  res.labels.assign(n, 0);

  std::vector<int> counts(k);
  std::vector<std::vector<double>> sums(k, std::vector<double>(d));

  for (int iter = 0; iter < max_iters; ++iter) {
    res.iterations = iter + 1;

    for (int c = 0; c < k; ++c) {
      counts[c] = 0;
      std::fill(sums[c].begin(), sums[c].end(), 0.0);
    }
    for (int i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      int label = 0;
      for (int c = 0; c < k; ++c) {
        const double dist = sq_dist(points[i], res.centers[c]);
        if (dist < best) {
          best = dist;
          label = c;
        }
      }
      res.labels[i] = label;
      counts[label] += 1;
      for (int j = 0; j < d; ++j) sums[label][j] += points[i][j];
    }

    // reseed each empty cluster to the point farthest from its own center
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      double far = -1.0;
      int pick = 0;
      for (int i = 0; i < n; ++i) {
        if (counts[res.labels[i]] <= 1) continue;
        const double dist = sq_dist(points[i], res.centers[res.labels[i]]);
        if (dist > far) {
          far = dist;
          pick = i;
        }
      }
      const int old = res.labels[pick];
      counts[old] -= 1;
      for (int j = 0; j < d; ++j) sums[old][j] -= points[pick][j];
      res.labels[pick] = c;
      counts[c] = 1;
      sums[c] = points[pick];
    }

    double shift = 0.0;
    for (int c = 0; c < k; ++c) {
      std::vector<double> next(d);
      for (int j = 0; j < d; ++j) next[j] = sums[c][j] / counts[c];
      // zero-variance cluster: keep the member value bit-for-bit
      bool uniform_cluster = true;
      int member = -1;
      for (int i = 0; i < n && uniform_cluster; ++i) {
        if (res.labels[i] != c) continue;
        if (member < 0) {
          member = i;
        } else if (points[i] != points[member]) {
          uniform_cluster = false;
        }
      }
      if (uniform_cluster && member >= 0) next = points[member];
      shift = std::max(shift, std::sqrt(sq_dist(next, res.centers[c])));
      res.centers[c] = std::move(next);
    }
    if (shift < tol) break;
  }

  res.inertia = 0.0;
  for (int i = 0; i < n; ++i) {
    res.inertia += sq_dist(points[i], res.centers[res.labels[i]]);
  }
  return res;
}

}  // namespace

KMeansResult kmeans(const std::vector<std::vector<double>>& points, int k,
                    std::uint64_t seed, int max_iters, double tol, int n_init,
                    int jobs) {
  if (points.empty()) throw ArgumentError("kmeans: no points");
  if (k < 1) throw ArgumentError("kmeans: k must be >= 1");
  const std::size_t d = points[0].size();
  for (const auto& p : points) {
    if (p.size() != d) throw ArgumentError("kmeans: ragged point dimensions");
  }

  std::vector<std::vector<double>> distinct;
  for (const auto& p : points) {
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
      distinct.push_back(p);
      if (static_cast<int>(distinct.size()) >= k) break;
    }
  }
  if (static_cast<int>(distinct.size()) < k) {
    throw ArgumentError("kmeans: k exceeds the number of distinct points");
  }

  std::vector<KMeansResult> runs(n_init);
  parallel_for(n_init, jobs, [&](int r) {
    runs[r] = lloyd(points, k, mix_seed(seed, 0x6b6d6561u, r), max_iters, tol);
  });

  int best = 0;
  for (int r = 1; r < n_init; ++r) {
    if (runs[r].inertia < runs[best].inertia) best = r;
  }
  return runs[best];
}

}  // namespace evomerge
