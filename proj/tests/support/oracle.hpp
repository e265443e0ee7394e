#pragma once

// Reference implementations used as test oracles. Nothing here calls into
// the library's set algebra or solvers.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

inline const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

inline double frac(double x) { return x - std::floor(x); }

// Union of half-open arcs [s, e) on R/Z given by real endpoints.
struct FloatArcs {
  std::vector<std::pair<double, double>> arcs;
  bool full = false;

  bool contains(double x) const {
    if (full) return true;
    x = frac(x);
    for (const auto& [s0, e0] : arcs) {
      const double s = frac(s0);
      const double len = frac(e0 - s0);
      if (frac(x - s) < len) return true;
    }
    return false;
  }

  // Circle distance from x to the nearest endpoint.
  double distance_to_boundary(double x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [s, e] : arcs) {
      for (double p : {s, e}) {
        const double d = frac(x - p);
        best = std::min({best, d, 1.0 - d});
      }
    }
    return best;
  }
};

// Minimal k <= K with frac(v - k alpha) < eps, or -1.
inline long hit_time(double v, double alpha, double eps, long K) {
  for (long k = 0; k <= K; ++k) {
    if (frac(v - static_cast<double>(k) * alpha) < eps) return k;
  }
  return -1;
}

// Distance from frac(v - k alpha) to the boundary of [0, eps) over k <= K;
// used to skip samples the double evaluation cannot decide.
inline double hit_margin(double v, double alpha, double eps, long K) {
  double best = std::numeric_limits<double>::infinity();
  for (long k = 0; k <= K; ++k) {
    const double y = frac(v - static_cast<double>(k) * alpha);
    best = std::min({best, y, 1.0 - y, std::abs(y - eps)});
  }
  return best;
}

using Adjacency = std::vector<std::vector<std::size_t>>;

inline Adjacency cycle(std::size_t n) {
  Adjacency g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g[v].push_back((v + 1) % n);
    g[(v + 1) % n].push_back(v);
  }
  return g;
}

inline Adjacency path(std::size_t n) {
  Adjacency g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) {
    g[v].push_back(v + 1);
    g[v + 1].push_back(v);
  }
  return g;
}

inline bool is_rdf(const Adjacency& g, const std::vector<int>& f) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (f[v] != 0) continue;
    bool ok = false;
    for (std::size_t w : g[v]) ok = ok || f[w] == 2;
    if (!ok) return false;
  }
  return true;
}

// Visits all 3^n labelings.
inline void for_each_labeling(std::size_t n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> labels(n, 0);
  while (true) {
    f(labels);
    std::size_t i = 0;
    while (i < n && labels[i] == 2) labels[i++] = 0;
    if (i == n) return;
    ++labels[i];
  }
}

inline int rdn(const Adjacency& g) {
  int best = std::numeric_limits<int>::max();
  for_each_labeling(g.size(), [&](const std::vector<int>& f) {
    if (!is_rdf(g, f)) return;
    int value = 0;
    for (int x : f) value += x;
    best = std::min(best, value);
  });
  return best;
}

// Minimum over RDFs that avoid label 1.
inline int rdn_without_ones(const Adjacency& g) {
  int best = std::numeric_limits<int>::max();
  for_each_labeling(g.size(), [&](const std::vector<int>& f) {
    int value = 0;
    for (int x : f) {
      if (x == 1) return;
      value += x;
    }
    if (is_rdf(g, f)) best = std::min(best, value);
  });
  return best;
}

inline int domination_number(const Adjacency& g) {
  const std::size_t n = g.size();
  int best = static_cast<int>(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      bool dominated = (mask >> v) & 1u;
      for (std::size_t w : g[v]) dominated = dominated || ((mask >> w) & 1u);
      ok = dominated;
    }
    if (ok) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace oracle
