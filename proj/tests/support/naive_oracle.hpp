#pragma once

// Brute-force reference implementations used only by tests. These stay
// deliberately naive and independent of the library's minimalization and
// membership machinery so that the two routes can disagree loudly.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace naive {

using Row = std::vector<std::int64_t>;

inline bool divides(const Row& g, const Row& u) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > u[i]) return false;
  }
  return true;
}

inline bool member(const std::vector<Row>& gens, const Row& u) {
  for (const Row& g : gens) {
    if (divides(g, u)) return true;
  }
  return false;
}

inline std::int64_t degree(const Row& u) {
  std::int64_t d = 0;
  for (auto e : u) d += e;
  return d;
}

// Quadratic divisibility filter over the deduplicated set.
inline std::vector<Row> minimalize(const std::vector<Row>& gens) {
  std::set<Row> dedup(gens.begin(), gens.end());
  std::vector<Row> all(dedup.begin(), dedup.end());
  std::vector<Row> kept;
  for (const Row& g : all) {
    bool redundant = false;
    for (const Row& h : all) {
      if (h != g && divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), [](const Row& a, const Row& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b);
    return a < b;
  });
  return kept;
}

inline std::vector<Row> product(const std::vector<Row>& a, const std::vector<Row>& b) {
  std::vector<Row> pool;
  for (const Row& g : a) {
    for (const Row& h : b) {
      Row r(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i] + h[i];
      pool.push_back(std::move(r));
    }
  }
  return minimalize(pool);
}

inline std::vector<Row> power(const std::vector<Row>& a, int m, std::size_t vars) {
  std::vector<Row> acc{Row(vars, 0)};
  for (int i = 0; i < m; ++i) acc = product(acc, a);
  return acc;
}

}  // namespace naive
