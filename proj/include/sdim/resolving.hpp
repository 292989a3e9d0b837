#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdim/distance.hpp"

namespace sdim {

inline constexpr std::size_t kDefaultBruteCap = 16;
/// Subsets are enumerated as 64-bit masks; caps beyond this are refused.
inline constexpr std::size_t kMaxBruteCap = 40;

/// Every pair u, v outside `set` with equal distance vectors to `set` is
/// the same vertex.
inline bool is_resolving(const SimpleGraph& g, const DistanceMatrix& d, const Bits& set) {
  const auto members = elements_of(set);
  for (Vertex u = 0; u < g.size(); ++u) {
    if (set.test(u)) continue;
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (set.test(v)) continue;
      bool separated = false;
      for (Vertex s : members) separated = separated || d(u, s) != d(v, s);
      if (!separated) return false;
    }
  }
  return true;
}

inline bool is_resolving(const SimpleGraph& g, const Bits& set) { return is_resolving(g, all_pairs_distances(g), set); }

/// w strongly resolves u, v when one of them lies on a shortest path from
/// the other to w.
inline bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
  return d(w, u) == d(w, v) + d(v, u) || d(w, v) == d(w, u) + d(u, v);
}

inline bool is_strong_resolving(const SimpleGraph& g, const DistanceMatrix& d, const Bits& set) {
  const auto members = elements_of(set);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      bool resolved = false;
      for (Vertex w : members) resolved = resolved || strongly_resolves(d, w, u, v);
      if (!resolved) return false;
    }
  return true;
}

inline bool is_strong_resolving(const SimpleGraph& g, const Bits& set) {
  return is_strong_resolving(g, all_pairs_distances(g), set);
}

struct BruteForceResult {
  std::size_t value = 0;
  Bits witness;
};

namespace detail {

inline void check_cap(const SimpleGraph& g, std::size_t cap) {
  if (cap > kMaxBruteCap) throw Error(ErrorCode::TooLarge, "brute-force cap above " + std::to_string(kMaxBruteCap));
  if (g.size() > cap)
    throw Error(ErrorCode::TooLarge,
                std::to_string(g.size()) + " vertices exceeds the brute-force cap of " + std::to_string(cap));
}

/// Smallest subset hitting every pair mask. Sizes ascend; within a size,
/// subsets come in increasing numeric order so the witness is reproducible.
inline BruteForceResult smallest_hitting_set(std::size_t n, const std::vector<std::uint64_t>& pair_masks) {
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (pair_masks.empty()) return {0, Bits(n)};
      continue;
    }
    std::uint64_t subset = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (subset < limit) {
      bool hits = true;
      for (auto m : pair_masks)
        if ((m & subset) == 0) {
          hits = false;
          break;
        }
      if (hits) {
        Bits w(n);
        for (std::size_t i = 0; i < n; ++i)
          if (subset >> i & 1) w.set(i);
        return {k, w};
      }
      // Gosper's hack: next subset with the same popcount.
      std::uint64_t c = subset & (~subset + 1);
      std::uint64_t r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  throw std::logic_error("the full vertex set always hits every pair");
}

}  // namespace detail

/// Metric dimension by exhaustive search over subsets of ascending size.
inline BruteForceResult metric_dimension_bruteforce(const SimpleGraph& g, std::size_t cap = kDefaultBruteCap) {
  detail::check_cap(g, cap);
  const DistanceMatrix d = all_pairs_distances(g);
  std::vector<std::uint64_t> masks;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      std::uint64_t m = 0;
      for (Vertex w = 0; w < g.size(); ++w)
        if (d(w, u) != d(w, v)) m |= std::uint64_t{1} << w;
      masks.push_back(m);
    }
  return detail::smallest_hitting_set(g.size(), masks);
}

/// Strong metric dimension straight from the definition.
inline BruteForceResult sdim_bruteforce(const SimpleGraph& g, std::size_t cap = kDefaultBruteCap) {
  detail::check_cap(g, cap);
  const DistanceMatrix d = all_pairs_distances(g);
  std::vector<std::uint64_t> masks;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      std::uint64_t m = 0;
      for (Vertex w = 0; w < g.size(); ++w)
        if (strongly_resolves(d, w, u, v)) m |= std::uint64_t{1} << w;
      masks.push_back(m);
    }
  return detail::smallest_hitting_set(g.size(), masks);
}

}  // namespace sdim
