#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

/// Dense all-pairs shortest-path lengths of an unweighted connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }

  std::uint32_t max() const {
    std::uint32_t m = 0;
    for (auto x : d_) m = std::max(m, x);
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// Breadth-first layering from every vertex, one bitset frontier per layer.
inline DistanceMatrix all_pairs_distances(const SimpleGraph& g) {
  const std::size_t n = g.size();
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    Bits seen(n), frontier(n);
    frontier.set(s);
    std::uint32_t layer = 0;
    while (frontier.any()) {
      seen |= frontier;
      Bits next(n);
      for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
        d.at(s, v) = layer;
        next |= g.neighbors(v);
      }
      frontier = next - seen;
      ++layer;
    }
    if (seen.count() != n) throw Error(ErrorCode::Disconnected, "vertex " + g.label(s) + " does not reach every vertex");
  }
  return d;
}

inline std::uint32_t diameter(const SimpleGraph& g) { return all_pairs_distances(g).max(); }

}  // namespace sdim
