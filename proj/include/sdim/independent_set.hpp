#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

namespace detail {

/// Exact maximum independent set by branch and bound. Candidates are
/// covered greedily by cliques of G; an independent set meets each clique
/// at most once, so the number of cliques bounds what is still reachable.
/// Vertices are permuted to ascending degree so low-degree vertices open
/// the early cliques and high-degree vertices are branched on first.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const SimpleGraph& g) : n_(g.size()), order_(g.size()) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    position_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) position_[order_[i]] = i;
    adj_.assign(n_, Bits(n_));
    non_adj_.assign(n_, Bits(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order_[i], order_[j])) adj_[i].set(j);
      non_adj_[i] = ~adj_[i];
      non_adj_[i].reset(i);
    }
  }

  /// Maximum independent set size inside `candidates` (original vertex
  /// ids). Stops as soon as `enough` is reached.
  std::size_t max_size(const Bits& candidates, std::size_t enough) {
    Bits p(n_);
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) p.set(position_[v]);
    best_ = 0;
    enough_ = enough;
    expand(0, p);
    return best_;
  }

 private:
  void expand(std::size_t depth, Bits p) {
    if (p.none()) {
      best_ = std::max(best_, depth);
      return;
    }
    // Greedy clique cover; vertices listed with their clique number.
    std::vector<std::size_t> vertices, bound;
    Bits uncovered = p;
    std::size_t k = 0;
    while (uncovered.any()) {
      ++k;
      Bits q = uncovered;
      while (q.any()) {
        std::size_t v = q.find_first();
        q.reset(v);
        uncovered.reset(v);
        q &= adj_[v];
        vertices.push_back(v);
        bound.push_back(k);
      }
    }
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (best_ >= enough_ || depth + bound[i] <= best_) return;
      std::size_t v = vertices[i];
      expand(depth + 1, p & non_adj_[v]);
      p.reset(v);
    }
  }

  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<Bits> adj_, non_adj_;
  std::size_t best_ = 0, enough_ = 0;
};

}  // namespace detail

inline bool is_independent(const SimpleGraph& g, const Bits& set) {
  for (auto v = set.find_first(); v != Bits::npos; v = set.find_next(v))
    if (g.neighbors(v).intersects(set)) return false;
  return true;
}

/// No vertex outside the set can be added.
inline bool is_maximal_independent(const SimpleGraph& g, const Bits& set) {
  if (!is_independent(g, set)) return false;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!set.test(v) && !g.neighbors(v).intersects(set)) return false;
  return true;
}

inline bool is_vertex_cover(const SimpleGraph& g, const Bits& set) {
  for (auto [u, v] : g.edges())
    if (!set.test(u) && !set.test(v)) return false;
  return true;
}

/// A maximum independent set; among all maxima, the lexicographically
/// least sorted vertex sequence. The result is checked for independence and
/// maximality before it is returned.
inline Bits max_independent_set(const SimpleGraph& g) {
  const std::size_t n = g.size();
  detail::IndependentSetSearch search(g);
  Bits all(n);
  all.set();
  const std::size_t target = search.max_size(all, n);

  Bits chosen(n), available = all;
  std::size_t need = target;
  for (Vertex v = 0; v < n && need > 0; ++v) {
    if (!available.test(v)) continue;
    Bits rest = available - g.neighbors(v);
    for (Vertex w = 0; w <= v; ++w) rest.reset(w);
    if (1 + search.max_size(rest, need - 1) >= need) {
      chosen.set(v);
      available = rest;
      --need;
    } else {
      available.reset(v);
    }
  }
  if (chosen.count() != target || !is_maximal_independent(g, chosen))
    throw std::logic_error("independent set self-check failed");
  return chosen;
}

/// Independence number β.
inline std::size_t independence_number(const SimpleGraph& g) { return max_independent_set(g).count(); }

/// Complement of the reported maximum independent set.
inline Bits min_vertex_cover(const SimpleGraph& g) { return ~max_independent_set(g); }

/// Vertex cover number α = |V| − β.
inline std::size_t vertex_cover_number(const SimpleGraph& g) { return g.size() - independence_number(g); }

}  // namespace sdim
