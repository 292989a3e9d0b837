#pragma once

#include "sdim/distance.hpp"

namespace sdim {

/// u is maximally distant from v when no neighbour of u is farther from v
/// than u is. A vertex is never maximally distant from itself.
inline bool maximally_distant(const SimpleGraph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  if (u == v) return false;
  const Bits& nu = g.neighbors(u);
  for (auto w = nu.find_first(); w != Bits::npos; w = nu.find_next(w))
    if (d(v, w) > d(u, v)) return false;
  return true;
}

inline bool mutually_maximally_distant(const SimpleGraph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  return maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u);
}

inline bool mutually_maximally_distant(const SimpleGraph& g, Vertex u, Vertex v) {
  return mutually_maximally_distant(g, all_pairs_distances(g), u, v);
}

/// Vertices taking part in at least one mutually maximally distant pair.
inline Bits boundary(const SimpleGraph& g, const DistanceMatrix& d) {
  Bits out(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (mutually_maximally_distant(g, d, u, v)) out.set(u).set(v);
  return out;
}

inline Bits boundary(const SimpleGraph& g) { return boundary(g, all_pairs_distances(g)); }

/// G_SR: the boundary, with an edge for each mutually maximally distant pair.
inline SimpleGraph strong_resolving_graph(const SimpleGraph& g, const DistanceMatrix& d) {
  const auto vertices = elements_of(boundary(g, d));
  std::vector<std::string> labels;
  for (Vertex v : vertices) labels.push_back(g.label(v));
  SimpleGraph out(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (mutually_maximally_distant(g, d, vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

inline SimpleGraph strong_resolving_graph(const SimpleGraph& g) {
  return strong_resolving_graph(g, all_pairs_distances(g));
}

}  // namespace sdim
