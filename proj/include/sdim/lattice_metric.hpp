#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

/// Pseudocomplements of every element, computed once.
class PseudocomplementMap {
 public:
  explicit PseudocomplementMap(const FinitePoset& p) : star_(p.size()) {
    for (Element x = 0; x < p.size(); ++x) star_[x] = pseudocomplement(p, x);
  }

  Element operator()(Element x) const {
    if (!star_.at(x)) throw Error(ErrorCode::NotApplicable, "element " + std::to_string(x) + " has no pseudocomplement");
    return *star_[x];
  }

 private:
  std::vector<std::optional<Element>> star_;
};

/// Distance in G(L^B) read off the lattice: 1 iff y <= x*, 3 iff
/// additionally y* <= x**, and 2 otherwise.
inline int distance_by_pseudocomplement(const FinitePoset& p, const Bits& zero_divisors,
                                        const PseudocomplementMap& star, Element x, Element y) {
  if (!zero_divisors.test(x) || !zero_divisors.test(y) || x == y)
    throw Error(ErrorCode::NotZeroDivisor, "expects two distinct nonzero zero divisors");
  const Element xs = star(x);
  if (p.leq(y, xs)) return 1;
  if (p.leq(star(y), star(xs))) return 3;
  return 2;
}

inline int distance_by_pseudocomplement(const FinitePoset& p, Element x, Element y) {
  return distance_by_pseudocomplement(p, nonzero_zero_divisors(p), PseudocomplementMap(p), x, y);
}

/// Class-level auxiliary graph on Z*(L^B): x ~ y iff [x] = [y], or the
/// classes meet above [0] and are incomparable in the Boolean quotient.
inline SimpleGraph gstar_star(const FinitePoset& p) {
  const ClassPartition q = quotient_classes(p);
  if (!q.boolean_image) throw Error(ErrorCode::NotApplicable, "annihilator quotient is not Boolean");
  const auto& image = *q.boolean_image;
  const auto vertices = elements_of(nonzero_zero_divisors(p));
  std::vector<std::string> labels;
  for (Element e : vertices) labels.push_back(p.label(e));
  SimpleGraph g(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const std::size_t ci = q.class_of[vertices[i]], cj = q.class_of[vertices[j]];
      const Mask a = image[ci], b = image[cj];
      const bool incomparable = (a & b) != a && (a & b) != b;
      if (ci == cj || ((a & b) != 0 && incomparable)) g.add_edge(i, j);
    }
  return g;
}

/// G** split into its atom-class components and the rest.
struct GstarStarDecomposition {
  SimpleGraph graph;
  Bits rest;                               // vertices outside every atom class
  std::vector<Bits> atom_cliques;          // one per atom class, in atom order
  bool rest_connected = false;
  bool atom_classes_are_clique_components = false;
};

inline GstarStarDecomposition decompose_gstar_star(const FinitePoset& p) {
  GstarStarDecomposition out{gstar_star(p), {}, {}, false, false};
  const ClassPartition q = quotient_classes(p);
  const auto vertices = elements_of(nonzero_zero_divisors(p));
  const std::size_t n = vertices.size();
  out.rest = Bits(n);
  out.rest.set();
  for (Element a : elements_of(atoms(p))) {
    Bits clique(n);
    for (std::size_t i = 0; i < n; ++i)
      if (q.class_of[vertices[i]] == q.class_of[a]) clique.set(i);
    out.rest -= clique;
    out.atom_cliques.push_back(std::move(clique));
  }

  const auto components = connected_components(out.graph);
  out.atom_classes_are_clique_components = std::all_of(out.atom_cliques.begin(), out.atom_cliques.end(), [&](const Bits& c) {
    return std::find(components.begin(), components.end(), c) != components.end() &&
           induced_subgraph(out.graph, c).is_complete();
  });
  out.rest_connected = out.rest.none() || is_connected(induced_subgraph(out.graph, out.rest));
  return out;
}

/// G(P) with every vertex renamed to its canonical blow-up label.
inline SimpleGraph zero_divisor_graph_in_blowup_labels(const FinitePoset& p, const CanonicalBlowup& cb) {
  std::vector<std::string> labels;
  for (Element e : elements_of(nonzero_zero_divisors(p))) labels.push_back(blown_label(cb.spec.n, cb.relabeling.at(e)));
  return relabeled(zero_divisor_graph(p), std::move(labels));
}

/// G(L^B) itself when complete; otherwise G** without its isolated vertices.
inline SimpleGraph gstar(const FinitePoset& p) {
  SimpleGraph g = zero_divisor_graph(p);
  if (g.is_complete()) return g;
  return remove_isolated(gstar_star(p));
}

}  // namespace sdim
