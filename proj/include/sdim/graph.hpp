#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sdim/blowup.hpp"
#include "sdim/poset.hpp"

namespace sdim {

using Vertex = std::size_t;

/// Labeled simple undirected graph with one adjacency bit row per vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    adj_.assign(labels_.size(), Bits(labels_.size()));
    index_.reserve(labels_.size());
    for (Vertex v = 0; v < labels_.size(); ++v)
      if (!index_.emplace(labels_[v], v).second) throw Error(ErrorCode::LabelCollision, labels_[v]);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  std::optional<Vertex> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Vertex index_of(const std::string& label) const {
    auto v = find(label);
    if (!v) throw Error(ErrorCode::UnknownElement, "no vertex labeled " + label);
    return *v;
  }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::logic_error("loop at " + labels_.at(u));
    adj_.at(u).set(v);
    adj_.at(v).set(u);
  }

  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).test(v); }
  const Bits& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
      for (auto v = adj_[u].find_next(u); v != Bits::npos; v = adj_[u].find_next(v)) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const { return edge_count() * 2 == size() * (size() - (size() ? 1 : 0)); }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Bits> adj_;
  std::unordered_map<std::string, Vertex> index_;
};

/// Same vertex labels and the same edges between them; vertex order is
/// irrelevant.
inline bool labeled_equal(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  std::vector<Vertex> to_h(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto w = h.find(g.label(v));
    if (!w) return false;
    to_h[v] = *w;
  }
  for (auto [u, v] : g.edges())
    if (!h.adjacent(to_h[u], to_h[v])) return false;
  return true;
}

inline SimpleGraph induced_subgraph(const SimpleGraph& g, const Bits& keep) {
  std::vector<Vertex> kept = elements_of(keep);
  std::vector<std::string> labels;
  for (Vertex v : kept) labels.push_back(g.label(v));
  SimpleGraph out(std::move(labels));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j)
      if (g.adjacent(kept[i], kept[j])) out.add_edge(i, j);
  return out;
}

inline SimpleGraph relabeled(const SimpleGraph& g, std::vector<std::string> labels) {
  if (labels.size() != g.size()) throw std::invalid_argument("relabeling has wrong length");
  SimpleGraph out(std::move(labels));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

/// Vertices reordered by label so serializations are byte-stable.
inline SimpleGraph canonical(const SimpleGraph& g) {
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.label(a) < g.label(b); });
  std::vector<Vertex> position(g.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    labels.push_back(g.label(order[i]));
  }
  SimpleGraph out(std::move(labels));
  for (auto [u, v] : g.edges()) out.add_edge(position[u], position[v]);
  return out;
}

inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.labels());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

inline SimpleGraph complete_graph(std::size_t t, const std::string& prefix = "k") {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= t; ++i) labels.push_back(prefix + std::to_string(i));
  SimpleGraph out(std::move(labels));
  for (Vertex u = 0; u < t; ++u)
    for (Vertex v = u + 1; v < t; ++v) out.add_edge(u, v);
  return out;
}

inline SimpleGraph edgeless_graph(std::size_t t, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= t; ++i) labels.push_back(prefix + std::to_string(i));
  return SimpleGraph(std::move(labels));
}

inline SimpleGraph disjoint_union(std::span<const SimpleGraph> parts) {
  std::vector<std::string> labels;
  for (const auto& g : parts) labels.insert(labels.end(), g.labels().begin(), g.labels().end());
  SimpleGraph out(std::move(labels));
  std::size_t offset = 0;
  for (const auto& g : parts) {
    for (auto [u, v] : g.edges()) out.add_edge(offset + u, offset + v);
    offset += g.size();
  }
  return out;
}

/// Disjoint union plus every edge between the two sides.
inline SimpleGraph graph_join(const SimpleGraph& g, const SimpleGraph& h) {
  const SimpleGraph parts[] = {g, h};
  SimpleGraph out = disjoint_union(parts);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < h.size(); ++v) out.add_edge(u, g.size() + v);
  return out;
}

inline SimpleGraph remove_isolated(const SimpleGraph& g) {
  Bits keep(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) > 0) keep.set(v);
  return induced_subgraph(g, keep);
}

inline Bits isolated_vertices(const SimpleGraph& g) {
  Bits out(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) out.set(v);
  return out;
}

/// Connected components as vertex sets, ordered by least vertex.
inline std::vector<Bits> connected_components(const SimpleGraph& g) {
  std::vector<Bits> out;
  Bits seen(g.size());
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen.test(s)) continue;
    Bits comp(g.size()), frontier(g.size());
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      Bits next(g.size());
      for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) next |= g.neighbors(v);
      frontier = next - comp;
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Graphs of posets and Boolean rings.

/// Vertices Z*(P); a ~ b iff their only common lower bound is 0.
inline SimpleGraph zero_divisor_graph(const FinitePoset& p) {
  const Element zero = p.require_bottom();
  const auto vertices = elements_of(nonzero_zero_divisors(p));
  std::vector<std::string> labels;
  for (Element e : vertices) labels.push_back(p.label(e));
  SimpleGraph g(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      Bits cone = p.down_set(vertices[i]) & p.down_set(vertices[j]);
      if (cone.count() == 1 && cone.test(zero)) g.add_edge(i, j);
    }
  return g;
}

/// Comparability graph on L \ {0, 1}.
inline SimpleGraph comparability_graph(const FinitePoset& l) {
  const Element zero = l.require_bottom(), one = l.require_top();
  std::vector<Element> vertices;
  for (Element x = 0; x < l.size(); ++x)
    if (x != zero && x != one) vertices.push_back(x);
  std::vector<std::string> labels;
  for (Element e : vertices) labels.push_back(l.label(e));
  SimpleGraph g(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (l.comparable(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

inline SimpleGraph incomparability_graph(const FinitePoset& l) { return complement(comparability_graph(l)); }

namespace detail {
inline std::vector<std::string> boolean_ring_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (Mask m = 1; m < full_mask(n); ++m) labels.push_back(blown_label(n, {m, 1}));
  return labels;
}
}  // namespace detail

/// Γ(Z_2^n): nonzero zero divisors are masks 1..2^n-2; product is
/// intersection. Labels match boolean_lattice(n).
inline SimpleGraph boolean_ring_zdg(std::size_t n) {
  if (n < 1 || n > kMaxBlowupAtoms) throw Error(ErrorCode::InvalidSpec, "n out of range");
  SimpleGraph g(detail::boolean_ring_labels(n));
  const Mask top = full_mask(n);
  for (Mask x = 1; x < top; ++x)
    for (Mask y = x + 1; y < top; ++y)
      if ((x & y) == 0) g.add_edge(x - 1, y - 1);
  return g;
}

/// AG(Z_2^n): x ~ y iff ann(xy) != ann(x) ∪ ann(y), with annihilators
/// computed as explicit sets over all 2^n ring elements.
inline SimpleGraph boolean_ring_annihilator_graph(std::size_t n) {
  if (n < 1 || n > 12) throw Error(ErrorCode::TooLarge, "annihilator sets are enumerated explicitly; n <= 12");
  const Mask ring = Mask{1} << n;
  std::vector<Bits> ann(ring, Bits(ring));
  for (Mask x = 0; x < ring; ++x)
    for (Mask r = 0; r < ring; ++r)
      if ((r & x) == 0) ann[x].set(r);
  SimpleGraph g(detail::boolean_ring_labels(n));
  for (Mask x = 1; x + 1 < ring; ++x)
    for (Mask y = x + 1; y + 1 < ring; ++y)
      if (ann[x & y] != (ann[x] | ann[y])) g.add_edge(x - 1, y - 1);
  return g;
}

// ---------------------------------------------------------------------------
// Export.

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// One `graph` block: vertices in label order, then sorted edges.
inline void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name = "G") {
  const SimpleGraph c = canonical(g);
  os << "graph " << dot_quote(name) << " {\n";
  for (const auto& label : c.labels()) os << "  " << dot_quote(label) << ";\n";
  for (auto [u, v] : c.edges()) os << "  " << dot_quote(c.label(u)) << " -- " << dot_quote(c.label(v)) << ";\n";
  os << "}\n";
}

inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  write_dot(os, g, name);
  return os.str();
}

}  // namespace sdim
