// Acceptance checks: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdim/algebra.hpp"
#include "sdim/corpus.hpp"
#include "sdim/lattice_metric.hpp"
#include "sdim/report.hpp"

using namespace sdim;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kCorpusSize = 60;

/// Accumulates the sub-checks of one criterion.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 6) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  template <typename A, typename B>
  void equal(const A& expected, const B& got, const std::string& what) {
    std::ostringstream os;
    os << what << ": expected " << expected << ", got " << got;
    require(expected == got, os.str());
  }
  bool passed() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string detail() const {
    std::string s;
    for (const auto& f : failures_) s += "\n      " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

Bits labels_to_set(const SimpleGraph& g, const std::vector<std::string>& labels) {
  Bits out(g.size());
  for (const auto& l : labels) out.set(g.index_of(l));
  return out;
}

std::vector<std::string> sorted_labels(const SimpleGraph& g, const Bits& set) {
  std::vector<std::string> out;
  for (Vertex v : elements_of(set)) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

long long brute(const SimpleGraph& g) { return static_cast<long long>(sdim_bruteforce(g, g.size()).value); }
long long via_gsr(const SimpleGraph& g) { return static_cast<long long>(sdim_via_gsr(g)); }

const std::vector<BlowupSpec>& corpus_specs() {
  static const auto specs = corpus::random_specs(kSeed, kCorpusSize);
  return specs;
}

void ac1(Criterion& c) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const SimpleGraph g = zero_divisor_graph(diamond(n));
    const std::string id = "M" + std::to_string(n);
    c.require(g.size() == n && g.is_complete(), id + ": G is K_n");
    const SimpleGraph gsr = strong_resolving_graph(g);
    c.require(gsr.size() == n && gsr.is_complete(), id + ": G_SR is K_n");
    c.equal(static_cast<long long>(n - 1), via_gsr(g), id + " gsr");
    c.equal(static_cast<long long>(n - 1), brute(g), id + " brute");
  }
}

void ac2(Criterion& c) {
  const BlowupSpec spec{3, {}};
  const SimpleGraph g = zero_divisor_graph(build_blowup(spec).poset);
  c.equal(std::string("(0,1,1),(1,0,1),(1,1,0)"), join(sorted_labels(g, boundary(g))), "boundary");
  const SimpleGraph gsr = strong_resolving_graph(g);
  c.require(gsr.size() == 3 && gsr.is_complete(), "G_SR is K3");
  c.equal(2LL, sdim_formula(spec), "formula");
  c.equal(2LL, via_gsr(g), "gsr");
  c.equal(2LL, brute(g), "brute");
  c.require(is_strong_resolving(g, labels_to_set(g, {"(1,1,0)", "(0,1,1)"})), "W is strong resolving");
}

void ac3(Criterion& c) {
  const BlowupSpec spec = corpus::three_atom_example_spec();
  const FinitePoset p = build_blowup(spec).poset;
  const SimpleGraph g = zero_divisor_graph(p);
  c.equal(std::size_t{12}, g.size(), "|Z*|");
  c.require(is_strong_resolving(g, labels_to_set(g, corpus::three_atom_example_witness())), "8-element W");
  c.equal(8LL, sdim_formula(spec), "formula");
  c.equal(8LL, via_gsr(g), "gsr");
  c.equal(8LL, brute(g), "brute");
  const auto dec = decompose_gstar_star(p);
  c.require(dec.rest_connected && dec.rest.any(), "H connected");
  c.require(dec.atom_classes_are_clique_components, "atom classes are clique components");
  std::vector<std::size_t> sizes;
  for (const auto& k : dec.atom_cliques) sizes.push_back(k.count());
  std::sort(sizes.begin(), sizes.end());
  c.equal(std::string("(1,2,3)"), tuple_label(sizes), "clique sizes");
  c.equal(std::size_t{4}, connected_components(dec.graph).size(), "components of G**");
}

void ac4(Criterion& c) {
  std::size_t brute_cases = 0;
  for (std::size_t i = 0; i < corpus_specs().size(); ++i) {
    const BlowupSpec& spec = corpus_specs()[i];
    const SimpleGraph g = zero_divisor_graph(build_blowup(spec).poset);
    const long long gsr = via_gsr(g);
    c.equal(sdim_formula(spec), gsr, "spec " + std::to_string(i) + " formula vs gsr");
    if (g.size() <= 14) {
      ++brute_cases;
      c.equal(gsr, brute(g), "spec " + std::to_string(i) + " brute vs gsr");
    }
  }
  c.require(corpus_specs().size() >= 50, "corpus has at least 50 specs");
  c.require(brute_cases > 0, "some specs within the brute-force range");
}

void ac5(Criterion& c) {
  for (std::size_t i = 0; i < corpus_specs().size(); ++i) {
    const BlowupSpec& spec = corpus_specs()[i];
    const SimpleGraph gsr = strong_resolving_graph(zero_divisor_graph(build_blowup(spec).poset));
    c.equal(beta_gsr_formula(spec), static_cast<long long>(independence_number(gsr)), "spec " + std::to_string(i) + " beta");
    c.equal(spec.zero_divisor_count() - spec.singleton_atom_count(), gsr.size(), "spec " + std::to_string(i) + " |V(G_SR)|");
  }
  for (std::size_t n = 3; n <= 5; ++n)
    c.equal(n - 2, independence_number(strong_resolving_graph(zero_divisor_graph(boolean_lattice(n)))),
            "2^" + std::to_string(n) + " beta");
}

void ac6(Criterion& c) {
  for (std::size_t i = 0; i < corpus_specs().size(); ++i) {
    const BlowupSpec& spec = corpus_specs()[i];
    const FinitePoset p = build_blowup(spec).poset;
    const SimpleGraph gsr = strong_resolving_graph(zero_divisor_graph(p));
    c.require(labeled_equal(gstar(p), gsr), "spec " + std::to_string(i) + " G* = G_SR");
    if (spec.singleton_atom_count() == 0) {
      c.require(labeled_equal(gstar_star(p), gsr), "spec " + std::to_string(i) + " G** = G_SR");
    }
  }
  // Make sure the second clause is exercised even if the corpus lacks such specs.
  const BlowupSpec blown{3, {{0b001, 2}, {0b010, 3}, {0b100, 2}, {0b011, 2}}};
  const FinitePoset p = build_blowup(blown).poset;
  c.require(labeled_equal(gstar_star(p), strong_resolving_graph(zero_divisor_graph(p))), "fixed spec G** = G_SR");
}

void ac7(Criterion& c) {
  for (std::size_t i = 0; i < corpus_specs().size(); ++i) {
    const FinitePoset p = build_blowup(corpus_specs()[i]).poset;
    const SimpleGraph g = zero_divisor_graph(p);
    const DistanceMatrix d = all_pairs_distances(g);
    const Bits zd = nonzero_zero_divisors(p);
    const auto z = elements_of(zd);
    const PseudocomplementMap star(p);
    bool ok = true;
    for (std::size_t a = 0; a < z.size(); ++a)
      for (std::size_t b = 0; b < z.size(); ++b)
        if (a != b && distance_by_pseudocomplement(p, zd, star, z[a], z[b]) != static_cast<int>(d(a, b))) ok = false;
    c.require(ok, "spec " + std::to_string(i) + " distance rule");
    c.require(d.max() <= 3, "spec " + std::to_string(i) + " diameter <= 3");
  }
}

void canonical_check(Criterion& c, const FinitePoset& l, const std::string& id) {
  const CanonicalBlowup cb = canonical_blowup_of(l);
  c.require(labeled_equal(zero_divisor_graph_in_blowup_labels(l, cb), zero_divisor_graph(build_blowup(cb.spec).poset)),
            id + ": G(L') = G(L^B)");
}

void ac8(Criterion& c) {
  for (std::size_t k : {3, 4})
    for (const auto& sizes : corpus::chain_size_grid(k, {2, 3})) canonical_check(c, chain_product(sizes), tuple_label(sizes));
  const FinitePoset l = corpus::two_atom_lattice();
  canonical_check(c, l, "two-atom lattice");
  const SimpleGraph g = zero_divisor_graph(l);
  std::size_t deg2 = 0, deg5 = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    deg2 += g.degree(v) == 2;
    deg5 += g.degree(v) == 5;
  }
  c.require(g.size() == 7 && g.edge_count() == 10 && deg2 == 5 && deg5 == 2, "two-atom lattice graph is K_{2,5}");
  c.equal(BlowupSpec{2, {{0b01, 5}, {0b10, 2}}} == canonical_blowup_of(l).spec, true, "two-atom canonical spec");
}

void ac9(Criterion& c) {
  const ReducedRingSpec a{{3, 3, 3}}, b{{3, 2, 2}};
  const SimpleGraph ga = reduced_ring_zdg(a), gb = reduced_ring_zdg(b);
  c.require(labeled_equal(ga, reduced_ring_predicted_graph(a)), "(3,3,3) product of chains");
  c.require(labeled_equal(gb, reduced_ring_predicted_graph(b)), "(3,2,2) product of chains");
  c.equal(14LL, via_gsr(ga), "(3,3,3) gsr");
  c.equal(14LL, reduced_ring_sdim_formula(a), "(3,3,3) formula");
  c.equal(5LL, via_gsr(gb), "(3,2,2) gsr");
  c.equal(5LL, brute(gb), "(3,2,2) brute");
  c.equal(5LL, reduced_ring_sdim_formula(b), "(3,2,2) formula");
}

void ac10(Criterion& c) {
  const AdapterGraph a = comaximal_gamma2prime({{{2, 1}, {3, 1}, {5, 1}}});
  c.equal(std::size_t{21}, a.graph.size(), "|V|");
  c.equal(17LL, via_gsr(a.graph), "gsr");
  c.equal(static_cast<long long>(a.graph.size()) - 6 + 2, via_gsr(a.graph), "|V|-2n+2");
  c.require(labeled_equal(in_predicted_labels(a), predicted_blowup_graph(a.predicted.spec)), "predicted blow-up graph");
}

void ac11(Criterion& c) {
  c.equal(8LL, via_gsr(comaximal_ideal_graph_zn(210).graph), "N=210 gsr");
  c.equal((1LL << 4) - 8, comaximal_ideal_sdim_formula(210), "N=210 formula");
  c.equal(1LL, via_gsr(comaximal_ideal_graph_zn(15).graph), "N=15 gsr");
  c.equal(1LL, comaximal_ideal_sdim_formula(15), "N=15 formula");
  const AdapterGraph a = comaximal_ideal_graph_zn(60);
  const SimpleGraph dual = zero_divisor_graph(ideal_lattice_dual_zn(60));
  Bits keep(dual.size());
  for (const auto& l : a.graph.labels())
    if (auto v = dual.find(l)) keep.set(*v);
  c.require(keep.count() == a.graph.size() && labeled_equal(a.graph, induced_subgraph(dual, keep)),
            "N=60 CG = G(Id^dual) on shared vertices");
  c.equal(std::size_t{9}, a.graph.size(), "N=60 |V|");
  c.equal(5LL, via_gsr(a.graph), "N=60 gsr");
  c.equal(5LL, brute(a.graph), "N=60 brute");
}

void ac12(Criterion& c) {
  for (auto [n, q] : {std::pair<std::size_t, std::uint64_t>{3, 2}, {3, 3}}) {
    const std::string id = "(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")";
    const AdapterGraph a = component_union_graph(n, q);
    const long long expected = q == 2 ? 6 : 25;
    c.equal(expected, static_cast<long long>(a.graph.size()) - static_cast<long long>(n) + 2, id + " |V|-n+2");
    c.equal(expected, via_gsr(a.graph), id + " gsr");
    if (q == 2) c.equal(expected, brute(a.graph), id + " brute");
    c.require(labeled_equal(in_predicted_labels(a), predicted_component_union_graph(n, q, a.predicted.spec)),
              id + " UG = join(G(L^B), K_t)");
  }
}

void ac13(Criterion& c) {
  std::vector<SimpleGraph> graphs;
  for (const auto& spec : corpus_specs()) {
    SimpleGraph g = zero_divisor_graph(build_blowup(spec).poset);
    graphs.push_back(strong_resolving_graph(g));
    graphs.push_back(std::move(g));
  }
  for (std::size_t n = 3; n <= 6; ++n) graphs.push_back(zero_divisor_graph(diamond(n)));
  graphs.push_back(zero_divisor_graph(corpus::two_atom_lattice()));
  graphs.push_back(reduced_ring_zdg({{3, 3, 3}}));
  graphs.push_back(reduced_ring_zdg({{3, 2, 2}}));
  graphs.push_back(comaximal_gamma2prime({{{2, 1}, {3, 1}, {5, 1}}}).graph);
  for (std::uint64_t n : {15ULL, 60ULL, 210ULL}) graphs.push_back(comaximal_ideal_graph_zn(n).graph);
  graphs.push_back(component_union_graph(3, 2).graph);
  graphs.push_back(component_union_graph(3, 3).graph);
  for (std::size_t n : {3, 4}) {
    graphs.push_back(boolean_ring_zdg(n));
    graphs.push_back(boolean_ring_annihilator_graph(n));
  }

  std::size_t small = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const SimpleGraph& g = graphs[i];
    const Bits mis = max_independent_set(g), cover = min_vertex_cover(g);
    c.require(is_independent(g, mis) && is_vertex_cover(g, cover) && mis.count() + cover.count() == g.size(),
              "graph " + std::to_string(i) + " Gallai");
    if (g.size() <= 12 && g.size() > 0 && is_connected(g)) {
      ++small;
      c.require(metric_dimension_bruteforce(g, 12).value <= sdim_bruteforce(g, 12).value,
                "graph " + std::to_string(i) + " dim <= sdim");
    }
  }
  c.require(small > 0, "some graphs with at most 12 vertices");
  for (std::size_t n : {3, 4}) {
    const FinitePoset b = boolean_lattice(n);
    c.require(labeled_equal(boolean_ring_zdg(n), zero_divisor_graph(b)), "Gamma(R_L) = G(L), n=" + std::to_string(n));
    c.require(labeled_equal(boolean_ring_annihilator_graph(n), incomparability_graph(b)),
              "AG(R_L) = Incomp(L), n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"M_n complete graphs, sdim n-1", ac1},
      {"2^3 boundary, G_SR = K3, sdim 2", ac2},
      {"three-atom blow-up: W, sdim 8, G** decomposition", ac3},
      {"main formula on the random corpus", ac4},
      {"beta(G_SR) and |V(G_SR)| formulas", ac5},
      {"G* = G_SR, and G** = G_SR without singleton atoms", ac6},
      {"distance trichotomy and diameter", ac7},
      {"G(L') = G(canonical blow-up)", ac8},
      {"reduced rings", ac9},
      {"comaximal graph of Z30", ac10},
      {"comaximal ideal graphs of Z_N", ac11},
      {"component union graphs", ac12},
      {"structural identities", ac13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    failed += !c.passed();
    std::cout << "AC" << i + 1 << (i + 1 < 10 ? "  " : " ") << (c.passed() ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << c.checks() << " checks)" << c.detail() << '\n';
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
