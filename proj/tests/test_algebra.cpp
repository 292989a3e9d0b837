#include <gtest/gtest.h>

#include <sstream>

#include "sdim/algebra.hpp"
#include "sdim/report.hpp"

using namespace sdim;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an sdim::Error";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(NumberTheory, Basics) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(is_prime_power(9));
  EXPECT_TRUE(is_prime_power(2));
  EXPECT_FALSE(is_prime_power(6));
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(radical(360), 30u);
}

TEST(ReducedRing, ThreeThreeThree) {
  const ReducedRingSpec spec{{3, 3, 3}};
  const SimpleGraph g = reduced_ring_zdg(spec);
  EXPECT_EQ(g.size(), 18u);
  EXPECT_TRUE(labeled_equal(g, reduced_ring_predicted_graph(spec)));
  EXPECT_EQ(reduced_ring_sdim_formula(spec), 14);
  EXPECT_EQ(sdim_via_gsr(g), 14u);
}

TEST(ReducedRing, ThreeTwoTwo) {
  const ReducedRingSpec spec{{3, 2, 2}};
  const SimpleGraph g = reduced_ring_zdg(spec);
  EXPECT_EQ(g.size(), 9u);
  EXPECT_TRUE(labeled_equal(g, reduced_ring_predicted_graph(spec)));
  EXPECT_EQ(reduced_ring_sdim_formula(spec), 5);
  EXPECT_EQ(sdim_via_gsr(g), 5u);
  EXPECT_EQ(sdim_bruteforce(g).value, 5u);
}

TEST(ReducedRing, SmallAndInvalid) {
  const SimpleGraph k2 = reduced_ring_zdg({{2, 2}});
  EXPECT_EQ(k2.size(), 2u);
  EXPECT_TRUE(k2.is_complete());
  EXPECT_EQ(code_of([] { reduced_ring_sdim_formula({{2, 2}}); }), ErrorCode::HypothesisUnmet);
  EXPECT_EQ(code_of([] { reduced_ring_zdg({{3, 6}}); }), ErrorCode::NotPrimePower);
  EXPECT_EQ(code_of([] { reduced_ring_zdg({{49, 49, 49}}, 1000); }), ErrorCode::BudgetExceeded);
}

TEST(Comaximal, Z30) {
  const AdapterGraph a = comaximal_gamma2prime({{{2, 1}, {3, 1}, {5, 1}}});
  EXPECT_EQ(a.graph.size(), 21u);
  EXPECT_EQ(a.predicted.spec, (BlowupSpec{3, {{0b001, 8}, {0b010, 4}, {0b100, 2}, {0b011, 4}, {0b101, 2}}}));
  EXPECT_TRUE(labeled_equal(in_predicted_labels(a), predicted_blowup_graph(a.predicted.spec)));
  EXPECT_FALSE(a.graph.find("(1,1,1)").has_value());  // a unit
  EXPECT_FALSE(a.graph.find("(0,0,0)").has_value());  // inside J(R)
  EXPECT_EQ(sdim_via_gsr(a.graph), 17u);
  EXPECT_EQ(sdim_formula(a.predicted.spec), 17);
}

TEST(Comaximal, BooleanRing) {
  const AdapterGraph a = comaximal_gamma2prime({{{2, 1}, {2, 1}, {2, 1}}});
  EXPECT_EQ(a.graph.size(), 6u);
  EXPECT_TRUE(labeled_equal(in_predicted_labels(a), zero_divisor_graph(boolean_lattice(3))));
  EXPECT_EQ(sdim_via_gsr(a.graph), 2u);
}

TEST(Comaximal, NonReducedFactors) {
  // Z_4 × Z_3 × Z_5: the non-unit mask N holds ∏_{i∉N} φ · ∏_{i∈N} p^{e−1} elements.
  const LocalProductSpec spec{{{2, 2}, {3, 1}, {5, 1}}};
  const AdapterGraph a = comaximal_gamma2prime(spec);
  std::map<Mask, std::size_t> counted;
  for (const auto& label : a.predicted.predicted_labels) {
    Mask m = 0;
    std::istringstream in(label.substr(1, label.size() - 2));
    std::string level;
    for (std::size_t c = 0; std::getline(in, level, ','); ++c)
      if (level != "0") m |= Mask{1} << c;
    ++counted[m];
  }
  for (Mask m = 1; m < 7; ++m) EXPECT_EQ(counted[m], gamma2prime_chain_size(spec, m));
  EXPECT_EQ(gamma2prime_chain_size(spec, 0b001), 2u * 2u * 4u);
  EXPECT_EQ(gamma2prime_chain_size(spec, 0b110), 2u);
  EXPECT_TRUE(labeled_equal(in_predicted_labels(a), predicted_blowup_graph(a.predicted.spec)));
  EXPECT_EQ(static_cast<long long>(sdim_via_gsr(a.graph)), sdim_formula(a.predicted.spec));
}

TEST(IdealGraph, Z60) {
  const AdapterGraph a = comaximal_ideal_graph_zn(60);
  EXPECT_EQ(a.graph.size(), 9u);
  const SimpleGraph dual = zero_divisor_graph(ideal_lattice_dual_zn(60));
  Bits keep(dual.size());
  for (const auto& l : a.graph.labels()) keep.set(dual.index_of(l));
  EXPECT_TRUE(labeled_equal(a.graph, induced_subgraph(dual, keep)));
  EXPECT_TRUE(labeled_equal(in_predicted_labels(a), predicted_blowup_graph(a.predicted.spec)));
  EXPECT_EQ(sdim_via_gsr(a.graph), 5u);
  EXPECT_EQ(sdim_bruteforce(a.graph).value, 5u);
  EXPECT_EQ(comaximal_ideal_sdim_formula(60), 5);
}

TEST(IdealGraph, SquarefreeCases) {
  EXPECT_EQ(sdim_via_gsr(comaximal_ideal_graph_zn(210).graph), 8u);
  EXPECT_EQ(comaximal_ideal_sdim_formula(210), 8);
  const AdapterGraph k2 = comaximal_ideal_graph_zn(15);
  EXPECT_EQ(k2.graph.labels(), (std::vector<std::string>{"(3)", "(5)"}));
  EXPECT_TRUE(k2.graph.is_complete());
  EXPECT_EQ(sdim_via_gsr(k2.graph), 1u);
  EXPECT_EQ(comaximal_ideal_sdim_formula(15), 1);
  EXPECT_EQ(code_of([] { comaximal_ideal_sdim_formula(12); }), ErrorCode::HypothesisUnmet);
}

TEST(IdealGraph, IdealLattice) {
  const FinitePoset id = ideal_lattice_zn(12);
  EXPECT_EQ(id.size(), 6u);
  EXPECT_TRUE(id.is_lattice());
  EXPECT_EQ(id.label(*id.bottom()), "(0)");
  EXPECT_EQ(id.label(*id.top()), "(1)");
  EXPECT_TRUE(id.leq(id.index_of("(4)"), id.index_of("(2)")));
  const FinitePoset dual = ideal_lattice_dual_zn(12);
  EXPECT_EQ(dual.label(*dual.bottom()), "(1)");
}

TEST(UnionGraph, Structure) {
  for (auto [n, q] : {std::pair<std::size_t, std::uint64_t>{3, 2}, {3, 3}, {2, 3}, {4, 2}}) {
    const AdapterGraph a = component_union_graph(n, q);
    EXPECT_EQ(a.graph.size(), ipow(q, static_cast<unsigned>(n)) - 1);
    EXPECT_TRUE(labeled_equal(in_predicted_labels(a), predicted_component_union_graph(n, q, a.predicted.spec)));
    for (Vertex v = 0; v < a.graph.size(); ++v)
      if (a.predicted.predicted_labels[v].starts_with("k")) {
        EXPECT_EQ(a.graph.degree(v), a.graph.size() - 1);
      }
  }
  EXPECT_EQ(code_of([] { component_union_graph(3, 6); }), ErrorCode::NotPrimePower);
}

TEST(UnionGraph, ExactStrongMetricDimension) {
  // The closed form |V| − n + 2 gives 6 and 25; the exact values are lower.
  const SimpleGraph g32 = component_union_graph(3, 2).graph;
  EXPECT_EQ(component_union_sdim_formula(3, 2), 6);
  EXPECT_EQ(sdim_via_gsr(g32), 3u);
  EXPECT_EQ(sdim_bruteforce(g32).value, 3u);
  const SimpleGraph g33 = component_union_graph(3, 3).graph;
  EXPECT_EQ(component_union_sdim_formula(3, 3), 25);
  EXPECT_EQ(sdim_via_gsr(g33), 22u);
  EXPECT_EQ(code_of([] { component_union_sdim_formula(2, 3); }), ErrorCode::HypothesisUnmet);
}
