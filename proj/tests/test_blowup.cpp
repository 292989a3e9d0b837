#include <gtest/gtest.h>

#include "sdim/corpus.hpp"
#include "sdim/graph.hpp"
#include "sdim/lattice_metric.hpp"

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

TEST(Mask, StringForm) {
  EXPECT_EQ(mask_to_string(0b001, 3), "001");
  EXPECT_EQ(mask_to_string(0b110, 3), "110");
  EXPECT_EQ(mask_from_string("100"), 0b100u);
  EXPECT_EQ(mask_from_string("0011"), 0b0011u);
  EXPECT_EQ(code_of([] { mask_from_string("012"); }), ErrorCode::InvalidSpec);
}

TEST(Spec, Validation) {
  EXPECT_EQ(code_of([] { BlowupSpec{3, {{0, 2}}}.validate(); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { BlowupSpec{3, {{0b111, 2}}}.validate(); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { BlowupSpec{3, {{0b001, 0}}}.validate(); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { BlowupSpec{0, {}}.validate(); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { BlowupSpec{kMaxBlowupAtoms + 1, {}}.validate(); }), ErrorCode::InvalidSpec);
  EXPECT_TRUE((BlowupSpec{3, {{0b001, 1}}} == BlowupSpec{3, {}}));
}

TEST(Spec, Counts) {
  const BlowupSpec s = corpus::three_atom_example_spec();
  EXPECT_EQ(s.zero_divisor_count(), 12u);
  EXPECT_EQ(s.singleton_atom_count(), 1u);
  EXPECT_EQ(s.size_of(0b010), 1u);
  EXPECT_EQ(s.size_of(0b101), 3u);
}

TEST(Build, BooleanIndexIsMask) {
  const FinitePoset b = boolean_lattice(3);
  ASSERT_EQ(b.size(), 8u);
  EXPECT_EQ(b.label(0), "(0,0,0)");
  EXPECT_EQ(b.label(0b011), "(1,1,0)");
  EXPECT_EQ(b.label(0b100), "(0,0,1)");
  EXPECT_TRUE(is_boolean(b));
}

TEST(Build, OrderMatchesDefinition) {
  for (const auto& spec : corpus::random_specs(3, 10)) {
    const BlowupLattice lb = build_blowup(spec);
    const Mask full = full_mask(spec.n);
    for (Element x = 0; x < lb.poset.size(); ++x)
      for (Element y = 0; y < lb.poset.size(); ++y) {
        const auto a = lb.elements[x], b = lb.elements[y];
        bool less = (a.mask != b.mask && (a.mask & b.mask) == a.mask) || (a.mask == b.mask && a.level < b.level);
        if (a.mask == 0) less = b.mask != 0;
        if (b.mask == full) less = a.mask != full;
        EXPECT_EQ(lb.poset.less(x, y), less);
      }
  }
}

TEST(Build, ThreeAtomExample) {
  const BlowupLattice lb = build_blowup(corpus::three_atom_example_spec());
  const FinitePoset& p = lb.poset;
  EXPECT_EQ(p.size(), 14u);
  EXPECT_TRUE(p.is_lattice());
  EXPECT_TRUE(is_zero_distributive(p));
  EXPECT_TRUE(is_pseudocomplemented(p));
  EXPECT_FALSE(is_distributive(p));
  EXPECT_EQ(nonzero_zero_divisors(p).count(), 12u);
  EXPECT_EQ(atoms(p).count(), 3u);

  auto at = [&](const char* label) { return p.index_of(label); };
  EXPECT_EQ(*p.meet(at("(1,1,0)"), at("(1,0,1)")), at("(3,0,0)"));
  EXPECT_EQ(*p.join(at("(1,0,0)"), at("(0,0,1)")), at("(1,0,1)"));
  EXPECT_EQ(*p.join(at("(3,0,0)"), at("(0,1,0)")), at("(1,1,0)"));
  EXPECT_EQ(*p.meet(at("(2,2,0)"), at("(0,1,1)")), at("(0,1,0)"));
  EXPECT_EQ(*pseudocomplement(p, at("(1,0,0)")), at("(0,1,1)"));
  EXPECT_EQ(*pseudocomplement(p, at("(0,1,1)")), at("(3,0,0)"));
  EXPECT_EQ(lb.index_of({0b101, 3}), at("(3,0,3)"));
  EXPECT_EQ(code_of([&] { lb.index_of({0b101, 4}); }), ErrorCode::UnknownElement);
}

TEST(Build, CorpusLatticesAreZeroDistributive) {
  for (const auto& spec : corpus::random_specs(5, 20)) {
    const FinitePoset p = build_blowup(spec).poset;
    EXPECT_TRUE(p.is_lattice());
    EXPECT_TRUE(is_zero_distributive(p));
    EXPECT_TRUE(is_pseudocomplemented(p));
    EXPECT_EQ(nonzero_zero_divisors(p).count(), spec.zero_divisor_count());
    EXPECT_EQ(dense_elements(p).count(), 1u);
  }
}

TEST(Random, SpecGeneratorIsDeterministic) {
  const auto a = corpus::random_specs(7, 30), b = corpus::random_specs(7, 30);
  EXPECT_EQ(a, b);
  bool saw3 = false, saw4 = false;
  for (const auto& s : a) {
    saw3 |= s.n == 3;
    saw4 |= s.n == 4;
    EXPECT_TRUE(s.n == 3 || s.n == 4);
    for (auto [m, size] : s.chain_sizes) EXPECT_TRUE(size == 2 || size == 3);
  }
  EXPECT_TRUE(saw3 && saw4);
}

TEST(Canonical, RoundTripOnCorpus) {
  for (const auto& spec : corpus::random_specs(9, 25)) {
    const BlowupLattice lb = build_blowup(spec);
    const CanonicalBlowup cb = canonical_blowup_of(lb.poset);
    EXPECT_EQ(cb.spec, spec);
    for (auto [e, be] : cb.relabeling) EXPECT_EQ(be, lb.elements[e]);
  }
}

TEST(Canonical, ChainProducts) {
  for (std::size_t k : {3, 4})
    for (const auto& sizes : corpus::chain_size_grid(k, {2, 3})) {
      const FinitePoset p = chain_product(sizes);
      const CanonicalBlowup cb = canonical_blowup_of(p);
      for (Mask m = 1; m < full_mask(k); ++m) {
        std::size_t expected = 1;
        for (std::size_t i = 0; i < k; ++i)
          if (m >> i & 1) expected *= sizes[i] - 1;
        EXPECT_EQ(cb.spec.size_of(m), expected);
      }
      EXPECT_TRUE(labeled_equal(zero_divisor_graph_in_blowup_labels(p, cb), zero_divisor_graph(build_blowup(cb.spec).poset)));
    }
}

TEST(Canonical, TwoAtomLatticeGivesK25) {
  const FinitePoset l = corpus::two_atom_lattice();
  const CanonicalBlowup cb = canonical_blowup_of(l);
  EXPECT_EQ(cb.spec, (BlowupSpec{2, {{0b01, 5}, {0b10, 2}}}));
  const SimpleGraph g = zero_divisor_graph(l);
  EXPECT_EQ(g.size(), 7u);
  EXPECT_EQ(g.edge_count(), 10u);
  for (Vertex v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v), g.label(v).starts_with("x1") ? 2u : 5u);
  EXPECT_TRUE(labeled_equal(zero_divisor_graph_in_blowup_labels(l, cb), zero_divisor_graph(build_blowup(cb.spec).poset)));
}

TEST(Canonical, PreconditionErrors) {
  EXPECT_EQ(code_of([] { canonical_blowup_of(diamond(3)); }), ErrorCode::NotZeroDistributive);
  EXPECT_EQ(code_of([] { canonical_blowup_of(chain(1)); }), ErrorCode::NotApplicable);
  std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}};
  const auto no_top = FinitePoset::from_cover_relations({"0", "a", "b"}, covers, 0, std::nullopt);
  EXPECT_EQ(code_of([&] { canonical_blowup_of(no_top); }), ErrorCode::NotBounded);
}
