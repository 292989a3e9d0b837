#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sdim/algebra.hpp"
#include "sdim/blowup.hpp"

namespace sdim::corpus {

/// The 18-element 0-distributive lattice whose two atom classes have sizes
/// 5 and 2: a five-element column 0 < x1^1 < {x1^2, x1^3, x1^4} < x1^5
/// stacked three high, with d1..d9 dense.
inline FinitePoset two_atom_lattice() {
  std::vector<std::string> labels{"0",    "x1^1", "x1^2", "x1^3", "x1^4", "x1^5", "x2^1", "x2^2", "d1",
                                  "d2",   "d3",   "d4",   "d5",   "d6",   "d7",   "d8",   "d9",   "1"};
  using P = std::pair<std::string, std::string>;
  std::vector<P> covers;
  auto diamond_column = [&](const std::string& base, const std::string& a, const std::string& b,
                            const std::string& c, const std::string& top) {
    for (auto* mid : {&a, &b, &c}) {
      covers.emplace_back(base, *mid);
      covers.emplace_back(*mid, top);
    }
  };
  covers.emplace_back("0", "x1^1");
  covers.emplace_back("x2^1", "d1");
  covers.emplace_back("x2^2", "d6");
  diamond_column("x1^1", "x1^2", "x1^3", "x1^4", "x1^5");
  diamond_column("d1", "d2", "d3", "d4", "d5");
  diamond_column("d6", "d7", "d8", "d9", "1");
  const std::vector<std::vector<std::string>> rows{{"0", "x2^1", "x2^2"}, {"x1^1", "d1", "d6"}, {"x1^2", "d2", "d7"},
                                                   {"x1^3", "d3", "d8"},  {"x1^4", "d4", "d9"}, {"x1^5", "d5", "1"}};
  for (const auto& row : rows) {
    covers.emplace_back(row[0], row[1]);
    covers.emplace_back(row[1], row[2]);
  }
  return FinitePoset::from_cover_relations(std::move(labels), covers, "0", "1");
}

/// Blow-up of 2^3 with chains C1:3, C2:1, C3:2, C12:2, C13:3, C23:1.
inline BlowupSpec three_atom_example_spec() {
  return BlowupSpec{3, {{0b001, 3}, {0b011, 2}, {0b100, 2}, {0b101, 3}}};
}

/// Minimum strong resolving set of the three-atom example, in tuple labels.
inline std::vector<std::string> three_atom_example_witness() {
  return {"(1,0,0)", "(2,0,0)", "(0,0,1)", "(1,0,1)", "(2,0,2)", "(3,0,3)", "(1,1,0)", "(2,2,0)"};
}

/// Seeded corpus of random blow-up specs.
inline std::vector<BlowupSpec> random_specs(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<BlowupSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_blowup_spec(rng));
  return out;
}

/// Every product of chains with sizes drawn from `choices`, `k` factors.
inline std::vector<std::vector<std::size_t>> chain_size_grid(std::size_t k, const std::vector<std::size_t>& choices) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out)
      for (auto c : choices) {
        auto v = prefix;
        v.push_back(c);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

struct NamedPoset {
  std::string name;
  FinitePoset poset;
};

/// Fixed bounded lattices used by the structural suites.
inline std::vector<NamedPoset> standard_lattices() {
  std::vector<NamedPoset> out;
  for (std::size_t n = 2; n <= 5; ++n) out.push_back({"boolean-" + std::to_string(n), boolean_lattice(n)});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"M" + std::to_string(n), diamond(n)});
  for (const auto& sizes : chain_size_grid(3, {2, 3}))
    out.push_back({"chains" + tuple_label(sizes), chain_product(sizes)});
  out.push_back({"two-atom-lattice", two_atom_lattice()});
  out.push_back({"three-atom-example", build_blowup(three_atom_example_spec()).poset});
  for (std::uint64_t n : {12ULL, 60ULL, 210ULL})
    out.push_back({"Id(Z" + std::to_string(n) + ")^dual", ideal_lattice_dual_zn(n)});
  return out;
}

}  // namespace sdim::corpus
