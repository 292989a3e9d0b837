#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdim/blowup.hpp"
#include "sdim/graph.hpp"

namespace sdim {

/// Hard limit on enumerated ring or vector-space elements.
inline constexpr std::size_t kDefaultElementBudget = 100000;

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

inline bool is_prime_power(std::uint64_t q) { return q >= 2 && factorize(q).size() == 1; }

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

namespace detail {
inline void check_budget(std::uint64_t count, std::size_t budget) {
  if (count > budget)
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(count) + " elements exceed the enumeration budget of " + std::to_string(budget));
}

/// Mixed-radix enumeration, first coordinate fastest.
inline std::vector<std::vector<std::uint64_t>> tuples(std::span<const std::uint64_t> radix, std::size_t budget) {
  std::uint64_t total = 1;
  for (auto r : radix) {
    total *= r;
    check_budget(total, budget);
  }
  std::vector<std::vector<std::uint64_t>> out(total, std::vector<std::uint64_t>(radix.size()));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < radix.size(); ++i) {
      out[idx][i] = rest % radix[i];
      rest /= radix[i];
    }
  }
  return out;
}

inline std::string tuple_label(std::span<const std::uint64_t> coords) {
  std::vector<std::size_t> c(coords.begin(), coords.end());
  return sdim::tuple_label(c);
}
}  // namespace detail

/// A vertex of an algebraic graph matched to its predicted blow-up element.
struct AdapterCorrespondence {
  BlowupSpec spec;
  std::vector<std::string> predicted_labels;  // per adapter-graph vertex
};

// ---------------------------------------------------------------------------
// Reduced rings: products of finite fields.

struct ReducedRingSpec {
  std::vector<std::uint64_t> field_orders;

  void validate() const {
    if (field_orders.empty()) throw Error(ErrorCode::InvalidSpec, "at least one field is required");
    for (auto q : field_orders)
      if (!is_prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
};

/// Γ(F_1 × … × F_k). Field elements are indexed 0..q-1 with 0 the zero; a
/// product vanishes exactly when supports are disjoint, so field
/// multiplication itself is never needed.
inline SimpleGraph reduced_ring_zdg(const ReducedRingSpec& spec, std::size_t budget = kDefaultElementBudget) {
  spec.validate();
  const auto elements = detail::tuples(spec.field_orders, budget);
  std::vector<std::size_t> vertices;
  std::vector<Mask> support;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Mask s = 0;
    for (std::size_t c = 0; c < elements[i].size(); ++c)
      if (elements[i][c] != 0) s |= Mask{1} << c;
    if (s == 0 || s == full_mask(spec.field_orders.size())) continue;
    vertices.push_back(i);
    support.push_back(s);
    labels.push_back(detail::tuple_label(elements[i]));
  }
  SimpleGraph g(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if ((support[i] & support[j]) == 0) g.add_edge(i, j);
  return g;
}

/// G of the product of chains |C_i| = |F_i|, with the same tuple labels.
inline SimpleGraph reduced_ring_predicted_graph(const ReducedRingSpec& spec) {
  spec.validate();
  std::vector<std::size_t> sizes(spec.field_orders.begin(), spec.field_orders.end());
  return zero_divisor_graph(chain_product(sizes));
}

/// |Z(R)*| − 2n − 2m + 2 with n fields other than Z_2 and m copies of Z_2;
/// needs at least three factors.
inline long long reduced_ring_sdim_formula(const ReducedRingSpec& spec) {
  spec.validate();
  const std::size_t k = spec.field_orders.size();
  if (k < 3) throw Error(ErrorCode::HypothesisUnmet, "fewer than three fields");
  std::uint64_t total = 1, units = 1;
  std::size_t twos = 0;
  for (auto q : spec.field_orders) {
    total *= q;
    units *= q - 1;
    twos += q == 2;
  }
  const long long zstar = static_cast<long long>(total - units - 1);
  const long long n = static_cast<long long>(k - twos), m = static_cast<long long>(twos);
  return zstar - 2 * n - 2 * m + 2;
}

// ---------------------------------------------------------------------------
// Comaximal graph Γ₂′ of a product of local rings Z_{p^e}.

struct LocalProductSpec {
  std::vector<std::pair<std::uint64_t, unsigned>> prime_powers;

  void validate() const {
    if (prime_powers.empty()) throw Error(ErrorCode::InvalidSpec, "at least one factor is required");
    for (auto [p, e] : prime_powers) {
      if (!is_prime(p)) throw Error(ErrorCode::NotPrimePower, std::to_string(p) + " is not prime");
      if (e < 1) throw Error(ErrorCode::InvalidSpec, "exponents must be positive");
    }
  }
  std::vector<std::uint64_t> moduli() const {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : prime_powers) out.push_back(ipow(p, e));
    return out;
  }
};

/// Chain size predicted for non-unit mask N: ∏_{i∉N} φ(p_i^{e_i}) · ∏_{i∈N} p_i^{e_i−1}.
inline std::size_t gamma2prime_chain_size(const LocalProductSpec& spec, Mask nonunit_mask) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < spec.prime_powers.size(); ++i) {
    auto [p, e] = spec.prime_powers[i];
    size *= (nonunit_mask >> i & 1) ? ipow(p, e - 1) : ipow(p, e - 1) * (p - 1);
  }
  return size;
}

inline BlowupSpec gamma2prime_blowup_spec(const LocalProductSpec& spec) {
  BlowupSpec out{spec.prime_powers.size(), {}};
  for (Mask m = 1; m < full_mask(out.n); ++m)
    if (auto s = gamma2prime_chain_size(spec, m); s != 1) out.chain_sizes[m] = s;
  return out;
}

struct AdapterGraph {
  SimpleGraph graph;
  AdapterCorrespondence predicted;
};

/// Γ₂′(∏ Z_{p_i^{e_i}}): non-units outside J(R) = ∏ (p_i), adjacent when
/// Rx + Ry = R, i.e. every coordinate of x or of y is a unit.
///
/// The predicted blow-up indexes each vertex by the maximal ideals that
/// contain it (its non-unit coordinates); adjacency is disjointness of
/// those masks, and levels number the vertices of a mask in enumeration
/// order.
inline AdapterGraph comaximal_gamma2prime(const LocalProductSpec& spec, std::size_t budget = kDefaultElementBudget) {
  spec.validate();
  const std::size_t k = spec.prime_powers.size();
  if (k > kMaxBlowupAtoms) throw Error(ErrorCode::TooLarge, "too many factors");
  const auto mod = spec.moduli();
  const auto elements = detail::tuples(mod, budget);

  std::vector<Mask> nonunit;
  std::vector<std::string> labels;
  for (const auto& x : elements) {
    Mask m = 0;
    for (std::size_t c = 0; c < k; ++c)
      if (x[c] % spec.prime_powers[c].first == 0) m |= Mask{1} << c;
    if (m == 0 || m == full_mask(k)) continue;  // unit, or inside J(R)
    nonunit.push_back(m);
    labels.push_back(detail::tuple_label(x));
  }

  AdapterGraph out{SimpleGraph(labels), {}};
  for (std::size_t i = 0; i < nonunit.size(); ++i)
    for (std::size_t j = i + 1; j < nonunit.size(); ++j)
      if ((nonunit[i] & nonunit[j]) == 0) out.graph.add_edge(i, j);

  out.predicted.spec = gamma2prime_blowup_spec(spec);
  std::map<Mask, std::size_t> seen;
  for (Mask m : nonunit) out.predicted.predicted_labels.push_back(blown_label(k, {m, ++seen[m]}));
  return out;
}

// ---------------------------------------------------------------------------
// Comaximal ideal graph of Z_N and the dual ideal lattice.

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(n)) r *= p;
  return r;
}

/// dZ_N written "(d)", with the zero ideal NZ_N written "(0)".
inline std::string ideal_label(std::uint64_t d, std::uint64_t n) {
  return "(" + std::to_string(d == n ? 0 : d) + ")";
}

/// Id(Z_N) under inclusion: dZ_N ⊆ eZ_N iff e | d.
inline FinitePoset ideal_lattice_zn(std::uint64_t n, std::size_t budget = kDefaultElementBudget) {
  if (n < 2) throw Error(ErrorCode::InvalidSpec, "N must be at least 2");
  const auto divs = divisors(n);
  detail::check_budget(divs.size() * divs.size(), budget);
  std::vector<std::string> labels;
  for (auto d : divs) labels.push_back(ideal_label(d, n));
  return FinitePoset::from_order(std::move(labels), [&](Element a, Element b) { return divs[a] % divs[b] == 0; });
}

inline FinitePoset ideal_lattice_dual_zn(std::uint64_t n, std::size_t budget = kDefaultElementBudget) {
  return ideal_lattice_zn(n, budget).dual();
}

/// CG(Z_N): proper nonzero ideals not inside J = rad(N)Z_N, adjacent when
/// dZ_N + eZ_N = Z_N, i.e. gcd(d, e) = 1.
inline AdapterGraph comaximal_ideal_graph_zn(std::uint64_t n, std::size_t budget = kDefaultElementBudget) {
  if (n < 2) throw Error(ErrorCode::InvalidSpec, "N must be at least 2");
  const auto primes = factorize(n);
  if (primes.size() > kMaxBlowupAtoms) throw Error(ErrorCode::TooLarge, "too many prime factors");
  const auto divs = divisors(n);
  detail::check_budget(divs.size(), budget);
  const std::uint64_t rad = radical(n);
  std::vector<std::uint64_t> vertices;
  std::vector<std::string> labels;
  for (auto d : divs)
    if (d != 1 && d % rad != 0) {
      vertices.push_back(d);
      labels.push_back(ideal_label(d, n));
    }
  AdapterGraph out{SimpleGraph(labels), {}};
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (std::gcd(vertices[i], vertices[j]) == 1) out.graph.add_edge(i, j);

  // Mask of d: the maximal ideals (p) containing dZ_N, i.e. primes dividing d.
  // A mask N holds ∏_{p∈N} e_p ideals.
  out.predicted.spec.n = primes.size();
  for (Mask m = 1; m < full_mask(primes.size()); ++m) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (m >> i & 1) size *= primes[i].second;
    if (size != 1) out.predicted.spec.chain_sizes[m] = size;
  }
  std::map<Mask, std::size_t> seen;
  for (auto d : vertices) {
    Mask m = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (d % primes[i].first == 0) m |= Mask{1} << i;
    out.predicted.predicted_labels.push_back(blown_label(primes.size(), {m, ++seen[m]}));
  }
  return out;
}

/// Closed forms for sdim(CG(Z_N)): 1 for two maximal ideals in a reduced
/// ring; |V| − 2n + 2 (2^n − 2n when N is squarefree) for n >= 3.
inline long long comaximal_ideal_sdim_formula(std::uint64_t n) {
  const auto primes = factorize(n);
  const std::size_t k = primes.size();
  const bool reduced = radical(n) == n;
  if (k == 2 && reduced) return 1;
  if (k < 3) throw Error(ErrorCode::HypothesisUnmet, "needs three maximal ideals, or two in a reduced ring");
  std::size_t vertices = 0;
  const std::uint64_t rad = radical(n);
  for (auto d : divisors(n)) vertices += d != 1 && d % rad != 0;
  return static_cast<long long>(vertices) - 2 * static_cast<long long>(k) + 2;
}

// ---------------------------------------------------------------------------
// Nonzero component union graph of GF(q)^n.

/// UG(V): nonzero vectors, adjacent when their supports cover the basis.
/// Coefficients are indexed 0..q-1 with 0 the zero scalar.
///
/// Predicted form: a vector with proper support S sits on the blow-up chain
/// of the complementary mask (adjacency becomes disjointness); the
/// (q−1)^n full-support vectors form the K_t joined to everything, labeled
/// k1..kt.
inline AdapterGraph component_union_graph(std::size_t n, std::uint64_t q, std::size_t budget = kDefaultElementBudget) {
  if (!is_prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (n < 1 || n > kMaxBlowupAtoms) throw Error(ErrorCode::InvalidSpec, "dimension out of range");
  const std::vector<std::uint64_t> radix(n, q);
  const auto vectors = detail::tuples(radix, budget);
  const Mask full = full_mask(n);

  std::vector<Mask> support;
  std::vector<std::string> labels;
  for (const auto& v : vectors) {
    Mask s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) s |= Mask{1} << i;
    if (s == 0) continue;
    support.push_back(s);
    labels.push_back(detail::tuple_label(v));
  }
  AdapterGraph out{SimpleGraph(labels), {}};
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if ((support[i] | support[j]) == full) out.graph.add_edge(i, j);

  // Mask N collects the vectors whose support is the complement of N, (q−1)^{n−|N|} of them.
  out.predicted.spec.n = n;
  for (Mask m = 1; m < full; ++m)
    if (auto size = ipow(q - 1, static_cast<unsigned>(n - popcount(m))); size != 1) out.predicted.spec.chain_sizes[m] = size;
  std::map<Mask, std::size_t> seen;
  std::size_t apex = 0;
  for (Mask s : support) {
    if (s == full) {
      out.predicted.predicted_labels.push_back("k" + std::to_string(++apex));
    } else {
      const Mask m = full & ~s;
      out.predicted.predicted_labels.push_back(blown_label(n, {m, ++seen[m]}));
    }
  }
  return out;
}

/// Size of the joined clique, (q−1)^n.
inline std::size_t component_union_apex_size(std::size_t n, std::uint64_t q) { return ipow(q - 1, static_cast<unsigned>(n)); }

/// Closed form |V(UG)| − n + 2, for n >= 3.
inline long long component_union_sdim_formula(std::size_t n, std::uint64_t q) {
  if (n < 3) throw Error(ErrorCode::HypothesisUnmet, "dimension below 3");
  const long long vertices = static_cast<long long>(ipow(q, static_cast<unsigned>(n)) - 1);
  return vertices - static_cast<long long>(n) + 2;
}

/// Blow-up graph the adapter should equal, in predicted labels.
inline SimpleGraph predicted_blowup_graph(const BlowupSpec& spec) { return zero_divisor_graph(build_blowup(spec).poset); }

/// join(G(L^B), K_{(q−1)^n}) for the component union graph.
inline SimpleGraph predicted_component_union_graph(std::size_t n, std::uint64_t q, const BlowupSpec& spec) {
  return graph_join(predicted_blowup_graph(spec), complete_graph(component_union_apex_size(n, q), "k"));
}

/// Adapter graph rewritten in predicted labels.
inline SimpleGraph in_predicted_labels(const AdapterGraph& a) {
  return relabeled(a.graph, a.predicted.predicted_labels);
}

}  // namespace sdim
