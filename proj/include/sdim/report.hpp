#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdim/blowup.hpp"
#include "sdim/independent_set.hpp"
#include "sdim/resolving.hpp"
#include "sdim/strong_resolving.hpp"

namespace sdim {

/// sdim(G) as the vertex cover number of G_SR.
inline std::size_t sdim_via_gsr(const SimpleGraph& g) { return vertex_cover_number(strong_resolving_graph(g)); }

inline void require_formula_hypothesis(const BlowupSpec& spec) {
  spec.validate();
  if (spec.n < 3) throw Error(ErrorCode::HypothesisUnmet, "n<3: formula inapplicable");
}

/// |Z*(L^B)| − 2n + 2.
inline long long sdim_formula(const BlowupSpec& spec) {
  require_formula_hypothesis(spec);
  return static_cast<long long>(spec.zero_divisor_count()) - 2 * static_cast<long long>(spec.n) + 2;
}

/// β(G(L^B)_SR) = 2n − m − 2, m the number of single-element atom chains.
inline long long beta_gsr_formula(const BlowupSpec& spec) {
  require_formula_hypothesis(spec);
  return 2 * static_cast<long long>(spec.n) - static_cast<long long>(spec.singleton_atom_count()) - 2;
}

struct ReportOptions {
  std::size_t brute_cap = kDefaultBruteCap;
  bool run_brute = true;
};

struct SdimReport {
  std::optional<long long> formula_value;
  std::string formula_note;  // why the formula is absent, when it is
  long long gsr_value = 0;
  std::optional<long long> bruteforce_value;
  std::string bruteforce_note;

  std::size_t vertex_count = 0;
  std::size_t gsr_vertex_count = 0;
  std::size_t gsr_independence = 0;
  std::vector<std::string> vertex_cover;  // minimum vertex cover of G_SR
  std::optional<std::vector<std::string>> strong_resolving_set;
  std::vector<std::string> boundary;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;

  /// Every present value agrees.
  bool consistent() const {
    if (formula_value && *formula_value != gsr_value) return false;
    if (bruteforce_value && *bruteforce_value != gsr_value) return false;
    return true;
  }
};

namespace detail {
inline std::vector<std::string> labels_of(const SimpleGraph& g, const Bits& set) {
  std::vector<std::string> out;
  for (auto v = set.find_first(); v != Bits::npos; v = set.find_next(v)) out.push_back(g.label(v));
  return out;
}
}  // namespace detail

/// Runs the G_SR reduction and, under the cap, the definition-level search
/// on an arbitrary connected graph. A closed-form value may be supplied.
inline SdimReport graph_report(const SimpleGraph& g, std::optional<long long> formula, std::string formula_note,
                               const ReportOptions& options = {}) {
  SdimReport r;
  r.formula_value = formula;
  r.formula_note = std::move(formula_note);
  r.vertex_count = g.size();

  const DistanceMatrix d = all_pairs_distances(g);
  r.boundary = detail::labels_of(g, boundary(g, d));
  const SimpleGraph gsr = strong_resolving_graph(g, d);
  const Bits independent = max_independent_set(gsr);
  r.gsr_vertex_count = gsr.size();
  r.gsr_independence = independent.count();
  r.gsr_value = static_cast<long long>(gsr.size() - independent.count());
  r.vertex_cover = detail::labels_of(gsr, ~independent);

  if (!options.run_brute) {
    r.bruteforce_note = "not requested";
  } else if (g.size() > options.brute_cap) {
    r.bruteforce_note = std::to_string(g.size()) + " vertices > cap " + std::to_string(options.brute_cap);
  } else {
    auto brute = sdim_bruteforce(g, options.brute_cap);
    r.bruteforce_value = static_cast<long long>(brute.value);
    r.strong_resolving_set = detail::labels_of(g, brute.witness);
  }
  return r;
}

/// Three-way report for a blow-up lattice.
inline SdimReport full_report(const BlowupLattice& lb, const ReportOptions& options = {}) {
  std::optional<long long> formula;
  std::string note;
  try {
    formula = sdim_formula(lb.spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisUnmet) throw;
    note = "n<3: formula inapplicable";
  }
  SdimReport r = graph_report(zero_divisor_graph(lb.poset), formula, note, options);
  r.n = lb.spec.n;
  r.m = lb.spec.singleton_atom_count();
  return r;
}

}  // namespace sdim
