#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sdim/poset.hpp"

namespace sdim {

inline constexpr std::size_t kMaxBlowupAtoms = 20;

inline Mask full_mask(std::size_t n) { return (Mask{1} << n) - 1; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

/// Binary string with atom 1 in the rightmost position: {1,2} of 3 is "011".
inline std::string mask_to_string(Mask mask, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) s[n - 1 - i] = '1';
  return s;
}

inline Mask mask_from_string(std::string_view s) {
  if (s.empty() || s.size() > 63) throw Error(ErrorCode::InvalidSpec, "mask string has bad length");
  Mask m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[s.size() - 1 - i];
    if (c == '1')
      m |= Mask{1} << i;
    else if (c != '0')
      throw Error(ErrorCode::InvalidSpec, "mask string must be binary: " + std::string(s));
  }
  return m;
}

/// Recipe for a generalized blow-up of 2^n: every nonempty proper element
/// of the Boolean lattice becomes a chain of the given size (default 1).
struct BlowupSpec {
  std::size_t n = 0;
  std::map<Mask, std::size_t> chain_sizes;

  std::size_t size_of(Mask mask) const {
    auto it = chain_sizes.find(mask);
    return it == chain_sizes.end() ? 1 : it->second;
  }

  void validate() const {
    if (n < 1 || n > kMaxBlowupAtoms) throw Error(ErrorCode::InvalidSpec, "n must lie in 1.." + std::to_string(kMaxBlowupAtoms));
    for (auto [mask, size] : chain_sizes) {
      if (mask == 0 || mask >= full_mask(n))
        throw Error(ErrorCode::InvalidSpec, "mask " + std::to_string(mask) + " is not a nonempty proper subset");
      if (size < 1) throw Error(ErrorCode::InvalidSpec, "chain sizes must be positive");
    }
  }

  /// Same spec with explicit size-1 entries dropped.
  BlowupSpec normalized() const {
    BlowupSpec out{n, {}};
    for (auto [mask, size] : chain_sizes)
      if (size != 1) out.chain_sizes.emplace(mask, size);
    return out;
  }

  /// |Z*(L^B)|: total chain size over nonempty proper masks.
  std::size_t zero_divisor_count() const {
    std::size_t total = 0;
    for (Mask m = 1; m < full_mask(n); ++m) total += size_of(m);
    return total;
  }

  /// Number of atoms whose chain has a single element.
  std::size_t singleton_atom_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) m += size_of(Mask{1} << i) == 1;
    return m;
  }

  friend bool operator==(const BlowupSpec& a, const BlowupSpec& b) {
    return a.n == b.n && a.normalized().chain_sizes == b.normalized().chain_sizes;
  }
};

/// A blow-up element: `level` counts from 1 along the chain of `mask`.
/// The reserved 0 and 1 are {0, 1} and {full, 1}.
struct BlownElement {
  Mask mask = 0;
  std::size_t level = 1;

  friend bool operator==(const BlownElement&, const BlownElement&) = default;
  friend auto operator<=>(const BlownElement&, const BlownElement&) = default;
};

/// Tuple label: the level at every coordinate of the mask, 0 elsewhere.
inline std::string blown_label(std::size_t n, BlownElement e) {
  std::vector<std::size_t> coords(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (e.mask >> i & 1) coords[i] = e.level;
  return tuple_label(coords);
}

inline bool blown_leq(BlownElement a, BlownElement b) {
  if (a.mask == b.mask) return a.level <= b.level;
  return (a.mask & b.mask) == a.mask;
}

struct BlowupLattice {
  BlowupSpec spec;
  FinitePoset poset;
  std::vector<BlownElement> elements;  // per poset index

  Element index_of(BlownElement e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e) throw Error(ErrorCode::UnknownElement, blown_label(spec.n, e));
    return static_cast<Element>(it - elements.begin());
  }
  std::string label(BlownElement e) const { return blown_label(spec.n, e); }
};

/// Elements are 0, then each chain in ascending mask order, then 1;
/// so `elements` is sorted and index i of 2^n is mask i.
inline BlowupLattice build_blowup(const BlowupSpec& spec) {
  spec.validate();
  BlowupLattice out;
  out.spec = spec.normalized();
  const Mask full = full_mask(spec.n);
  out.elements.push_back({0, 1});
  for (Mask m = 1; m < full; ++m)
    for (std::size_t t = 1; t <= spec.size_of(m); ++t) out.elements.push_back({m, t});
  out.elements.push_back({full, 1});

  std::vector<std::string> labels;
  labels.reserve(out.elements.size());
  for (auto e : out.elements) labels.push_back(blown_label(spec.n, e));
  const auto& els = out.elements;
  out.poset = FinitePoset::from_order(std::move(labels),
                                      [&els](Element x, Element y) { return blown_leq(els[x], els[y]); });
  return out;
}

/// 2^n on subset masks; element index equals mask.
inline FinitePoset boolean_lattice(std::size_t n) { return build_blowup(BlowupSpec{n, {}}).poset; }

struct CanonicalBlowup {
  BlowupSpec spec;
  /// Each zero divisor of the source lattice mapped to its blow-up element.
  std::map<Element, BlownElement> relabeling;
};

/// Reads the blow-up recipe off the annihilator classes of a finite bounded
/// 0-distributive lattice. Dense classes are dropped; levels inside a class
/// follow a linear extension (ascending down-set size, then index).
inline CanonicalBlowup canonical_blowup_of(const FinitePoset& lattice) {
  lattice.require_bottom();
  lattice.require_top();
  if (!is_zero_distributive(lattice))
    throw Error(ErrorCode::NotZeroDistributive, "the lattice is not 0-distributive");
  const ClassPartition q = quotient_classes(lattice);
  if (q.atom_count == 0) throw Error(ErrorCode::NotApplicable, "lattice has no atoms");
  if (q.atom_count > kMaxBlowupAtoms) throw Error(ErrorCode::TooLarge, "too many atoms for a blow-up");
  if (!q.boolean_image) throw std::logic_error("annihilator quotient of a 0-distributive lattice is not Boolean");

  CanonicalBlowup out;
  out.spec.n = q.atom_count;
  const Mask full = full_mask(q.atom_count);
  for (std::size_t c = 0; c < q.size(); ++c) {
    const Mask mask = (*q.boolean_image)[c];
    if (mask == 0 || mask == full) continue;
    std::vector<Element> members = q.classes[c];
    std::stable_sort(members.begin(), members.end(), [&](Element a, Element b) {
      return lattice.down_set(a).count() < lattice.down_set(b).count();
    });
    if (members.size() != 1) out.spec.chain_sizes[mask] = members.size();
    for (std::size_t t = 0; t < members.size(); ++t) out.relabeling[members[t]] = {mask, t + 1};
  }
  return out;
}

/// Random spec: n uniform in {3,4}; each nonempty proper mask independently
/// gets a size uniform in {1,2,3} with probability 1/2, otherwise 1.
/// Raw engine output is reduced by modulus so corpora match across
/// standard libraries.
inline BlowupSpec random_blowup_spec(std::mt19937_64& rng, std::size_t min_n = 3, std::size_t max_n = 4,
                                     std::size_t max_size = 3) {
  BlowupSpec spec;
  spec.n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
  for (Mask m = 1; m < full_mask(spec.n); ++m) {
    bool blown = rng() % 2 == 0;
    std::size_t size = 1 + static_cast<std::size_t>(rng() % max_size);
    if (blown && size != 1) spec.chain_sizes[m] = size;
  }
  return spec;
}

}  // namespace sdim
