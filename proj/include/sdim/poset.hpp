#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sdim/error.hpp"

namespace sdim {

using Element = std::size_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Posets larger than this compute meets and joins on demand.
inline constexpr std::size_t kEagerTableLimit = 4096;

inline std::vector<Element> elements_of(const Bits& bits) {
  std::vector<Element> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

inline Bits bits_of(std::size_t size, std::span<const Element> elements) {
  Bits out(size);
  for (Element e : elements) out.set(e);
  return out;
}

/// A finite poset stored as principal down-sets and up-sets, one bit row per
/// element. Elements are indexed in input order.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of a Hasse diagram.
  static FinitePoset from_cover_relations(std::vector<std::string> labels,
                                          std::span<const std::pair<Element, Element>> covers,
                                          std::optional<Element> bottom,
                                          std::optional<Element> top) {
    const std::size_t n = labels.size();
    std::vector<std::vector<Element>> lower_covers(n);
    std::vector<std::size_t> pending(n, 0);
    std::vector<std::vector<Element>> upper_covers(n);
    for (auto [lo, hi] : covers) {
      if (lo >= n || hi >= n) throw Error(ErrorCode::UnknownElement, "cover index out of range");
      if (lo == hi) throw Error(ErrorCode::CycleDetected, "self-cover on " + labels[lo]);
      lower_covers[hi].push_back(lo);
      upper_covers[lo].push_back(hi);
      ++pending[hi];
    }

    // Kahn order from minimal elements upward; down-sets accumulate along it.
    std::vector<Bits> down(n, Bits(n));
    std::vector<Element> queue;
    for (Element x = 0; x < n; ++x)
      if (pending[x] == 0) queue.push_back(x);
    std::size_t processed = 0;
    while (processed < queue.size()) {
      Element x = queue[processed++];
      down[x].set(x);
      for (Element lo : lower_covers[x]) down[x] |= down[lo];
      for (Element hi : upper_covers[x])
        if (--pending[hi] == 0) queue.push_back(hi);
    }
    if (processed != n) throw Error(ErrorCode::CycleDetected, "cover relation contains a cycle");

    FinitePoset p;
    p.labels_ = std::move(labels);
    p.down_ = std::move(down);
    p.finish(bottom, top, /*validate_order=*/false);
    return p;
  }

  /// Name-based overload used by the JSON reader and by hand-written fixtures.
  static FinitePoset from_cover_relations(std::vector<std::string> labels,
                                          std::span<const std::pair<std::string, std::string>> covers,
                                          const std::string& bottom, const std::string& top) {
    std::unordered_map<std::string, Element> index;
    for (Element i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::UnknownElement, name);
      return it->second;
    };
    std::vector<std::pair<Element, Element>> idx;
    idx.reserve(covers.size());
    for (auto& [a, b] : covers) idx.emplace_back(lookup(a), lookup(b));
    return from_cover_relations(std::move(labels), idx, lookup(bottom), lookup(top));
  }

  /// Builds a poset from an order predicate, checking the partial-order
  /// axioms. Bottom and top are detected when they exist.
  static FinitePoset from_order(std::vector<std::string> labels,
                                const std::function<bool(Element, Element)>& leq) {
    const std::size_t n = labels.size();
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.down_.assign(n, Bits(n));
    for (Element y = 0; y < n; ++y)
      for (Element x = 0; x < n; ++x)
        if (leq(x, y)) p.down_[y].set(x);
    p.finish(std::nullopt, std::nullopt, /*validate_order=*/true);
    return p;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }

  Element index_of(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) throw Error(ErrorCode::UnknownElement, name);
    return static_cast<Element>(it - labels_.begin());
  }

  bool leq(Element x, Element y) const { return down_[check(y)].test(check(x)); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  const Bits& down_set(Element x) const { return down_[check(x)]; }
  const Bits& up_set(Element x) const { return up_[check(x)]; }

  std::optional<Element> bottom() const noexcept { return bottom_; }
  std::optional<Element> top() const noexcept { return top_; }

  Element require_bottom() const {
    if (!bottom_) throw Error(ErrorCode::NotBounded, "poset has no least element");
    return *bottom_;
  }
  Element require_top() const {
    if (!top_) throw Error(ErrorCode::NotBounded, "poset has no greatest element");
    return *top_;
  }

  /// Common lower bounds of every element of `subset`; the whole poset for
  /// an empty subset.
  Bits lower_cone(const Bits& subset) const {
    Bits cone(size());
    cone.set();
    for (auto a = subset.find_first(); a != Bits::npos; a = subset.find_next(a)) cone &= down_[a];
    return cone;
  }
  Bits upper_cone(const Bits& subset) const {
    Bits cone(size());
    cone.set();
    for (auto a = subset.find_first(); a != Bits::npos; a = subset.find_next(a)) cone &= up_[a];
    return cone;
  }
  Bits lower_cone(std::span<const Element> subset) const { return lower_cone(bits_of(size(), checked(subset))); }
  Bits upper_cone(std::span<const Element> subset) const { return upper_cone(bits_of(size(), checked(subset))); }

  std::optional<Element> meet(Element x, Element y) const {
    check(x), check(y);
    if (!meet_.empty()) return decode(meet_[x * size() + y]);
    return greatest_of(down_[x] & down_[y]);
  }
  std::optional<Element> join(Element x, Element y) const {
    check(x), check(y);
    if (!join_.empty()) return decode(join_[x * size() + y]);
    return least_of(up_[x] & up_[y]);
  }

  /// Greatest element of `set` when one exists.
  std::optional<Element> greatest_of(const Bits& set) const {
    auto best = Bits::npos;
    for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i))
      if (best == Bits::npos || down_[i].count() > down_[best].count()) best = i;
    if (best == Bits::npos || !set.is_subset_of(down_[best])) return std::nullopt;
    return best;
  }
  std::optional<Element> least_of(const Bits& set) const {
    auto best = Bits::npos;
    for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i))
      if (best == Bits::npos || up_[i].count() > up_[best].count()) best = i;
    if (best == Bits::npos || !set.is_subset_of(up_[best])) return std::nullopt;
    return best;
  }

  /// Maximal elements of `set` in index order.
  std::vector<Element> maximal_of(const Bits& set) const {
    std::vector<Element> out;
    for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) {
      Bits strictly_above = up_[i] & set;
      strictly_above.reset(i);
      if (strictly_above.none()) out.push_back(i);
    }
    return out;
  }

  bool is_lattice() const {
    for (Element x = 0; x < size(); ++x)
      for (Element y = x + 1; y < size(); ++y)
        if (!meet(x, y) || !join(x, y)) return false;
    return size() > 0;
  }

  /// Same poset with every relation reversed; bottom and top swap.
  FinitePoset dual() const {
    FinitePoset p;
    p.labels_ = labels_;
    p.down_ = up_;
    p.finish(top_, bottom_, /*validate_order=*/false);
    return p;
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.down_ == b.down_ && a.bottom_ == b.bottom_ && a.top_ == b.top_;
  }

 private:
  Element check(Element x) const {
    if (x >= size()) throw Error(ErrorCode::UnknownElement, "element index " + std::to_string(x));
    return x;
  }
  std::span<const Element> checked(std::span<const Element> xs) const {
    for (Element x : xs) check(x);
    return xs;
  }
  static std::optional<Element> decode(std::int32_t v) {
    if (v < 0) return std::nullopt;
    return static_cast<Element>(v);
  }

  void finish(std::optional<Element> bottom, std::optional<Element> top, bool validate_order) {
    const std::size_t n = size();
    if (validate_order) {
      for (Element x = 0; x < n; ++x)
        if (!down_[x].test(x)) throw Error(ErrorCode::InvalidSpec, "order is not reflexive at " + labels_[x]);
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          if (x != y && down_[y].test(x) && down_[x].test(y))
            throw Error(ErrorCode::CycleDetected, labels_[x] + " and " + labels_[y] + " are mutually below");
          if (down_[y].test(x) && !down_[x].is_subset_of(down_[y]))
            throw Error(ErrorCode::InvalidSpec, "order is not transitive through " + labels_[x]);
        }
    }
    up_.assign(n, Bits(n));
    for (Element y = 0; y < n; ++y)
      for (auto x = down_[y].find_first(); x != Bits::npos; x = down_[y].find_next(x)) up_[x].set(y);

    if (bottom) {
      if (*bottom >= n || up_[*bottom].count() != n)
        throw Error(ErrorCode::NotBounded, "declared bottom is not the least element");
    } else {
      for (Element x = 0; x < n; ++x)
        if (up_[x].count() == n) bottom = x;
    }
    if (top) {
      if (*top >= n || down_[*top].count() != n)
        throw Error(ErrorCode::NotBounded, "declared top is not the greatest element");
    } else {
      for (Element x = 0; x < n; ++x)
        if (down_[x].count() == n) top = x;
    }
    bottom_ = bottom;
    top_ = top;

    meet_.clear();
    join_.clear();
    if (n <= kEagerTableLimit) {
      meet_.assign(n * n, -1);
      join_.assign(n * n, -1);
      for (Element x = 0; x < n; ++x)
        for (Element y = x; y < n; ++y) {
          auto m = greatest_of(down_[x] & down_[y]);
          auto j = least_of(up_[x] & up_[y]);
          std::int32_t mv = m ? static_cast<std::int32_t>(*m) : -1;
          std::int32_t jv = j ? static_cast<std::int32_t>(*j) : -1;
          meet_[x * n + y] = meet_[y * n + x] = mv;
          join_[x * n + y] = join_[y * n + x] = jv;
        }
    }
  }

  std::vector<std::string> labels_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::optional<Element> bottom_;
  std::optional<Element> top_;
  std::vector<std::int32_t> meet_;
  std::vector<std::int32_t> join_;
};

// ---------------------------------------------------------------------------
// Annihilators, zero divisors and pseudocomplements.

/// { b : lower_cone({x, b}) = {0} }.
inline Bits annihilator(const FinitePoset& p, Element x) {
  const Element zero = p.require_bottom();
  Bits out(p.size());
  const Bits& below_x = p.down_set(x);
  for (Element b = 0; b < p.size(); ++b) {
    Bits cone = below_x & p.down_set(b);
    if (cone.count() == 1 && cone.test(zero)) out.set(b);
  }
  return out;
}

/// Z(P) as literally defined: elements annihilated by some nonzero element.
/// Contains 0 whenever P has a nonzero element.
inline Bits zero_divisors(const FinitePoset& p) {
  const Element zero = p.require_bottom();
  Bits out(p.size());
  for (Element a = 0; a < p.size(); ++a) {
    Bits ann = annihilator(p, a);
    ann.reset(zero);
    if (ann.any()) out.set(a);
  }
  return out;
}

/// Z*(P) = Z(P) \ {0}; the vertex set of the zero-divisor graph.
inline Bits nonzero_zero_divisors(const FinitePoset& p) {
  Bits z = zero_divisors(p);
  z.reset(p.require_bottom());
  return z;
}

inline Bits dense_elements(const FinitePoset& p) { return ~zero_divisors(p); }

inline Bits atoms(const FinitePoset& p) {
  const Element zero = p.require_bottom();
  Bits out(p.size());
  for (Element x = 0; x < p.size(); ++x)
    if (x != zero && p.down_set(x).count() == 2) out.set(x);
  return out;
}

/// Largest element of the annihilator of x, if the annihilator has one.
inline std::optional<Element> pseudocomplement(const FinitePoset& p, Element x) {
  return p.greatest_of(annihilator(p, x));
}

inline bool is_pseudocomplemented(const FinitePoset& p) {
  if (!p.bottom() || !p.top()) return false;
  for (Element x = 0; x < p.size(); ++x)
    if (!pseudocomplement(p, x)) return false;
  return true;
}

inline void require_lattice(const FinitePoset& p) {
  if (!p.is_lattice()) throw Error(ErrorCode::NotALattice, "some pair lacks a meet or join");
}

/// a∧b = 0 and a∧c = 0 imply a∧(b∨c) = 0, i.e. every annihilator is closed
/// under binary joins.
inline bool is_zero_distributive(const FinitePoset& p) {
  require_lattice(p);
  for (Element a = 0; a < p.size(); ++a) {
    const Bits ann_bits = annihilator(p, a);
    const auto ann = elements_of(ann_bits);
    for (std::size_t i = 0; i < ann.size(); ++i)
      for (std::size_t j = i + 1; j < ann.size(); ++j)
        if (!ann_bits.test(*p.join(ann[i], ann[j]))) return false;
  }
  return true;
}

inline bool is_distributive(const FinitePoset& p) {
  require_lattice(p);
  const std::size_t n = p.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b + 1; c < n; ++c) {
        Element lhs = *p.meet(a, *p.join(b, c));
        Element rhs = *p.join(*p.meet(a, b), *p.meet(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

/// Bounded, distributive and complemented.
inline bool is_boolean(const FinitePoset& p) {
  if (!p.bottom() || !p.top() || !p.is_lattice() || !is_distributive(p)) return false;
  const Element zero = *p.bottom(), one = *p.top();
  for (Element a = 0; a < p.size(); ++a) {
    bool complemented = false;
    for (Element b = 0; b < p.size() && !complemented; ++b)
      complemented = *p.meet(a, b) == zero && *p.join(a, b) == one;
    if (!complemented) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The annihilator quotient [L].

using Mask = std::uint64_t;

struct ClassPartition {
  std::vector<std::vector<Element>> classes;  // ordered by least member
  std::vector<std::size_t> class_of;
  /// Class id -> set of atom positions below the class, present only when
  /// the quotient is Boolean. Atom i is the i-th atom in index order.
  std::optional<std::vector<Mask>> boolean_image;
  std::size_t atom_count = 0;

  std::size_t size() const noexcept { return classes.size(); }
};

/// Partitions P by equal annihilators. When P is pseudocomplemented the
/// partition by equal pseudocomplements is recomputed and must agree.
inline ClassPartition quotient_classes(const FinitePoset& p) {
  p.require_bottom();
  const std::size_t n = p.size();
  std::vector<Bits> ann(n);
  for (Element x = 0; x < n; ++x) ann[x] = annihilator(p, x);

  ClassPartition out;
  out.class_of.assign(n, 0);
  std::map<Bits, std::size_t> seen;
  for (Element x = 0; x < n; ++x) {
    auto [it, inserted] = seen.emplace(ann[x], out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(x);
    out.class_of[x] = it->second;
  }

  if (is_pseudocomplemented(p)) {
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y) {
        bool same_ann = out.class_of[x] == out.class_of[y];
        bool same_pc = *pseudocomplement(p, x) == *pseudocomplement(p, y);
        if (same_ann != same_pc)
          throw std::logic_error("annihilator and pseudocomplement partitions disagree at " + p.label(x) +
                                 ", " + p.label(y));
      }
  }

  const auto atom_list = elements_of(atoms(p));
  out.atom_count = atom_list.size();
  if (!p.is_lattice() || atom_list.size() >= 64 || !is_zero_distributive(p)) return out;

  // [q] <= [x] iff x⊥ ⊆ q⊥.
  std::vector<Mask> image(out.classes.size(), 0);
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const Bits& ann_c = ann[out.classes[c].front()];
    for (std::size_t i = 0; i < atom_list.size(); ++i)
      if (ann_c.is_subset_of(ann[atom_list[i]])) image[c] |= Mask{1} << i;
  }
  std::vector<Mask> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  bool bijective = sorted.size() == (std::size_t{1} << atom_list.size());
  for (std::size_t i = 0; bijective && i < sorted.size(); ++i) bijective = sorted[i] == i;
  if (bijective) out.boolean_image = std::move(image);
  return out;
}

// ---------------------------------------------------------------------------
// Standard small lattices used throughout the corpus.

inline FinitePoset chain(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return FinitePoset::from_order(std::move(labels), [](Element x, Element y) { return x <= y; });
}

/// M_n: bottom, n pairwise incomparable atoms, top.
inline FinitePoset diamond(std::size_t n) {
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  labels.push_back("1");
  const Element top = n + 1;
  return FinitePoset::from_order(std::move(labels), [top](Element x, Element y) {
    return x == y || x == 0 || y == top;
  });
}

inline std::string tuple_label(std::span<const std::size_t> coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

/// Product of chains with the given sizes under the componentwise order.
/// Coordinates run 0..size-1; the first coordinate varies fastest, so the
/// atom on coordinate i precedes the atom on coordinate i+1.
inline FinitePoset chain_product(std::span<const std::size_t> sizes) {
  std::size_t total = 1;
  for (auto s : sizes) {
    if (s == 0) throw Error(ErrorCode::InvalidSpec, "chain size must be positive");
    total *= s;
  }
  std::vector<std::vector<std::size_t>> coords(total, std::vector<std::size_t>(sizes.size()));
  std::vector<std::string> labels(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      coords[idx][i] = rest % sizes[i];
      rest /= sizes[i];
    }
    labels[idx] = tuple_label(coords[idx]);
  }
  return FinitePoset::from_order(std::move(labels), [&](Element x, Element y) {
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if (coords[x][i] > coords[y][i]) return false;
    return true;
  });
}

}  // namespace sdim
