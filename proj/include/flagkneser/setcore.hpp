#pragma once

// Core value types and predicates.
//
// DESIGN OVERVIEW
//   * Ground set is {1,...,n} with 1 <= n <= 62; subsets live in one Mask.
//   * A flag is a strictly nested chain of nonempty proper subsets; its type
//     is the strictly increasing list of part cardinalities.
//   * Two subsets are "opposite" when they are disjoint or cover the ground
//     set; two flags are opposite when all their parts are pairwise opposite.
//   * The opposition graph on all flags of a fixed type has these flags as
//     vertices and opposite pairs as edges; a family is independent when no
//     two of its members are opposite.
//
// Canonical orders (used everywhere: enumeration, family iteration, vertex
// indices, "lexicographically first" tie-breaking):
//   * flags are compared by their part masks taken outermost (largest) part
//     first, each mask compared as an integer;
//   * enumerate_flags yields flags in increasing canonical order.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagkneser/bits.hpp"

namespace flagkneser {

inline constexpr int kMaxGroundSetSize = 62;

/// Exact binomial coefficient; returns 0 for k < 0 or k > n.
/// Safe for all n <= 62 (values fit in 64 bits; intermediates use 128).
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial: result exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

/// Subset of {1,...,n}.
class ElementSet {
 public:
  ElementSet(int n, Mask bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxGroundSetSize) throw std::invalid_argument("ElementSet: ground set size out of range");
    if ((bits & ~full_mask(n)) != 0) throw std::invalid_argument("ElementSet: member outside ground set");
  }

  static ElementSet empty(int n) { return ElementSet(n, 0); }
  static ElementSet full(int n) { return ElementSet(n, full_mask(n)); }
  static ElementSet of(int n, std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) {
      if (e < 1 || e > n) throw std::invalid_argument("ElementSet: element out of range");
      m |= Mask{1} << (e - 1);
    }
    return ElementSet(n, m);
  }

  int ground_size() const noexcept { return n_; }
  Mask mask() const noexcept { return bits_; }
  int cardinality() const noexcept { return popcount(bits_); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(n_); }
  bool contains(int m) const {
    if (m < 1 || m > n_) throw std::invalid_argument("ElementSet: element out of range");
    return (bits_ >> (m - 1)) & 1;
  }
  ElementSet complement() const { return ElementSet(n_, full_mask(n_) & ~bits_); }

  /// Least element; set must be nonempty.
  int min_element() const {
    if (bits_ == 0) throw std::invalid_argument("ElementSet: min of empty set");
    return lowest_bit(bits_) + 1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(lowest_bit(m) + 1);
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int n_;
  Mask bits_;
};

inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

/// X and Y are opposite when X∩Y = ∅ or X∪Y = {1,...,n}.
inline bool elements_opposite(const ElementSet& x, const ElementSet& y) {
  if (x.ground_size() != y.ground_size()) throw std::invalid_argument("elements_opposite: ground sets differ");
  return (x.mask() & y.mask()) == 0 || (x.mask() | y.mask()) == full_mask(x.ground_size());
}

/// Strictly increasing list of part cardinalities.
class FlagType {
 public:
  explicit FlagType(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("FlagType: empty size list");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (sizes_[i] < 1 || sizes_[i] > kMaxGroundSetSize - 1)
        throw std::invalid_argument("FlagType: size out of range");
      if (i > 0 && sizes_[i] <= sizes_[i - 1])
        throw std::invalid_argument("FlagType: sizes must be strictly increasing");
    }
  }
  FlagType(std::initializer_list<int> sizes) : FlagType(std::vector<int>(sizes)) {}

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  std::size_t length() const noexcept { return sizes_.size(); }
  int smallest() const noexcept { return sizes_.front(); }
  int largest() const noexcept { return sizes_.back(); }
  bool is_pair() const noexcept { return sizes_.size() == 2; }

  /// All sizes must be proper for ground set {1,...,n}.
  void validate_for_ground(int n) const {
    if (largest() > n - 1) throw std::invalid_argument("FlagType: part size not proper for ground set");
  }

  friend bool operator==(const FlagType&, const FlagType&) = default;

 private:
  std::vector<int> sizes_;
};

inline std::string to_string(const FlagType& t) {
  std::string out;
  for (std::size_t i = 0; i < t.sizes().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t.sizes()[i]);
  }
  return out;
}

/// Strictly nested chain of nonempty proper subsets of {1,...,n},
/// stored smallest part first.
class Flag {
 public:
  Flag(int n, std::vector<Mask> parts) : n_(n), parts_(std::move(parts)) {
    if (n < 1 || n > kMaxGroundSetSize) throw std::invalid_argument("Flag: ground set size out of range");
    if (parts_.empty()) throw std::invalid_argument("Flag: no parts");
    std::sort(parts_.begin(), parts_.end(), [](Mask x, Mask y) { return popcount(x) < popcount(y); });
    Mask full = full_mask(n);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("Flag: empty part");
      if ((parts_[i] & ~full) != 0) throw std::invalid_argument("Flag: part outside ground set");
      if (parts_[i] == full) throw std::invalid_argument("Flag: part equals ground set");
      if (i > 0) {
        if (parts_[i] == parts_[i - 1] || (parts_[i - 1] & ~parts_[i]) != 0)
          throw std::invalid_argument("Flag: parts are not strictly nested");
      }
    }
  }

  Flag(int n, const std::vector<ElementSet>& parts) : Flag(n, masks_of(n, parts)) {}

  static Flag of(int n, std::initializer_list<std::initializer_list<int>> parts) {
    std::vector<Mask> ms;
    for (const auto& p : parts) ms.push_back(ElementSet::of(n, p).mask());
    return Flag(n, std::move(ms));
  }

  int n() const noexcept { return n_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<Mask>& part_masks() const noexcept { return parts_; }
  ElementSet part(int k) const { return ElementSet(n_, parts_.at(static_cast<std::size_t>(k))); }
  Mask smallest_mask() const noexcept { return parts_.front(); }
  Mask largest_mask() const noexcept { return parts_.back(); }

  FlagType type() const {
    std::vector<int> sizes;
    sizes.reserve(parts_.size());
    for (Mask p : parts_) sizes.push_back(popcount(p));
    return FlagType(std::move(sizes));
  }

  friend bool operator==(const Flag&, const Flag&) = default;

  /// Canonical order: outermost part first, masks as integers.
  friend bool operator<(const Flag& x, const Flag& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return std::lexicographical_compare(x.parts_.rbegin(), x.parts_.rend(), y.parts_.rbegin(), y.parts_.rend());
  }

 private:
  static std::vector<Mask> masks_of(int n, const std::vector<ElementSet>& parts) {
    std::vector<Mask> ms;
    ms.reserve(parts.size());
    for (const auto& p : parts) {
      if (p.ground_size() != n) throw std::invalid_argument("Flag: part ground set differs");
      ms.push_back(p.mask());
    }
    return ms;
  }

  int n_;
  std::vector<Mask> parts_;
};

inline std::string to_string(const Flag& f) {
  std::string out;
  for (int k = 0; k < f.part_count(); ++k) {
    if (k) out += ',';
    out += to_string(f.part(k));
  }
  return out;
}

/// Flags f and g are opposite when every part of f is opposite to every
/// part of g.  The flags may have different types.
inline bool flags_opposite(const Flag& f, const Flag& g) {
  if (f.n() != g.n()) throw std::invalid_argument("flags_opposite: ground sets differ");
  const Mask full = full_mask(f.n());
  for (Mask p : f.part_masks())
    for (Mask q : g.part_masks())
      if ((p & q) != 0 && (p | q) != full) return false;
  return true;
}

/// Fast path for two equal two-part types {a,b} with a+b < n and a < n/2 < b:
/// flags (A1,B1), (A2,B2) are opposite iff B1∪B2 = {1,...,n}, A1∩B2 = ∅ and
/// A2∩B1 = ∅.  Agreement with flags_opposite under these hypotheses is a
/// tested invariant; callers are responsible for the hypotheses.
inline bool flags_opposite_ab(const Flag& f, const Flag& g) {
  const Mask full = full_mask(f.n());
  return (f.largest_mask() | g.largest_mask()) == full && (f.smallest_mask() & g.largest_mask()) == 0 &&
         (g.smallest_mask() & f.largest_mask()) == 0;
}

/// Graph family descriptor: all flags of one type on {1,...,n}.
struct GraphSpec {
  int n;
  FlagType type;

  GraphSpec(int n_, FlagType type_) : n(n_), type(std::move(type_)) {
    if (n < 2 || n > kMaxGroundSetSize) throw std::invalid_argument("GraphSpec: ground set size out of range");
    type.validate_for_ground(n);
  }

  /// Number of flags of this type: C(n,t_k)·C(t_k,t_{k-1})·…·C(t_2,t_1).
  std::uint64_t vertex_count() const {
    unsigned __int128 v = 1;
    int outer = n;
    const auto& s = type.sizes();
    for (std::size_t i = s.size(); i-- > 0;) {
      v *= binomial(outer, s[i]);
      if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("vertex_count: exceeds 64 bits");
      outer = s[i];
    }
    return static_cast<std::uint64_t>(v);
  }

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// All flags of the given type, each exactly once, in canonical order
/// (lexicographic on the part bit encodings, outermost part first).
inline std::vector<Flag> enumerate_flags(const GraphSpec& spec) {
  std::vector<Flag> out;
  const auto& sizes = spec.type.sizes();
  std::vector<Mask> stack(sizes.size());

  auto rec = [&](auto&& self, std::size_t level, Mask universe) -> void {
    // level counts from the outermost part inwards.
    std::size_t idx = sizes.size() - 1 - level;
    for (Mask m : k_submasks(universe, sizes[idx])) {
      stack[idx] = m;
      if (idx == 0) {
        out.push_back(Flag(spec.n, stack));
      } else {
        self(self, level + 1, m);
      }
    }
  };
  rec(rec, 0, full_mask(spec.n));
  return out;
}

/// Family of distinct flags of one type, kept in canonical order.
class FlagFamily {
 public:
  FlagFamily(int n, FlagType type) : n_(n), type_(std::move(type)) {
    if (n < 1 || n > kMaxGroundSetSize) throw std::invalid_argument("FlagFamily: ground set size out of range");
    type_.validate_for_ground(n);
  }

  FlagFamily(int n, FlagType type, std::vector<Flag> flags) : FlagFamily(n, std::move(type)) {
    for (const Flag& f : flags) {
      if (f.n() != n_) throw std::invalid_argument("FlagFamily: flag ground set differs");
      if (!(f.type() == type_)) throw std::invalid_argument("FlagFamily: flag type differs");
    }
    std::sort(flags.begin(), flags.end());
    flags.erase(std::unique(flags.begin(), flags.end()), flags.end());
    flags_ = std::move(flags);
  }

  int n() const noexcept { return n_; }
  const FlagType& type() const noexcept { return type_; }
  std::size_t size() const noexcept { return flags_.size(); }
  bool empty() const noexcept { return flags_.empty(); }
  const std::vector<Flag>& flags() const noexcept { return flags_; }

  bool contains(const Flag& f) const {
    auto it = std::lower_bound(flags_.begin(), flags_.end(), f);
    return it != flags_.end() && *it == f;
  }

  friend bool operator==(const FlagFamily&, const FlagFamily&) = default;

 private:
  int n_;
  FlagType type_;
  std::vector<Flag> flags_;
};

/// No two members are opposite.
inline bool is_independent(const FlagFamily& fam) {
  const auto& fs = fam.flags();
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (flags_opposite(fs[i], fs[j])) return false;
  return true;
}

/// True iff no flag outside the family can be added while preserving
/// independence.  Precondition: the family is independent.
inline bool is_maximal_independent(const FlagFamily& fam) {
  if (!is_independent(fam)) throw std::invalid_argument("is_maximal_independent: family is not independent");
  for (const Flag& g : enumerate_flags(GraphSpec(fam.n(), fam.type()))) {
    if (fam.contains(g)) continue;
    bool addable = true;
    for (const Flag& f : fam.flags()) {
      if (flags_opposite(g, f)) {
        addable = false;
        break;
      }
    }
    if (addable) return false;
  }
  return true;
}

}  // namespace flagkneser
