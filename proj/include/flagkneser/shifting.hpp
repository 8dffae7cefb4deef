#pragma once

// i,j-shifting of sets, flags and families.
//
// The elementary shift S_{i,j} replaces i by j in a set when i is present
// and j is absent, and otherwise leaves the set unchanged.  Flags are
// shifted part by part (nesting is preserved).  A family shift keeps a
// member fixed when its image already lies in the *original* family, so the
// family's cardinality is always preserved; on independent families it also
// preserves independence.  A left shift is S_{i,j} with i >= j.

#include <stdexcept>
#include <vector>

#include "flagkneser/setcore.hpp"

namespace flagkneser {

struct ShiftPair {
  int i;
  int j;
  bool is_left() const noexcept { return i >= j; }
};

inline ElementSet shift_set(const ElementSet& s, ShiftPair p) {
  const int n = s.ground_size();
  if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) throw std::invalid_argument("shift_set: index out of range");
  const Mask bi = Mask{1} << (p.i - 1);
  const Mask bj = Mask{1} << (p.j - 1);
  Mask m = s.mask();
  if ((m & bi) != 0 && (m & bj) == 0) m = (m & ~bi) | bj;
  return ElementSet(n, m);
}

inline Flag shift_flag(const Flag& f, ShiftPair p) {
  const int n = f.n();
  if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) throw std::invalid_argument("shift_flag: index out of range");
  const Mask bi = Mask{1} << (p.i - 1);
  const Mask bj = Mask{1} << (p.j - 1);
  std::vector<Mask> parts = f.part_masks();
  for (Mask& m : parts)
    if ((m & bi) != 0 && (m & bj) == 0) m = (m & ~bi) | bj;
  return Flag(n, std::move(parts));
}

namespace detail {

/// The conditional family shift as a plain set map (no independence check):
/// each member maps to its shifted image unless that image already belongs
/// to the original family, in which case the member stays.
inline FlagFamily shift_family_set(const FlagFamily& fam, ShiftPair p) {
  std::vector<Flag> out;
  out.reserve(fam.size());
  for (const Flag& f : fam.flags()) {
    Flag g = shift_flag(f, p);
    out.push_back((g == f || fam.contains(g)) ? f : std::move(g));
  }
  FlagFamily result(fam.n(), fam.type(), std::move(out));
  if (result.size() != fam.size()) throw std::logic_error("shift_family: cardinality changed");
  return result;
}

}  // namespace detail

/// Conditional shift of an independent family; preserves cardinality and
/// independence.  Precondition: fam is independent.
inline FlagFamily shift_family(const FlagFamily& fam, ShiftPair p) {
  if (!is_independent(fam)) throw std::invalid_argument("shift_family: family is not independent");
  return detail::shift_family_set(fam, p);
}

/// True iff every left shift fixes the family.
inline bool is_left_shifted(const FlagFamily& fam) {
  const int n = fam.n();
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i)
      if (!(detail::shift_family_set(fam, {i, j}) == fam)) return false;
  return true;
}

/// Applies left shifts in sweeps — pairs (i,j) with i > j ordered
/// lexicographically by (j,i) — until a full sweep changes nothing.
/// Terminates because every productive application strictly decreases the
/// total element sum of the family.  Precondition: fam is independent.
inline FlagFamily left_shift_normalize(const FlagFamily& fam) {
  if (!is_independent(fam)) throw std::invalid_argument("left_shift_normalize: family is not independent");
  FlagFamily cur = fam;
  const int n = fam.n();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 1; j <= n; ++j) {
      for (int i = j + 1; i <= n; ++i) {
        FlagFamily next = detail::shift_family_set(cur, {i, j});
        if (!(next == cur)) {
          cur = std::move(next);
          changed = true;
        }
      }
    }
  }
  return cur;
}

}  // namespace flagkneser
