#pragma once

// Low-level bitmask utilities shared by the whole library.
//
// Subsets of the ground set {1,...,n} (n <= 62) are stored in a single
// machine word: element m corresponds to bit m-1.  Vertex sets of the
// opposition graph use the dynamic Bitset below.

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flagkneser {

using Mask = std::uint64_t;

inline int popcount(Mask m) noexcept { return std::popcount(m); }

/// Index of the lowest set bit; m must be nonzero.
inline int lowest_bit(Mask m) noexcept {
  assert(m != 0);
  return std::countr_zero(m);
}

/// Mask with the lowest n bits set.
inline Mask full_mask(int n) noexcept {
  assert(n >= 0 && n <= 63);
  return (n == 0) ? 0 : (~Mask{0} >> (64 - n));
}

/// Next mask with the same popcount in increasing order (Gosper's hack).
/// Returns 0 when the sequence is exhausted.
inline Mask next_same_popcount(Mask v) noexcept {
  assert(v != 0);
  Mask u = v & (Mask{0} - v);
  Mask w = v + u;
  if (w == 0) return 0;
  return w + (((w ^ v) / u) >> 2);
}

/// All k-element submasks of `universe`, ascending as integers.
inline std::vector<Mask> k_submasks(Mask universe, int k) {
  assert(k >= 0);
  std::vector<Mask> out;
  int p = popcount(universe);
  if (k > p) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Positions of the universe bits, ascending.
  int pos[64];
  int np = 0;
  for (Mask m = universe; m != 0; m &= m - 1) pos[np++] = lowest_bit(m);
  Mask limit = (p == 64) ? ~Mask{0} : ((Mask{1} << p) - 1);
  for (Mask c = (Mask{1} << k) - 1; c != 0 && c <= limit; c = next_same_popcount(c)) {
    Mask expanded = 0;
    for (Mask t = c; t != 0; t &= t - 1) expanded |= Mask{1} << pos[lowest_bit(t)];
    out.push_back(expanded);
  }
  return out;
}

/// Dynamic fixed-capacity bitset over vertex indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : nbits_(bits), w_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }
  void set(std::size_t i) noexcept { w_[i >> 6] |= Mask{1} << (i & 63); }
  void reset(std::size_t i) noexcept { w_[i >> 6] &= ~(Mask{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() noexcept {
    for (auto& x : w_) x = 0;
  }
  void set_all() noexcept {
    for (auto& x : w_) x = ~Mask{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Mask x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const noexcept {
    for (Mask x : w_)
      if (x) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  /// this := this \ o
  void subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }

  /// Lowest set index, or -1 if empty.
  int first() const noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>((i << 6) + std::countr_zero(w_[i]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (Mask m = w_[i]; m != 0; m &= m - 1)
        f(static_cast<std::size_t>((i << 6) + std::countr_zero(m)));
    }
  }

  friend bool operator==(const Bitset& x, const Bitset& y) {
    return x.nbits_ == y.nbits_ && x.w_ == y.w_;
  }

  std::vector<Mask>& words() noexcept { return w_; }
  const std::vector<Mask>& words() const noexcept { return w_; }

 private:
  void trim() noexcept {
    if (nbits_ & 63) w_.back() &= full_mask(static_cast<int>(nbits_ & 63));
  }

  std::size_t nbits_ = 0;
  std::vector<Mask> w_;
};

}  // namespace flagkneser
