#pragma once

#include <bit>
#include <cstdint>

namespace mnt {

// Fixed 128-bit set. Two words cover the 128-vertex cap, so adjacency
// rows and visited sets stay register-friendly in the search core.
struct Bits128 {
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;

  static Bits128 single(int i) {
    Bits128 b;
    b.set(i);
    return b;
  }

  // First n bits set.
  static Bits128 low(int n) {
    Bits128 b;
    if (n >= 128) {
      b.w0 = ~0ull;
      b.w1 = ~0ull;
    } else if (n > 64) {
      b.w0 = ~0ull;
      b.w1 = (1ull << (n - 64)) - 1;
    } else if (n == 64) {
      b.w0 = ~0ull;
    } else if (n > 0) {
      b.w0 = (1ull << n) - 1;
    }
    return b;
  }

  void set(int i) {
    if (i < 64)
      w0 |= 1ull << i;
    else
      w1 |= 1ull << (i - 64);
  }

  void reset(int i) {
    if (i < 64)
      w0 &= ~(1ull << i);
    else
      w1 &= ~(1ull << (i - 64));
  }

  bool test(int i) const {
    return i < 64 ? (w0 >> i) & 1 : (w1 >> (i - 64)) & 1;
  }

  int count() const { return std::popcount(w0) + std::popcount(w1); }
  bool any() const { return (w0 | w1) != 0; }
  bool none() const { return (w0 | w1) == 0; }

  // Lowest set bit, or -1 when empty.
  int first() const {
    if (w0) return std::countr_zero(w0);
    if (w1) return 64 + std::countr_zero(w1);
    return -1;
  }

  bool subset_of(const Bits128& o) const {
    return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0;
  }

  bool intersects(const Bits128& o) const {
    return ((w0 & o.w0) | (w1 & o.w1)) != 0;
  }

  friend Bits128 operator&(Bits128 a, const Bits128& b) {
    a.w0 &= b.w0;
    a.w1 &= b.w1;
    return a;
  }
  friend Bits128 operator|(Bits128 a, const Bits128& b) {
    a.w0 |= b.w0;
    a.w1 |= b.w1;
    return a;
  }
  friend Bits128 operator^(Bits128 a, const Bits128& b) {
    a.w0 ^= b.w0;
    a.w1 ^= b.w1;
    return a;
  }
  // a & ~b
  friend Bits128 andnot(Bits128 a, const Bits128& b) {
    a.w0 &= ~b.w0;
    a.w1 &= ~b.w1;
    return a;
  }
  Bits128& operator&=(const Bits128& b) {
    w0 &= b.w0;
    w1 &= b.w1;
    return *this;
  }
  Bits128& operator|=(const Bits128& b) {
    w0 |= b.w0;
    w1 |= b.w1;
    return *this;
  }

  bool operator==(const Bits128&) const = default;

  template <typename F>
  void for_each(F f) const {
    std::uint64_t a = w0;
    while (a) {
      f(std::countr_zero(a));
      a &= a - 1;
    }
    a = w1;
    while (a) {
      f(64 + std::countr_zero(a));
      a &= a - 1;
    }
  }
};

}  // namespace mnt
