#pragma once

// Arithmetic in the prime field F_p, with elements stored as the integers
// 0..p-1. Intended for desk-scale moduli (p < 2^16), so every product of two
// elements fits comfortably in 64 bits.

#include <cstdint>

#include "linefree/error.hpp"

#if !defined(NDEBUG) || defined(LINEFREE_CHECKED)
#include <cassert>
#define LINEFREE_RANGE_CHECK(cond) assert(cond)
#else
#define LINEFREE_RANGE_CHECK(cond) ((void)0)
#endif

namespace linefree {

using Elem = std::uint32_t;

/// floor(sqrt(n)), exact for every 64-bit n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

class PrimeModulus {
 public:
  /// Accepts primes >= 3 only. Throws Error with kind BelowTwo, ModulusTooSmall
  /// or NotPrime otherwise.
  static PrimeModulus make(std::uint64_t n);

  Elem p() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    LINEFREE_RANGE_CHECK(a < p_ && b < p_);
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Elem sub(Elem a, Elem b) const noexcept {
    LINEFREE_RANGE_CHECK(a < p_ && b < p_);
    return a >= b ? a - b : a + p_ - b;
  }

  Elem mul(Elem a, Elem b) const noexcept {
    LINEFREE_RANGE_CHECK(a < p_ && b < p_);
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }

  Elem neg(Elem a) const noexcept {
    LINEFREE_RANGE_CHECK(a < p_);
    return a == 0 ? 0 : p_ - a;
  }

  /// Multiplicative inverse via extended Euclid. Throws ZeroInverse on a == 0.
  Elem inv(Elem a) const;

  /// Reduces an arbitrary signed integer into [0, p).
  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  explicit PrimeModulus(Elem p) : p_(p) {}
  Elem p_;
};

inline PrimeModulus make_modulus(std::uint64_t n) { return PrimeModulus::make(n); }

}  // namespace linefree
