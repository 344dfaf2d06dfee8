#include "linefree/field.hpp"

#include <cmath>
#include <string>

namespace linefree {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "not prime";
    case ErrorKind::ModulusTooSmall: return "p must be >= 3";
    case ErrorKind::BelowTwo: return "value below 2";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::DimensionMismatch: return "dimension or modulus mismatch";
    case ErrorKind::ZeroInverse: return "zero has no inverse";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::Format: return "format error";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // the double estimate is off by at most a couple of units near 2^64
  while (r > 0 && (r > UINT32_MAX || r * r > n)) --r;
  while (r + 1 <= UINT32_MAX && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus PrimeModulus::make(std::uint64_t n) {
  if (n < 2)
    throw Error(ErrorKind::BelowTwo, std::to_string(n) + " is below 2");
  if (n == 2)
    throw Error(ErrorKind::ModulusTooSmall, "p must be >= 3, got 2");
  if (!is_prime(n))
    throw Error(ErrorKind::NotPrime, std::to_string(n) + " is not prime");
  if (n >= (1u << 16))
    throw Error(ErrorKind::OutOfRange,
                std::to_string(n) + " exceeds the supported modulus range (< 65536)");
  return PrimeModulus(static_cast<Elem>(n));
}

Elem PrimeModulus::inv(Elem a) const {
  LINEFREE_RANGE_CHECK(a < p_);
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "inverse of 0 requested");
  std::int64_t old_r = a, r = p_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return reduce(old_s);
}

}  // namespace linefree
