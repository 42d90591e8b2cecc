#include "braceforge/fp.hpp"

#include <string>

namespace braceforge {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Prime::Prime(std::uint32_t p) {
  if (p > 0xFFFF || !is_prime(p))
    throw InvalidParams("p = " + std::to_string(p) + " is not a prime in [2, 65535]");
  p_ = static_cast<std::uint16_t>(p);
}

std::uint16_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw ZeroInverse("0 has no inverse mod " + std::to_string(p));
  // Extended Euclid on (a, p); p prime guarantees gcd 1.
  std::int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint16_t>(inv);
}

FpScalar scalar_inv(FpScalar a) { return {inv_mod(a.value, a.p), a.p}; }

}  // namespace braceforge
