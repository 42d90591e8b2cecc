#pragma once

#include <cstdint>

#include "braceforge/errors.hpp"

namespace braceforge {

// A verified prime modulus.  Construction checks primality by trial
// division (moduli are at most 16-bit).  The family construction requires
// p > 3 on top of this; that stricter check lives in FamilyParams.
class Prime {
 public:
  explicit Prime(std::uint32_t p);

  std::uint16_t value() const { return p_; }

  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }

 private:
  std::uint16_t p_;
};

// Scalar in F_p, stored reduced.
struct FpScalar {
  std::uint16_t value = 0;
  std::uint16_t p = 2;
};

// Inverse of a nonzero residue via extended Euclid.  Throws ZeroInverse on 0.
std::uint16_t inv_mod(std::uint32_t a, std::uint32_t p);

FpScalar scalar_inv(FpScalar a);

inline FpScalar make_scalar(std::int64_t v, Prime p) {
  std::int64_t m = p.value();
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint16_t>(r), p.value()};
}

}  // namespace braceforge
