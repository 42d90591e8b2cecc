#pragma once

#include <cstdint>
#include <random>

namespace braceforge {

// Seeded 64-bit PRNG for sampled verification.  The range reduction is a
// plain modulo so that a given seed produces the same stream on every
// platform (std::uniform_int_distribution is implementation-defined).  The
// modulo bias is < n/2^64, irrelevant at desk scale (n <= p^4 ~ 3*10^4).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(eng_() % n);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace braceforge
