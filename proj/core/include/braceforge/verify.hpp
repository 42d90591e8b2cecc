#pragma once

#include <cstdint>

#include "braceforge/brace.hpp"
#include "braceforge/report.hpp"

namespace braceforge {

enum class VerifyMode { Full, Sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Full;
  std::uint64_t samples = 100000;  // sampled mode only
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t time_budget_ms = 0;  // 0 = unlimited; on expiry the report is marked partial
};

// Checks the brace laws: additive structure (structural), circle identity and
// inverses, circle associativity, the compatibility law a o (b+c) + a =
// (a o b) + (a o c), and both star-product laws.  Full mode scans every
// (a,b,c) triple via dense operation tables; sampled mode draws seeded
// uniform triples.  Law failures are report entries with a witness triple,
// never exceptions.
CheckReport verify_brace_axioms(const BraceTable& A, const VerifyOptions& opts = {});

// a*(alpha b) = alpha (a*b) for all elements a, basis vectors b and scalars
// alpha.  Holds by construction for matrix-backed tables; the point is to
// validate externally loaded data.
CheckReport verify_fp_linearity(const BraceTable& A);

// lambda(a o b) = lambda(a) lambda(b) as matrices, over all pairs (full) or
// seeded pairs (sampled).
CheckReport verify_lambda_homomorphism(const BraceTable& A, const VerifyOptions& opts = {});

}  // namespace braceforge
