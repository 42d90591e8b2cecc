#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/report.hpp"
#include "braceforge/verify.hpp"

namespace braceforge {

// The involutive set-theoretic Yang-Baxter solution attached to a left
// brace: r(x, y) = (u, v) with u = lambda_x(y) and v = lambda_u^{-1}(x).
// Non-degeneracy in the second argument is structural (every lambda_x is an
// invertible matrix).
class SolutionR {
 public:
  explicit SolutionR(const BraceTable& A);

  std::pair<ElementIndex, ElementIndex> r(ElementIndex x, ElementIndex y) const;
  const BraceTable& brace() const { return A_; }

 private:
  const BraceTable& A_;
  // Precomputed inverse lambda matrices (skipped for very large tables, in
  // which case inverses are computed per call).
  std::vector<std::uint16_t> inv_;
  ElementIndex lambda_inv_at(ElementIndex a, ElementIndex b) const;
};

std::pair<ElementIndex, ElementIndex> r(const BraceTable& A, ElementIndex x,
                                        ElementIndex y);

// r(r(x,y)) = (x,y) over every pair, plus the structural non-degeneracy
// entry.
CheckReport verify_involutive(const BraceTable& A);

// Braid relation r12 r23 r12 = r23 r12 r23 on A^3, full (dense r-tables,
// N <= 4096) or seeded samples.
CheckReport verify_braid(const BraceTable& A, const VerifyOptions& opts = {});

}  // namespace braceforge
