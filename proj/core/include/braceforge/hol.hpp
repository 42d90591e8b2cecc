#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/rng.hpp"

namespace braceforge {

// Element of Hol(A,+) = F_p^n x| GL(n,p), acting by b -> v + M b.
struct HolElement {
  FpVector v;
  FpMatrix M;

  FpVector apply(const FpVector& b) const;
  friend bool operator==(const HolElement&, const HolElement&) = default;
};

// (v,M)(w,N) = (v + M w, M N)
HolElement hol_compose(const HolElement& g, const HolElement& h);
HolElement hol_identity(std::uint16_t p, std::size_t n);
HolElement hol_inverse(const HolElement& g);  // Singular if M is not

// The p^n pairs (a, lambda_a), indexed by element; closure under
// composition — (a,L_a)(b,L_b) = (a o b, L_{a o b}) — is verified (all
// pairs up to 4096 elements, seeded sample beyond).  ClosureFailure means a
// corrupted table.
std::vector<HolElement> embed(const BraceTable& A);

// True iff g -> g(0) = v is a bijection onto F_p^n.  The input must be a
// subgroup (identity, closure, inverses) — verified first, NotASubgroup
// otherwise.
bool is_regular(const std::vector<HolElement>& subgroup, Prime p, std::size_t n);

// Same addition, lambda'_a = gamma^-1 lambda_{gamma a} gamma.  Produces the
// brace with circle a o_g b = gamma^-1(gamma(a) o gamma(b)).
BraceTable conjugate_brace(const BraceTable& A, const FpMatrix& gamma);

// gamma(a o b) = gamma(a) o gamma(b) for all pairs; checked both directly
// (as the matrix identity gamma lambda_a = lambda_{gamma a} gamma for every
// a) and as table equality of conjugate_brace(A, gamma) with A.  The two
// characterizations must agree.
bool is_brace_automorphism(const BraceTable& A, const FpMatrix& gamma);

// Uniform random element of GL(n,p) by rejection sampling.
FpMatrix random_gl(Prime p, std::size_t n, Rng& rng);

// Streaming enumeration of GL(n,p) in a fixed (odometer) order with an
// emission budget; full traversal is astronomically large for the sizes of
// interest, so callers must opt in with an explicit budget.
class GammaStream {
 public:
  GammaStream(Prime p, std::size_t n, std::uint64_t budget);

  // Next invertible matrix, or nullopt when the budget is spent or the
  // space is exhausted.
  std::optional<FpMatrix> next();

  std::uint64_t emitted() const { return emitted_; }
  bool budget_exhausted() const { return budget_exhausted_; }

 private:
  std::uint16_t p_;
  std::size_t n_;
  std::uint64_t budget_, emitted_ = 0;
  bool budget_exhausted_ = false, done_ = false;
  std::vector<std::uint16_t> digits_;  // n*n odometer
  bool advance();
};

}  // namespace braceforge
