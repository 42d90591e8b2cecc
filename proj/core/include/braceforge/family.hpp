#pragma once

#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/report.hpp"

namespace braceforge {

// The four generator matrices of the multiplicative group XV acting on
// B = F_p 1 + F_p R' + F_p Q' + F_p P' + F_p S', written in the ordered
// basis e1 = 1, e2 = R', e3 = Q', e4 = P', e5 = S'.  Each matrix is affine
// over the brace coordinates: first row (1,0,0,0,0), first column below the
// corner is the cocycle value f(g), and the lower-right 4x4 block is the
// lambda action of g.
struct GeneratorMatrices {
  std::uint16_t p = 5;
  FpMatrix M_P, M_Q, M_R, M_S;
};

// Exponents of the unique normal form R^alpha . Q^beta . P^gamma . S^xi.
struct NormalForm {
  std::uint16_t alpha = 0, beta = 0, gamma = 0, xi = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Validates and reduces raw integers into FamilyParams.  Throws
// InvalidParams unless p is a prime > 3 and y != 0 mod p.
FamilyParams make_family_params(std::uint32_t p, std::int64_t y, std::int64_t i,
                                std::int64_t k);
void validate_params(const FamilyParams& params);

GeneratorMatrices generator_matrices(const FamilyParams& params);

// Checks the printed matrix identities:
//   M_Q M_S = M_S M_Q M_P      M_Q M_R = M_R M_Q      M_R M_S = M_S M_R M_Q
//   M_P M_S = M_S M_P          M_P M_Q = M_Q M_P      M_P M_R = M_R M_P
// and M_g^p = Id for each generator.  One report entry per identity.
CheckReport verify_generator_relations(const GeneratorMatrices& mats, Prime p);

// All p^4 group elements as 5x5 matrices, indexed by normal form:
// result[((alpha*p + beta)*p + gamma)*p + xi] = M_R^alpha M_Q^beta M_P^gamma M_S^xi.
// Throws RelationFailure if two normal forms give the same matrix (the
// representation would not be faithful).
std::vector<FpMatrix> enumerate_group(const GeneratorMatrices& mats, Prime p);

// f(g) = lambda_g(1) - 1: first column of M_g minus e1, as coordinates
// (c_R, c_Q, c_P, c_S).
FpVector cocycle_f(const GeneratorMatrices& mats, const NormalForm& nf);

// Bijectivity of f over all p^4 elements plus the 1-cocycle identity
// f(g.h) = f(g) + lambda_g(f(h)) over all p^8 pairs.
CheckReport verify_cocycle(const GeneratorMatrices& mats, Prime p);

// Assembles the brace by transporting the group through f, so the brace has
// coordinate addition and the lambda-table entry at index f(g) equal to the
// lower-right 4x4 block of M_g.
BraceTable build_brace(const FamilyParams& params);

// All 16 generator star products against the Multiplicative Table evaluated
// symbolically at params:
//   P*P=0      P*Q=0      P*R=yS          P*S=0
//   Q*P=0      Q*Q=-yS    Q*R=2^{-1}yS    Q*S=0
//   R*P=yS     R*Q=2^{-1}yS  R*R=iP+kS    R*S=0
//   S*P=0      S*Q=-P     S*R=-Q+P-2^{-1}yS  S*S=0
CheckReport verify_multiplicative_table(const BraceTable& A,
                                        const FamilyParams& params);

// Unique exponents with R^alpha . Q^beta . P^gamma . S^xi = a, computed by
// peeling coordinates left to right.  Requires a family-built table.
NormalForm normal_form(const BraceTable& A, ElementIndex a);

// True iff (S*Q) * ((-1/y) R) = S, the witness that the brace is not right
// nilpotent.
bool witness_not_right_nilpotent(const BraceTable& A, const FamilyParams& params);

// Re-checks the group XV presentation inside the built brace: each relation
// w1 = w2 as elements, and star(w1, g) = star(w2, g) for every generator g
// (implied by element equality; kept as an implementation consistency check).
CheckReport verify_presentation_constraints(const BraceTable& A);

// Convenience indices of the four generators in a family table.
ElementIndex family_R(const BraceTable& A);
ElementIndex family_Q(const BraceTable& A);
ElementIndex family_P(const BraceTable& A);
ElementIndex family_S(const BraceTable& A);

}  // namespace braceforge
