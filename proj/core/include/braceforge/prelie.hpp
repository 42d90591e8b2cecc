#pragma once

#include <cstdint>
#include <vector>

#include "braceforge/matrix.hpp"
#include "braceforge/report.hpp"
#include "braceforge/subspace.hpp"

namespace braceforge {

// Four-dimensional pre-Lie algebra over F_p on basis (P, Q, R, S) with
// parameters (j, k, y), y != 0.  Nonzero basis products:
//   RR = jP + kS,  QQ = -yS,  RP = yS,  SQ = -P,  PR = yS,  SR = -Q;
// every other basis product is zero, and the product extends bilinearly.
// The parameter letter j is deliberately distinct from the brace family's i:
// no identification between the two is assumed.
class PreLieAlgebra {
 public:
  PreLieAlgebra(Prime p, std::uint16_t j, std::uint16_t k, std::uint16_t y);

  std::uint16_t p() const { return p_; }
  std::uint16_t j() const { return j_; }
  std::uint16_t k() const { return k_; }
  std::uint16_t y() const { return y_; }

  static constexpr std::size_t kDim = 4;
  const char* basis_name(std::size_t idx) const;  // "P","Q","R","S"
  FpVector basis(std::size_t idx) const;

  // Bilinear extension of the basis products.
  FpVector product(const FpVector& a, const FpVector& b) const;

 private:
  std::uint16_t p_, j_, k_, y_;
  FpVector table_[kDim][kDim];
};

FpVector plproduct(const PreLieAlgebra& V, const FpVector& a, const FpVector& b);

// (AB)C - A(BC) = (BA)C - B(AC) on all 64 ordered basis triples; bilinearity
// extends the identity to the whole space.
CheckReport verify_prelie_identity(const PreLieAlgebra& V);

struct PreLieNilpotency {
  bool left = false;
  bool right = false;
  std::vector<std::size_t> left_dims, right_dims;
};

// Chains V^{i+1} = span{a b : a in V, b in V^i} (left) and
// V^{(i+1)} = span{a b : a in V^{(i)}, b in V} (right).  Unlike the brace
// star, this product is additive in BOTH arguments, so basis-level spans are
// exact; the termination rule matches the brace chains (zero term, or one
// repeated term with the stabilized flag implied by the equal tail).
PreLieNilpotency prelie_nilpotency(const PreLieAlgebra& V);

}  // namespace braceforge
