#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/matrix.hpp"

namespace braceforge {

// Parameters (p, y, i, k) selecting one member of the brace family with
// multiplicative group XV.  Requires p prime > 3 and y != 0.
struct FamilyParams {
  std::uint16_t p = 5;
  std::uint16_t y = 1;
  std::uint16_t i = 0;
  std::uint16_t k = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

using ElementIndex = std::uint32_t;

// A finite F_p-brace on the additive group F_p^n, represented by its full
// lambda-table: one invertible n x n matrix per element.  Everything else is
// derived from it:
//   lambda_a(b) = a*b + b = a.b - a      (. is the circle product)
//   a*b  = lambda_a(b) - b
//   a.b  = a + lambda_a(b)
// Elements are indexed by base-p digits of their coordinate vector, most
// significant digit first: (c_0,...,c_{n-1}) -> sum c_j p^{n-1-j}.  For the
// family braces the coordinate order is (R, Q, P, S), matching the normal
// form R^a . Q^b . P^g . S^x, so normal-form exponents read off directly.
class BraceTable {
 public:
  // `lambda` holds p^n matrices indexed by element.  Structural invariants
  // (lambda(0) = Id, invertibility of every matrix) are verified here; the
  // homomorphism law lambda(a.b) = lambda(a) lambda(b) is checked by
  // verify_lambda_homomorphism and by the table loader.
  BraceTable(Prime p, std::size_t n, std::vector<std::string> basis_names,
             std::vector<FpMatrix> lambda,
             std::optional<FamilyParams> meta = std::nullopt);

  std::uint16_t p() const { return p_; }
  std::size_t dim() const { return n_; }
  std::uint32_t size() const { return size_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::optional<FamilyParams>& meta() const { return meta_; }

  // --- element codec ---
  ElementIndex index_of(const FpVector& v) const;
  FpVector vector_of(ElementIndex a) const;
  std::uint8_t digit(ElementIndex a, std::size_t j) const {
    return digits_[static_cast<std::size_t>(a) * n_ + j];
  }
  // Index of the basis vector e_j (1 in coordinate j).
  ElementIndex basis_element(std::size_t j) const;

  // --- brace operations (indices in, indices out) ---
  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex sub(ElementIndex a, ElementIndex b) const;
  ElementIndex neg(ElementIndex a) const;
  ElementIndex scale(std::uint32_t s, ElementIndex a) const;
  ElementIndex star(ElementIndex a, ElementIndex b) const;
  ElementIndex circle(ElementIndex a, ElementIndex b) const;
  ElementIndex circle_inv(ElementIndex a) const;
  ElementIndex circle_pow(ElementIndex a, std::int64_t e) const;
  ElementIndex lambda_apply(ElementIndex a, ElementIndex b) const;
  ElementIndex lambda_inv_apply(ElementIndex a, ElementIndex b) const;

  // lambda_a^{-1}(b) via the quartic expansion
  //   b - a*b + a*(a*b) - a*(a*(a*b)),
  // valid only when A^5 = 0.  The caller states that precondition via the
  // flag; chains::lambda_inv_quartic_checked computes it from the left
  // chain.  Throws PreconditionViolated if the flag is false.
  ElementIndex lambda_inv_quartic(ElementIndex a, ElementIndex b,
                                  bool a5_is_zero) const;

  FpMatrix lambda_matrix(ElementIndex a) const;
  const std::uint16_t* lambda_raw(ElementIndex a) const {
    return lambda_.data() + static_cast<std::size_t>(a) * n_ * n_;
  }

  void check_index(ElementIndex a) const;

 private:
  std::uint16_t p_;
  std::size_t n_;
  std::uint32_t size_;
  std::vector<std::string> names_;
  std::vector<std::uint16_t> lambda_;  // size_ * n_ * n_, row-major blocks
  std::vector<std::uint8_t> digits_;   // size_ * n_ digit cache
  std::optional<FamilyParams> meta_;
};

// The trivial brace on F_p^n: lambda == Id, i.e. a.b = a+b, a*b = 0.
BraceTable trivial_brace(Prime p, std::size_t n);

// A nontrivial commutative comparison fixture: the radical ring
// x F_p[x]/(x^{n+1}) with a*b = ring product, coordinates (x, ..., x^n).
// Its circle group is abelian, so every nilpotency flag is true.
BraceTable ring_brace(Prime p, std::size_t n);

}  // namespace braceforge
