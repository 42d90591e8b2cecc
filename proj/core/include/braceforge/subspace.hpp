#pragma once

#include <cstdint>
#include <vector>

#include "braceforge/matrix.hpp"

namespace braceforge {

// F_p-subspace of F_p^n in canonical form: the basis is the RREF of any
// spanning set with zero rows dropped.  Two subspaces are equal iff their
// canonical bases are identical, which makes equality a plain comparison.
class Subspace {
 public:
  Subspace(std::uint16_t p, std::size_t n);  // zero subspace

  static Subspace from_rows(const FpMatrix& rows);
  static Subspace from_vectors(std::uint16_t p, std::size_t n,
                               const std::vector<FpVector>& vecs);
  static Subspace full(std::uint16_t p, std::size_t n);

  std::uint16_t p() const { return basis_.p; }
  std::size_t ambient_dim() const { return basis_.cols; }
  std::size_t dim() const { return basis_.rows; }
  bool is_zero() const { return dim() == 0; }

  // dim x n matrix in RREF, no zero rows.
  const FpMatrix& basis() const { return basis_; }

  bool contains(const FpVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;

  // All p^dim member vectors; guarded against combinatorial blow-up.
  std::vector<FpVector> elements() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace braceforge
