#include "braceforge/prelie.hpp"

namespace braceforge {

namespace {

enum : std::size_t { P = 0, Q = 1, R = 2, S = 3 };

}  // namespace

PreLieAlgebra::PreLieAlgebra(Prime p, std::uint16_t j, std::uint16_t k, std::uint16_t y)
    : p_(p.value()), j_(j % p_), k_(k % p_), y_(y % p_) {
  if (y_ == 0) throw InvalidParams("pre-Lie parameter y must be nonzero");
  for (auto& row : table_)
    for (auto& cell : row) cell = FpVector(p_, kDim);
  const int jj = j_, kk = k_, yy = y_;
  table_[R][R] = FpVector(p_, {jj, 0, 0, kk});   // RR = jP + kS
  table_[Q][Q] = FpVector(p_, {0, 0, 0, -yy});   // QQ = -yS
  table_[R][P] = FpVector(p_, {0, 0, 0, yy});    // RP = yS
  table_[S][Q] = FpVector(p_, {-1, 0, 0, 0});    // SQ = -P
  table_[P][R] = FpVector(p_, {0, 0, 0, yy});    // PR = yS
  table_[S][R] = FpVector(p_, {0, -1, 0, 0});    // SR = -Q
}

const char* PreLieAlgebra::basis_name(std::size_t idx) const {
  static const char* names[kDim] = {"P", "Q", "R", "S"};
  return names[idx];
}

FpVector PreLieAlgebra::basis(std::size_t idx) const {
  FpVector v(p_, kDim);
  v[idx] = 1;
  return v;
}

FpVector PreLieAlgebra::product(const FpVector& a, const FpVector& b) const {
  if (a.size() != kDim || b.size() != kDim)
    throw DimensionMismatch("pre-Lie vectors must have dimension 4");
  FpVector out(p_, kDim);
  for (std::size_t r = 0; r < kDim; ++r) {
    if (!a[r]) continue;
    for (std::size_t s = 0; s < kDim; ++s) {
      if (!b[s]) continue;
      const std::uint32_t coeff = std::uint32_t(a[r]) * b[s] % p_;
      if (!coeff) continue;
      const FpVector& cell = table_[r][s];
      for (std::size_t t = 0; t < kDim; ++t)
        out[t] = static_cast<std::uint16_t>((out[t] + coeff * cell[t]) % p_);
    }
  }
  return out;
}

FpVector plproduct(const PreLieAlgebra& V, const FpVector& a, const FpVector& b) {
  return V.product(a, b);
}

CheckReport verify_prelie_identity(const PreLieAlgebra& V) {
  CheckReport rep;
  for (std::size_t a = 0; a < PreLieAlgebra::kDim; ++a)
    for (std::size_t b = 0; b < PreLieAlgebra::kDim; ++b)
      for (std::size_t c = 0; c < PreLieAlgebra::kDim; ++c) {
        const FpVector A = V.basis(a), B = V.basis(b), C = V.basis(c);
        const FpVector lhs = vec_sub(V.product(V.product(A, B), C),
                                     V.product(A, V.product(B, C)));
        const FpVector rhs = vec_sub(V.product(V.product(B, A), C),
                                     V.product(B, V.product(A, C)));
        if (lhs != rhs) {
          rep.add_fail("pre-Lie identity (AB)C - A(BC) = (BA)C - B(AC)",
                       std::string("(A,B,C)=(") + V.basis_name(a) + "," +
                           V.basis_name(b) + "," + V.basis_name(c) + ")");
          rep.items_checked = 64;
          return rep;
        }
      }
  rep.add_pass("pre-Lie identity (AB)C - A(BC) = (BA)C - B(AC)");
  rep.items_checked = 64;
  return rep;
}

namespace {

// Next chain term from basis-level products; sound because the product is
// additive in both arguments.
Subspace chain_step(const PreLieAlgebra& V, const Subspace& left, const Subspace& right) {
  std::vector<FpVector> products;
  for (std::size_t r = 0; r < left.dim(); ++r) {
    FpVector a(V.p(), PreLieAlgebra::kDim);
    for (std::size_t c = 0; c < PreLieAlgebra::kDim; ++c) a[c] = left.basis().at(r, c);
    for (std::size_t s = 0; s < right.dim(); ++s) {
      FpVector b(V.p(), PreLieAlgebra::kDim);
      for (std::size_t c = 0; c < PreLieAlgebra::kDim; ++c) b[c] = right.basis().at(s, c);
      products.push_back(V.product(a, b));
    }
  }
  return Subspace::from_vectors(V.p(), PreLieAlgebra::kDim, products);
}

std::vector<std::size_t> run_chain(const PreLieAlgebra& V, bool left_fixed) {
  const Subspace full = Subspace::full(V.p(), PreLieAlgebra::kDim);
  std::vector<std::size_t> dims{full.dim()};
  Subspace cur = full;
  while (true) {
    const Subspace next =
        left_fixed ? chain_step(V, full, cur) : chain_step(V, cur, full);
    dims.push_back(next.dim());
    if (next.is_zero() || next == cur) break;
    cur = next;
  }
  return dims;
}

}  // namespace

PreLieNilpotency prelie_nilpotency(const PreLieAlgebra& V) {
  PreLieNilpotency out;
  out.left_dims = run_chain(V, true);
  out.right_dims = run_chain(V, false);
  out.left = out.left_dims.back() == 0;
  out.right = out.right_dims.back() == 0;
  return out;
}

}  // namespace braceforge
