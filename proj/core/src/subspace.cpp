#include "braceforge/subspace.hpp"

#include <string>

namespace braceforge {

namespace {

std::vector<std::size_t> pivot_columns(const FpMatrix& rrefBasis) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < rrefBasis.rows; ++r) {
    std::size_t c = 0;
    while (c < rrefBasis.cols && rrefBasis.at(r, c) == 0) ++c;
    piv.push_back(c);  // == cols never happens: zero rows are dropped first
  }
  return piv;
}

}  // namespace

Subspace::Subspace(std::uint16_t p, std::size_t n) : basis_(p, 0, n) {}

Subspace Subspace::from_rows(const FpMatrix& rows) {
  FpMatrix r = rref(rows);
  std::size_t nonzero = 0;
  while (nonzero < r.rows && !r.row(nonzero).is_zero()) ++nonzero;
  FpMatrix basis(r.p, nonzero, r.cols);
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < r.cols; ++j) basis.at(i, j) = r.at(i, j);
  Subspace s(r.p, r.cols);
  s.basis_ = std::move(basis);
  s.pivots_ = pivot_columns(s.basis_);
  return s;
}

Subspace Subspace::from_vectors(std::uint16_t p, std::size_t n,
                                const std::vector<FpVector>& vecs) {
  FpMatrix rows(p, vecs.size(), n);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].size() != n) throw DimensionMismatch("vector length != ambient");
    for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = vecs[i][j];
  }
  return from_rows(rows);
}

Subspace Subspace::full(std::uint16_t p, std::size_t n) {
  return from_rows(FpMatrix::identity(p, n));
}

bool Subspace::contains(const FpVector& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("ambient mismatch");
  FpVector w = v;
  const std::uint16_t p = basis_.p;
  for (std::size_t r = 0; r < basis_.rows; ++r) {
    std::uint32_t f = w[pivots_[r]];
    if (!f) continue;
    std::uint32_t neg = p - static_cast<std::uint16_t>(f);
    for (std::size_t j = 0; j < w.size(); ++j)
      w[j] = static_cast<std::uint16_t>((w[j] + neg * basis_.at(r, j)) % p);
  }
  return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.basis_.rows; ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim() || p() != other.p())
    throw DimensionMismatch("subspace ambient mismatch");
  FpMatrix stacked(p(), dim() + other.dim(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      stacked.at(r, j) = basis_.at(r, j);
  for (std::size_t r = 0; r < other.dim(); ++r)
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      stacked.at(dim() + r, j) = other.basis_.at(r, j);
  return from_rows(stacked);
}

std::vector<FpVector> Subspace::elements() const {
  double count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= p();
  if (count > 1e6)
    throw TooLarge("subspace has more than 10^6 elements");

  std::vector<FpVector> out;
  out.reserve(static_cast<std::size_t>(count));
  FpVector acc(p(), ambient_dim());
  std::vector<std::uint16_t> coeff(dim(), 0);
  // Odometer over coefficients; acc is updated incrementally by basis rows.
  out.push_back(acc);
  const std::uint16_t pp = p();
  while (true) {
    std::size_t d = dim();
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (coeff[i] + 1 < pp) {
        ++coeff[i];
        for (std::size_t j = 0; j < ambient_dim(); ++j)
          acc[j] = static_cast<std::uint16_t>((acc[j] + basis_.at(i, j)) % pp);
        break;
      }
      coeff[i] = 0;
      // digit rollover p-1 -> 0 adds one more row (net -(p-1) = +1 mod p)
      for (std::size_t j = 0; j < ambient_dim(); ++j)
        acc[j] = static_cast<std::uint16_t>((acc[j] + basis_.at(i, j)) % pp);
      if (i == 0) return out;
    }
    if (d == 0) return out;
    out.push_back(acc);
  }
}

}  // namespace braceforge
