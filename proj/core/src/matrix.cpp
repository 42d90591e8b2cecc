#include "braceforge/matrix.hpp"

#include <string>

namespace braceforge {

namespace {

std::uint16_t reduce(std::int64_t v, std::uint16_t p) {
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint16_t>(r);
}

void require_same_p(std::uint16_t a, std::uint16_t b) {
  if (a != b)
    throw DimensionMismatch("mixed moduli " + std::to_string(a) + " and " +
                            std::to_string(b));
}

}  // namespace

FpVector::FpVector(std::uint16_t p_, std::initializer_list<int> init) : p(p_) {
  c.reserve(init.size());
  for (int v : init) c.push_back(reduce(v, p_));
}

bool FpVector::is_zero() const {
  for (auto v : c)
    if (v) return false;
  return true;
}

FpVector vec_add(const FpVector& a, const FpVector& b) {
  require_same_p(a.p, b.p);
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  FpVector out(a.p, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.c[i] = static_cast<std::uint16_t>((a.c[i] + b.c[i]) % a.p);
  return out;
}

FpVector vec_sub(const FpVector& a, const FpVector& b) {
  require_same_p(a.p, b.p);
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  FpVector out(a.p, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.c[i] = static_cast<std::uint16_t>((a.c[i] + a.p - b.c[i]) % a.p);
  return out;
}

FpVector vec_neg(const FpVector& a) {
  FpVector out(a.p, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.c[i] = static_cast<std::uint16_t>((a.p - a.c[i]) % a.p);
  return out;
}

FpVector vec_scale(std::uint32_t s, const FpVector& a) {
  FpVector out(a.p, a.size());
  s %= a.p;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.c[i] = static_cast<std::uint16_t>((s * a.c[i]) % a.p);
  return out;
}

FpMatrix FpMatrix::identity(std::uint16_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint16_t p,
                             std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  FpMatrix m(p, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged rows");
    std::size_t j = 0;
    for (int v : row) m.at(i, j++) = reduce(v, p);
    ++i;
  }
  return m;
}

FpVector FpMatrix::col(std::size_t c) const {
  FpVector v(p, rows);
  for (std::size_t r = 0; r < rows; ++r) v.c[r] = at(r, c);
  return v;
}

FpVector FpMatrix::row(std::size_t r) const {
  FpVector v(p, cols);
  for (std::size_t c = 0; c < cols; ++c) v.c[c] = at(r, c);
  return v;
}

bool FpMatrix::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

FpMatrix mat_mul(const FpMatrix& A, const FpMatrix& B) {
  require_same_p(A.p, B.p);
  if (A.cols != B.rows) throw DimensionMismatch("inner dimensions disagree");
  FpMatrix out(A.p, A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t k = 0; k < A.cols; ++k) {
      std::uint32_t aik = A.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < B.cols; ++j) {
        out.at(i, j) = static_cast<std::uint16_t>(
            (out.at(i, j) + aik * B.at(k, j)) % A.p);
      }
    }
  }
  return out;
}

FpMatrix mat_add(const FpMatrix& A, const FpMatrix& B) {
  require_same_p(A.p, B.p);
  if (A.rows != B.rows || A.cols != B.cols)
    throw DimensionMismatch("shape mismatch");
  FpMatrix out(A.p, A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i)
    out.a[i] = static_cast<std::uint16_t>((A.a[i] + B.a[i]) % A.p);
  return out;
}

FpMatrix mat_pow(const FpMatrix& A, std::uint64_t e) {
  if (A.rows != A.cols) throw DimensionMismatch("power of non-square matrix");
  FpMatrix result = FpMatrix::identity(A.p, A.rows);
  FpMatrix base = A;
  while (e) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return result;
}

FpVector mat_vec(const FpMatrix& A, const FpVector& v) {
  require_same_p(A.p, v.p);
  if (A.cols != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  FpVector out(A.p, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < A.cols; ++j) acc += A.at(i, j) * v.c[j];
    out.c[i] = static_cast<std::uint16_t>(acc % A.p);
  }
  return out;
}

namespace {

// Gauss-Jordan over F_p on [A | rhs]; returns rank.  rhs may be empty.
std::size_t eliminate(FpMatrix& m, std::size_t lead_cols) {
  const std::uint16_t p = m.p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < lead_cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(rank, j));
    std::uint32_t inv = inv_mod(m.at(rank, c), p);
    for (std::size_t j = 0; j < m.cols; ++j)
      m.at(rank, j) = static_cast<std::uint16_t>((inv * m.at(rank, j)) % p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      std::uint32_t f = m.at(r, c);
      if (!f) continue;
      std::uint32_t neg = p - f;  // row_r -= f * row_rank, as row_r += (p-f) * row_rank
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(r, j) = static_cast<std::uint16_t>(
            (m.at(r, j) + neg * m.at(rank, j)) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FpMatrix mat_inv(const FpMatrix& A) {
  if (A.rows != A.cols) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = A.rows;
  FpMatrix aug(A.p, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, n + r) = 1;
  }
  if (eliminate(aug, n) != n) throw Singular("matrix not invertible mod p");
  FpMatrix out(A.p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

bool mat_invertible(const FpMatrix& A) {
  if (A.rows != A.cols) return false;
  FpMatrix copy = A;
  return eliminate(copy, A.cols) == A.rows;
}

FpMatrix rref(const FpMatrix& A) {
  FpMatrix m = A;
  eliminate(m, A.cols);
  return m;
}

}  // namespace braceforge
