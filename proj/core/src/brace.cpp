#include "braceforge/brace.hpp"

#include <string>

namespace braceforge {

namespace {

constexpr std::uint32_t kMaxElements = 1u << 22;

std::uint32_t checked_pow(std::uint32_t p, std::size_t n) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    s *= p;
    if (s > kMaxElements)
      throw TooLarge("p^n exceeds the table-size guard (2^22 elements)");
  }
  return static_cast<std::uint32_t>(s);
}

}  // namespace

BraceTable::BraceTable(Prime p, std::size_t n, std::vector<std::string> basis_names,
                       std::vector<FpMatrix> lambda, std::optional<FamilyParams> meta)
    : p_(p.value()), n_(n), names_(std::move(basis_names)), meta_(meta) {
  if (p_ > 251) throw TooLarge("brace tables require p <= 251");
  if (n_ == 0) throw InvalidParams("brace dimension must be positive");
  size_ = checked_pow(p_, n_);
  if (lambda.size() != size_)
    throw DimensionMismatch("lambda table has " + std::to_string(lambda.size()) +
                            " entries, expected " + std::to_string(size_));
  if (names_.size() != n_)
    throw DimensionMismatch("basis name count != dimension");

  lambda_.resize(static_cast<std::size_t>(size_) * n_ * n_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    const FpMatrix& m = lambda[a];
    if (m.rows != n_ || m.cols != n_ || m.p != p_)
      throw DimensionMismatch("lambda(" + std::to_string(a) + ") has wrong shape");
    if (!mat_invertible(m))
      throw Singular("lambda(" + std::to_string(a) + ") is not invertible");
    std::copy(m.a.begin(), m.a.end(),
              lambda_.begin() + static_cast<std::size_t>(a) * n_ * n_);
  }
  if (!lambda[0].is_identity())
    throw InvalidParams("lambda(0) must be the identity matrix");

  digits_.resize(static_cast<std::size_t>(size_) * n_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    std::uint32_t rest = a;
    for (std::size_t j = n_; j-- > 0;) {
      digits_[static_cast<std::size_t>(a) * n_ + j] =
          static_cast<std::uint8_t>(rest % p_);
      rest /= p_;
    }
  }
}

void BraceTable::check_index(ElementIndex a) const {
  if (a >= size_)
    throw IndexOutOfRange("element index " + std::to_string(a) + " >= " +
                          std::to_string(size_));
}

ElementIndex BraceTable::index_of(const FpVector& v) const {
  if (v.size() != n_ || v.p != p_)
    throw DimensionMismatch("coordinate vector does not match brace shape");
  std::uint32_t idx = 0;
  for (std::size_t j = 0; j < n_; ++j) idx = idx * p_ + v[j] % p_;
  return idx;
}

FpVector BraceTable::vector_of(ElementIndex a) const {
  check_index(a);
  FpVector v(p_, n_);
  for (std::size_t j = 0; j < n_; ++j) v[j] = digit(a, j);
  return v;
}

ElementIndex BraceTable::basis_element(std::size_t j) const {
  if (j >= n_) throw IndexOutOfRange("basis index out of range");
  std::uint32_t idx = 1;
  for (std::size_t t = j + 1; t < n_; ++t) idx *= p_;
  return idx;
}

ElementIndex BraceTable::add(ElementIndex a, ElementIndex b) const {
  check_index(a);
  check_index(b);
  const std::uint8_t* da = digits_.data() + static_cast<std::size_t>(a) * n_;
  const std::uint8_t* db = digits_.data() + static_cast<std::size_t>(b) * n_;
  std::uint32_t idx = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    std::uint32_t s = static_cast<std::uint32_t>(da[j]) + db[j];
    if (s >= p_) s -= p_;
    idx = idx * p_ + s;
  }
  return idx;
}

ElementIndex BraceTable::sub(ElementIndex a, ElementIndex b) const {
  check_index(a);
  check_index(b);
  const std::uint8_t* da = digits_.data() + static_cast<std::size_t>(a) * n_;
  const std::uint8_t* db = digits_.data() + static_cast<std::size_t>(b) * n_;
  std::uint32_t idx = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    std::uint32_t s = static_cast<std::uint32_t>(da[j]) + p_ - db[j];
    if (s >= p_) s -= p_;
    idx = idx * p_ + s;
  }
  return idx;
}

ElementIndex BraceTable::neg(ElementIndex a) const { return sub(0, a); }

ElementIndex BraceTable::scale(std::uint32_t s, ElementIndex a) const {
  check_index(a);
  s %= p_;
  const std::uint8_t* da = digits_.data() + static_cast<std::size_t>(a) * n_;
  std::uint32_t idx = 0;
  for (std::size_t j = 0; j < n_; ++j) idx = idx * p_ + (s * da[j]) % p_;
  return idx;
}

ElementIndex BraceTable::lambda_apply(ElementIndex a, ElementIndex b) const {
  check_index(a);
  check_index(b);
  const std::uint16_t* M = lambda_raw(a);
  const std::uint8_t* db = digits_.data() + static_cast<std::size_t>(b) * n_;
  std::uint32_t idx = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t c = 0; c < n_; ++c) acc += M[r * n_ + c] * db[c];
    idx = idx * p_ + acc % p_;
  }
  return idx;
}

ElementIndex BraceTable::star(ElementIndex a, ElementIndex b) const {
  return sub(lambda_apply(a, b), b);
}

ElementIndex BraceTable::circle(ElementIndex a, ElementIndex b) const {
  return add(a, lambda_apply(a, b));
}

ElementIndex BraceTable::lambda_inv_apply(ElementIndex a, ElementIndex b) const {
  check_index(a);
  // Solve lambda_a x = b by Gaussian elimination on the cached matrix.
  FpMatrix inv = mat_inv(lambda_matrix(a));
  return index_of(mat_vec(inv, vector_of(b)));
}

ElementIndex BraceTable::circle_inv(ElementIndex a) const {
  // a . x = a + lambda_a(x) = 0  =>  x = lambda_a^{-1}(-a)
  return lambda_inv_apply(a, neg(a));
}

ElementIndex BraceTable::circle_pow(ElementIndex a, std::int64_t e) const {
  check_index(a);
  ElementIndex base = a;
  if (e < 0) {
    base = circle_inv(a);
    e = -e;
  }
  ElementIndex result = 0;
  while (e) {
    if (e & 1) result = circle(result, base);
    e >>= 1;
    if (e) base = circle(base, base);
  }
  return result;
}

ElementIndex BraceTable::lambda_inv_quartic(ElementIndex a, ElementIndex b,
                                            bool a5_is_zero) const {
  if (!a5_is_zero)
    throw PreconditionViolated(
        "quartic lambda-inverse formula requires A^5 = 0");
  ElementIndex ab = star(a, b);
  ElementIndex aab = star(a, ab);
  ElementIndex aaab = star(a, aab);
  return sub(add(sub(b, ab), aab), aaab);
}

FpMatrix BraceTable::lambda_matrix(ElementIndex a) const {
  check_index(a);
  FpMatrix m(p_, n_, n_);
  std::copy(lambda_raw(a), lambda_raw(a) + n_ * n_, m.a.begin());
  return m;
}

BraceTable trivial_brace(Prime p, std::size_t n) {
  std::uint32_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= p.value();
  std::vector<FpMatrix> lambda(size, FpMatrix::identity(p.value(), n));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("e" + std::to_string(j));
  return BraceTable(p, n, std::move(names), std::move(lambda));
}

BraceTable ring_brace(Prime p, std::size_t n) {
  const std::uint16_t pp = p.value();
  std::uint32_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= pp;
  std::vector<FpMatrix> lambda;
  lambda.reserve(size);
  // Coordinate j holds the coefficient of x^{j+1}; the ring product of
  // a = sum a_i x^i and basis x^{c+1} contributes a_{r-c} to row r.
  std::vector<std::uint16_t> dig(n);
  for (std::uint32_t idx = 0; idx < size; ++idx) {
    std::uint32_t rest = idx;
    for (std::size_t j = n; j-- > 0;) {
      dig[j] = static_cast<std::uint16_t>(rest % pp);
      rest /= pp;
    }
    FpMatrix m = FpMatrix::identity(pp, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c)
        m.at(r, c) = static_cast<std::uint16_t>((m.at(r, c) + dig[r - c - 1]) % pp);
    lambda.push_back(std::move(m));
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
  return BraceTable(p, n, std::move(names), std::move(lambda));
}

}  // namespace braceforge
