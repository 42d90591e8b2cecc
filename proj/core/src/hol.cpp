#include "braceforge/hol.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace braceforge {

FpVector HolElement::apply(const FpVector& b) const {
  return vec_add(v, mat_vec(M, b));
}

HolElement hol_compose(const HolElement& g, const HolElement& h) {
  return HolElement{vec_add(g.v, mat_vec(g.M, h.v)), mat_mul(g.M, h.M)};
}

HolElement hol_identity(std::uint16_t p, std::size_t n) {
  return HolElement{FpVector(p, n), FpMatrix::identity(p, n)};
}

HolElement hol_inverse(const HolElement& g) {
  const FpMatrix Minv = mat_inv(g.M);
  return HolElement{vec_neg(mat_vec(Minv, g.v)), Minv};
}

namespace {

std::string hol_key(const HolElement& g) {
  std::string key;
  key.reserve(g.v.size() * 2 + g.M.a.size() * 2);
  auto push16 = [&key](std::uint16_t x) {
    key.push_back(static_cast<char>(x & 0xff));
    key.push_back(static_cast<char>(x >> 8));
  };
  for (std::uint16_t x : g.v.c) push16(x);
  for (std::uint16_t x : g.M.a) push16(x);
  return key;
}

}  // namespace

std::vector<HolElement> embed(const BraceTable& A) {
  const std::uint32_t N = A.size();
  std::vector<HolElement> out;
  out.reserve(N);
  for (ElementIndex a = 0; a < N; ++a)
    out.push_back(HolElement{A.vector_of(a), A.lambda_matrix(a)});

  auto check_pair = [&](ElementIndex a, ElementIndex b) {
    const HolElement prod = hol_compose(out[a], out[b]);
    if (prod != out[A.circle(a, b)])
      throw ClosureFailure("embedding not closed at pair (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
  };
  if (N <= 4096) {
    for (ElementIndex a = 0; a < N; ++a)
      for (ElementIndex b = 0; b < N; ++b) check_pair(a, b);
  } else {
    Rng rng(0);
    for (std::uint32_t t = 0; t < 1000000; ++t) check_pair(rng.below(N), rng.below(N));
  }
  return out;
}

bool is_regular(const std::vector<HolElement>& subgroup, Prime p, std::size_t n) {
  if (subgroup.empty()) throw NotASubgroup("empty set");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    const HolElement& g = subgroup[i];
    if (g.v.p != p.value() || g.v.size() != n || g.M.p != p.value() || g.M.rows != n ||
        g.M.cols != n)
      throw NotASubgroup("element has wrong shape");
    if (!index.emplace(hol_key(g), i).second) throw NotASubgroup("duplicate element");
  }
  if (!index.count(hol_key(hol_identity(p.value(), n))))
    throw NotASubgroup("identity missing");
  for (const HolElement& g : subgroup) {
    if (!mat_invertible(g.M)) throw NotASubgroup("non-invertible linear part");
    if (!index.count(hol_key(hol_inverse(g)))) throw NotASubgroup("inverse missing");
    for (const HolElement& h : subgroup)
      if (!index.count(hol_key(hol_compose(g, h)))) throw NotASubgroup("not closed");
  }

  // Regularity: g -> g(0) = v hits every vector exactly once.
  std::uint64_t space = 1;
  for (std::size_t t = 0; t < n; ++t) {
    if (space > (std::uint64_t(1) << 40)) return false;  // cannot be bijective anyway
    space *= p.value();
  }
  if (subgroup.size() != space) return false;
  std::vector<char> seen(space, 0);
  for (const HolElement& g : subgroup) {
    std::uint64_t idx = 0;
    for (std::size_t t = 0; t < n; ++t) idx = idx * p.value() + g.v[t];
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  return true;
}

BraceTable conjugate_brace(const BraceTable& A, const FpMatrix& gamma) {
  if (gamma.p != A.p() || gamma.rows != A.dim() || gamma.cols != A.dim())
    throw DimensionMismatch("gamma must be n x n over the same field");
  const FpMatrix ginv = mat_inv(gamma);  // Singular if not invertible
  const std::uint32_t N = A.size();
  std::vector<FpMatrix> lambda;
  lambda.reserve(N);
  for (ElementIndex a = 0; a < N; ++a) {
    const ElementIndex ga = A.index_of(mat_vec(gamma, A.vector_of(a)));
    lambda.push_back(mat_mul(ginv, mat_mul(A.lambda_matrix(ga), gamma)));
  }
  return BraceTable(Prime(A.p()), A.dim(), A.basis_names(), std::move(lambda));
}

bool is_brace_automorphism(const BraceTable& A, const FpMatrix& gamma) {
  if (gamma.p != A.p() || gamma.rows != A.dim() || gamma.cols != A.dim())
    throw DimensionMismatch("gamma must be n x n over the same field");
  if (!mat_invertible(gamma)) throw Singular("gamma is not invertible");

  // gamma(a o b) = gamma(a) o gamma(b) for all b reduces, by linearity in b,
  // to the matrix identity gamma lambda_a = lambda_{gamma a} gamma.
  bool direct = true;
  for (ElementIndex a = 0; a < A.size(); ++a) {
    const ElementIndex ga = A.index_of(mat_vec(gamma, A.vector_of(a)));
    if (mat_mul(gamma, A.lambda_matrix(a)) != mat_mul(A.lambda_matrix(ga), gamma)) {
      direct = false;
      break;
    }
  }

  const BraceTable conj = conjugate_brace(A, gamma);
  bool table_equal = true;
  for (ElementIndex a = 0; a < A.size(); ++a) {
    const std::uint16_t* x = A.lambda_raw(a);
    const std::uint16_t* y = conj.lambda_raw(a);
    if (!std::equal(x, x + A.dim() * A.dim(), y)) {
      table_equal = false;
      break;
    }
  }

  if (direct != table_equal)
    throw RelationFailure("automorphism characterizations disagree");
  return direct;
}

FpMatrix random_gl(Prime p, std::size_t n, Rng& rng) {
  while (true) {
    FpMatrix m(p.value(), n, n);
    for (auto& x : m.a) x = static_cast<std::uint16_t>(rng.below(p.value()));
    if (mat_invertible(m)) return m;
  }
}

GammaStream::GammaStream(Prime p, std::size_t n, std::uint64_t budget)
    : p_(p.value()), n_(n), budget_(budget), digits_(n * n, 0) {
  if (n == 0) throw InvalidParams("dimension must be positive");
}

bool GammaStream::advance() {
  std::size_t i = 0;
  while (i < digits_.size()) {
    if (++digits_[i] < p_) return true;
    digits_[i] = 0;
    ++i;
  }
  return false;  // wrapped around: exhausted
}

std::optional<FpMatrix> GammaStream::next() {
  if (done_ || budget_exhausted_) return std::nullopt;
  if (emitted_ >= budget_) {
    budget_exhausted_ = true;
    return std::nullopt;
  }
  while (true) {
    FpMatrix m(p_, n_, n_);
    m.a = digits_;
    const bool more = advance();
    if (mat_invertible(m)) {
      ++emitted_;
      if (!more) done_ = true;
      return m;
    }
    if (!more) {
      done_ = true;
      return std::nullopt;
    }
  }
}

}  // namespace braceforge
