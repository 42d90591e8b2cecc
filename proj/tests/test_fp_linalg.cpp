#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braceforge/errors.hpp"
#include "braceforge/fp.hpp"
#include "braceforge/matrix.hpp"
#include "braceforge/rng.hpp"
#include "braceforge/subspace.hpp"

using namespace braceforge;

TEST_CASE("prime validation") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(5).value() == 5);
  CHECK(Prime(251).value() == 251);
  CHECK_THROWS_AS(Prime(0), InvalidParams);
  CHECK_THROWS_AS(Prime(1), InvalidParams);
  CHECK_THROWS_AS(Prime(4), InvalidParams);
  CHECK_THROWS_AS(Prime(91), InvalidParams);  // 7 * 13
  CHECK_THROWS_AS(Prime(65536), InvalidParams);
}

TEST_CASE("modular inverse") {
  CHECK(inv_mod(2, 5) == 3);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(inv_mod(1, 2) == 1);
  CHECK_THROWS_AS(inv_mod(0, 5), ZeroInverse);
  for (std::uint32_t p : {5u, 7u, 13u})
    for (std::uint32_t a = 1; a < p; ++a) CHECK(a * inv_mod(a, p) % p == 1);
}

TEST_CASE("scalar helpers") {
  Prime p(7);
  CHECK(make_scalar(-1, p).value == 6);
  CHECK(make_scalar(15, p).value == 1);
  CHECK(scalar_inv(make_scalar(3, p)).value == 5);
  CHECK_THROWS_AS(scalar_inv(make_scalar(0, p)), ZeroInverse);
}

TEST_CASE("vector construction reduces entries") {
  FpVector v(5, {-1, 7, 0, 3});
  CHECK(v.size() == 4);
  CHECK(v[0] == 4);
  CHECK(v[1] == 2);
  CHECK(v[2] == 0);
  CHECK(v[3] == 3);
}

TEST_CASE("matrix multiply against identity and associativity") {
  Rng rng(11);
  FpMatrix id = FpMatrix::identity(5, 4);
  for (int trial = 0; trial < 20; ++trial) {
    FpMatrix m(5, 4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        m.at(r, c) = static_cast<std::uint16_t>(rng.below(5));
    CHECK(mat_mul(m, id).a == m.a);
    CHECK(mat_mul(id, m).a == m.a);
  }
  for (int trial = 0; trial < 20; ++trial) {
    FpMatrix a(5, 4, 4), b(5, 4, 4), c(5, 4, 4);
    for (FpMatrix* m : {&a, &b, &c})
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t cc = 0; cc < 4; ++cc)
          m->at(r, cc) = static_cast<std::uint16_t>(rng.below(5));
    CHECK(mat_mul(mat_mul(a, b), c).a == mat_mul(a, mat_mul(b, c)).a);
  }
}

TEST_CASE("matrix inverse") {
  Rng rng(23);
  int found = 0;
  while (found < 25) {
    FpMatrix m(7, 3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        m.at(r, c) = static_cast<std::uint16_t>(rng.below(7));
    if (!mat_invertible(m)) {
      CHECK_THROWS_AS(mat_inv(m), Singular);
      continue;
    }
    ++found;
    FpMatrix inv = mat_inv(m);
    CHECK(mat_mul(m, inv).is_identity());
    CHECK(mat_mul(inv, m).is_identity());
  }
  FpMatrix zero(5, 2, 2);
  CHECK(!mat_invertible(zero));
  CHECK_THROWS_AS(mat_inv(zero), Singular);
}

TEST_CASE("matrix power") {
  FpMatrix m = FpMatrix::from_rows(5, {{1, 1}, {0, 1}});
  CHECK(mat_pow(m, 0).is_identity());
  CHECK(mat_pow(m, 1).a == m.a);
  CHECK(mat_pow(m, 5).is_identity());  // unipotent, order p
  FpMatrix m4 = mat_pow(m, 4);
  CHECK(mat_mul(m4, m).is_identity());
}

TEST_CASE("matrix-vector product") {
  FpMatrix m = FpMatrix::from_rows(5, {{0, 1}, {4, 0}});
  FpVector v(5, {2, 3});
  FpVector mv = mat_vec(m, v);
  CHECK(mv[0] == 3);
  CHECK(mv[1] == 3);  // 4*2 = 8 = 3 mod 5
}

TEST_CASE("dimension mismatch detected") {
  FpMatrix a(5, 2, 3), b(5, 2, 3);
  CHECK_THROWS_AS(mat_mul(a, b), DimensionMismatch);
  CHECK_THROWS_AS(mat_vec(a, FpVector(5, {1, 1})), DimensionMismatch);
}

TEST_CASE("subspace canonical form is generator independent") {
  Subspace s1 = Subspace::from_vectors(5, 3, {FpVector(5, {1, 2, 0}), FpVector(5, {0, 0, 1})});
  Subspace s2 = Subspace::from_vectors(
      5, 3, {FpVector(5, {2, 4, 0}), FpVector(5, {1, 2, 3}), FpVector(5, {3, 6, 2})});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
}

TEST_CASE("subspace membership and sum") {
  Subspace s = Subspace::from_vectors(5, 3, {FpVector(5, {1, 0, 2})});
  CHECK(s.contains(FpVector(5, {3, 0, 6})));
  CHECK(!s.contains(FpVector(5, {1, 1, 2})));
  Subspace t = Subspace::from_vectors(5, 3, {FpVector(5, {0, 1, 0})});
  Subspace u = s.sum(t);
  CHECK(u.dim() == 2);
  CHECK(u.contains(FpVector(5, {1, 1, 2})));
  CHECK(u.contains(s));
  CHECK(u.contains(t));
  CHECK(!s.contains(u));
}

TEST_CASE("subspace element enumeration") {
  Subspace s = Subspace::from_vectors(3, 4, {FpVector(3, {1, 0, 0, 1}), FpVector(3, {0, 1, 0, 0})});
  std::vector<FpVector> elems = s.elements();
  CHECK(elems.size() == 9);  // 3^2
  for (const FpVector& e : elems) CHECK(s.contains(e));
  Subspace zero(3, 4);
  CHECK(zero.is_zero());
  CHECK(zero.elements().size() == 1);
  Subspace full = Subspace::full(3, 4);
  CHECK(full.dim() == 4);
  CHECK(full.elements().size() == 81);
}

TEST_CASE("rref is idempotent") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    FpMatrix m(5, 3, 5);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 5; ++c)
        m.at(r, c) = static_cast<std::uint16_t>(rng.below(5));
    FpMatrix r1 = rref(m);
    CHECK(rref(r1).a == r1.a);
  }
}
