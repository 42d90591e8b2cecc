#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braceforge/errors.hpp"
#include "braceforge/prelie.hpp"
#include "braceforge/rng.hpp"

using namespace braceforge;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(PreLieAlgebra(Prime(5), 0, 0, 0), InvalidParams);  // y = 0
  CHECK_THROWS_AS(PreLieAlgebra(Prime(5), 1, 1, 5), InvalidParams);  // y = 0 mod p
  CHECK_NOTHROW(PreLieAlgebra(Prime(5), 4, 4, 4));
}

TEST_CASE("product table") {
  PreLieAlgebra V(Prime(5), 2, 3, 1);  // j=2, k=3, y=1
  auto vec = [&](int r, int q, int p, int s) {
    return FpVector(5, {p, q, r, s});  // basis order P,Q,R,S
  };
  // nonzero products: RR = jP + kS, QQ = -yS, RP = PR = yS, SQ = -P, SR = -Q
  CHECK(V.product(V.basis(2), V.basis(2)) == vec(0, 0, 2, 3));
  CHECK(V.product(V.basis(1), V.basis(1)) == vec(0, 0, 0, 4));
  CHECK(V.product(V.basis(2), V.basis(0)) == vec(0, 0, 0, 1));
  CHECK(V.product(V.basis(0), V.basis(2)) == vec(0, 0, 0, 1));
  CHECK(V.product(V.basis(3), V.basis(1)) == vec(0, 0, 4, 0));
  CHECK(V.product(V.basis(3), V.basis(2)) == vec(0, 4, 0, 0));
  // everything else vanishes
  CHECK(V.product(V.basis(0), V.basis(0)) == FpVector(5, 4));
  CHECK(V.product(V.basis(0), V.basis(1)) == FpVector(5, 4));
  CHECK(V.product(V.basis(3), V.basis(3)) == FpVector(5, 4));
  CHECK(V.product(V.basis(1), V.basis(2)) == FpVector(5, 4));
}

TEST_CASE("product is bilinear") {
  PreLieAlgebra V(Prime(5), 1, 2, 3);
  Rng rng(27);
  auto rand_vec = [&]() {
    FpVector v(5, 4);
    for (std::size_t j = 0; j < 4; ++j) v[j] = static_cast<std::uint16_t>(rng.below(5));
    return v;
  };
  for (int t = 0; t < 50; ++t) {
    FpVector a = rand_vec(), b = rand_vec(), c = rand_vec();
    CHECK(V.product(vec_add(a, b), c) == vec_add(V.product(a, c), V.product(b, c)));
    CHECK(V.product(a, vec_add(b, c)) == vec_add(V.product(a, b), V.product(a, c)));
  }
}

TEST_CASE("pre-Lie identity holds for every parameter choice") {
  for (int y = 1; y < 5; ++y)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        PreLieAlgebra V(Prime(5), static_cast<std::uint16_t>(j),
                        static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(y));
        CheckReport rep = verify_prelie_identity(V);
        CHECK(rep.ok());
        CHECK(rep.items_checked == 64);
      }
}

TEST_CASE("left nilpotent but not right nilpotent") {
  PreLieAlgebra V(Prime(5), 0, 0, 1);
  PreLieNilpotency nil = prelie_nilpotency(V);
  CHECK(nil.left);
  CHECK(!nil.right);
  CHECK(nil.left_dims == std::vector<std::size_t>{4, 3, 2, 1, 0});
  CHECK(nil.right_dims == std::vector<std::size_t>{4, 3, 3});
}

TEST_CASE("plproduct free function matches the member") {
  PreLieAlgebra V(Prime(7), 1, 2, 3);
  CHECK(plproduct(V, V.basis(2), V.basis(2)) == V.product(V.basis(2), V.basis(2)));
}
