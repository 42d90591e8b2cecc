#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "braceforge/brace.hpp"
#include "braceforge/brace_io.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/family.hpp"
#include "braceforge/rng.hpp"
#include "braceforge/verify.hpp"

using namespace braceforge;

TEST_CASE("element codec roundtrip") {
  BraceTable A = trivial_brace(Prime(5), 4);
  CHECK(A.size() == 625);
  for (ElementIndex a = 0; a < A.size(); ++a) CHECK(A.index_of(A.vector_of(a)) == a);
  CHECK(A.basis_element(0) == 125);
  CHECK(A.basis_element(3) == 1);
  CHECK(A.digit(A.basis_element(1), 1) == 1);
  CHECK(A.digit(A.basis_element(1), 0) == 0);
  CHECK_THROWS_AS(A.basis_element(4), IndexOutOfRange);
  CHECK_THROWS_AS(A.check_index(625), IndexOutOfRange);
}

TEST_CASE("additive ops") {
  BraceTable A = trivial_brace(Prime(7), 3);
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    ElementIndex a = rng.below(A.size()), b = rng.below(A.size());
    CHECK(A.add(a, b) == A.add(b, a));
    CHECK(A.sub(A.add(a, b), b) == a);
    CHECK(A.add(a, A.neg(a)) == 0);
    CHECK(A.scale(0, a) == 0);
    CHECK(A.scale(1, a) == a);
    CHECK(A.scale(3, a) == A.add(a, A.add(a, a)));
  }
}

TEST_CASE("trivial brace has zero star and circle equal to add") {
  BraceTable A = trivial_brace(Prime(5), 3);
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    ElementIndex a = rng.below(A.size()), b = rng.below(A.size());
    CHECK(A.star(a, b) == 0);
    CHECK(A.circle(a, b) == A.add(a, b));
    CHECK(A.circle_inv(a) == A.neg(a));
  }
  CHECK(verify_brace_axioms(A).ok());
}

TEST_CASE("ring brace is a commutative brace") {
  BraceTable A = ring_brace(Prime(5), 3);
  CHECK(verify_brace_axioms(A).ok());
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    ElementIndex a = rng.below(A.size()), b = rng.below(A.size());
    CHECK(A.circle(a, b) == A.circle(b, a));
    CHECK(A.star(a, b) == A.star(b, a));
  }
  // x1 * x1 = x2, x1 * x2 = x3, x2 * x2 = 0 (degrees add, x^4 = 0)
  ElementIndex x1 = A.basis_element(0), x2 = A.basis_element(1), x3 = A.basis_element(2);
  CHECK(A.star(x1, x1) == x2);
  CHECK(A.star(x1, x2) == x3);
  CHECK(A.star(x2, x2) == 0);
  CHECK(!A.meta().has_value());
}

TEST_CASE("star circle lambda identities") {
  BraceTable A = build_brace(make_family_params(5, 2, 1, 3));
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    ElementIndex a = rng.below(A.size()), b = rng.below(A.size());
    CHECK(A.circle(a, b) == A.add(a, A.lambda_apply(a, b)));
    CHECK(A.star(a, b) == A.sub(A.circle(a, b), A.add(a, b)));
    CHECK(A.lambda_apply(a, b) == A.add(A.star(a, b), b));
    CHECK(A.lambda_inv_apply(a, A.lambda_apply(a, b)) == b);
  }
}

TEST_CASE("circle powers and inverses") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    ElementIndex a = rng.below(A.size());
    CHECK(A.circle_pow(a, 5) == 0);  // exponent p
    CHECK(A.circle_pow(a, 0) == 0);
    CHECK(A.circle_pow(a, 1) == a);
    CHECK(A.circle_pow(a, -1) == A.circle_inv(a));
    CHECK(A.circle(a, A.circle_inv(a)) == 0);
    CHECK(A.circle_pow(a, 7) == A.circle(a, a));  // 7 = 2 mod 5
  }
}

TEST_CASE("table constructor validation") {
  Prime p(5);
  std::vector<std::string> names{"e1", "e2"};
  std::vector<FpMatrix> lambda(25, FpMatrix::identity(5, 2));

  SUBCASE("accepts the trivial table") {
    BraceTable A(p, 2, names, lambda);
    CHECK(A.size() == 25);
  }
  SUBCASE("rejects wrong table size") {
    lambda.pop_back();
    CHECK_THROWS_AS(BraceTable(p, 2, names, lambda), DimensionMismatch);
  }
  SUBCASE("rejects lambda(0) != identity") {
    lambda[0] = FpMatrix::from_rows(5, {{1, 1}, {0, 1}});
    CHECK_THROWS_AS(BraceTable(p, 2, names, lambda), InvalidParams);
  }
  SUBCASE("rejects singular lambda") {
    lambda[3] = FpMatrix(5, 2, 2);
    CHECK_THROWS_AS(BraceTable(p, 2, names, lambda), Singular);
  }
}

TEST_CASE("family json roundtrip") {
  BraceTable A = build_brace(make_family_params(5, 3, 2, 4));
  std::string text = brace_to_json(A, /*as_table=*/false);
  BraceTable B = brace_from_json(text);
  CHECK(B.size() == A.size());
  CHECK(B.meta() == A.meta());
  for (ElementIndex a = 0; a < A.size(); ++a)
    CHECK(A.lambda_matrix(a).a == B.lambda_matrix(a).a);
}

TEST_CASE("table json roundtrip") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  std::string text = brace_to_json(A, /*as_table=*/true);
  BraceTable B = brace_from_json(text);
  CHECK(B.size() == A.size());
  CHECK(!B.meta().has_value());  // expansion drops the family tag
  for (ElementIndex a = 0; a < A.size(); ++a)
    CHECK(A.lambda_matrix(a).a == B.lambda_matrix(a).a);
  CHECK(B.basis_names() == A.basis_names());
}

TEST_CASE("loader rejects malformed input") {
  CHECK_THROWS_AS(brace_from_json("not json"), ParseError);
  CHECK_THROWS_AS(brace_from_json("{}"), ParseError);
  CHECK_THROWS_AS(brace_from_json(R"({"kind": "mystery"})"), ParseError);
  CHECK_THROWS_AS(brace_from_json(R"({"kind": "family", "p": 5})"), ParseError);
  CHECK_THROWS_AS(brace_from_json(R"({"kind": "family", "p": 4, "y": 1, "i": 0, "k": 0})"),
                  InvalidParams);
  CHECK_THROWS_AS(brace_from_json(R"({"kind": "family", "p": 5, "y": 0, "i": 0, "k": 0})"),
                  InvalidParams);
}

TEST_CASE("loader verifies the homomorphism law") {
  BraceTable A = ring_brace(Prime(5), 2);
  CHECK_NOTHROW(brace_from_json(brace_to_json(A, /*as_table=*/true)));
  std::vector<FpMatrix> lambda;
  for (ElementIndex a = 0; a < A.size(); ++a) lambda.push_back(A.lambda_matrix(a));
  lambda[7] = FpMatrix::from_rows(5, {{1, 0}, {3, 1}});  // wrong but invertible
  BraceTable broken(Prime(5), 2, {"x1", "x2"}, lambda);
  CHECK_THROWS_AS(brace_from_json(brace_to_json(broken, true)), RelationFailure);
}

TEST_CASE("save and load files") {
  BraceTable A = build_brace(make_family_params(5, 2, 0, 1));
  const char* path = "braceio_test_tmp.json";
  save_brace(A, path, /*as_table=*/false);
  BraceTable B = load_brace(path);
  CHECK(B.meta() == A.meta());
  std::remove(path);
  CHECK_THROWS_AS(load_brace("no_such_file_braceforge.json"), ParseError);
}

TEST_CASE("gamma json roundtrip and validation") {
  FpMatrix g = FpMatrix::from_rows(5, {{2, 1}, {1, 1}});
  FpMatrix back = gamma_from_json(gamma_to_json(g));
  CHECK(back.a == g.a);
  CHECK_THROWS_AS(gamma_from_json("{"), ParseError);
  CHECK_THROWS_AS(gamma_from_json(R"({"p": 5, "n": 2, "matrix": [1, 2]})"), ParseError);
  CHECK_THROWS_AS(gamma_from_json(R"({"p": 5, "n": 2, "matrix": [1, 2, 2, 4]})"), Singular);
}

TEST_CASE("circle table csv shape") {
  BraceTable A = trivial_brace(Prime(3), 2);
  std::string csv = circle_table_csv(A);
  // 1 header + 9 rows, each with 1 + 9 fields
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 10);
  CHECK(csv.rfind("a\\b,0,1,2,3,4,5,6,7,8", 0) == 0);
  // trivial brace: circle = add, row a entry b = a + b (digitwise)
  CHECK(csv.find("\n1,1,2,0,4,5,3,7,8,6") != std::string::npos);
}

TEST_CASE("lambda inverse quartic needs the vanishing flag") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  CHECK_THROWS_AS(A.lambda_inv_quartic(3, 7, /*a5_is_zero=*/false), PreconditionViolated);
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    ElementIndex a = rng.below(A.size()), b = rng.below(A.size());
    CHECK(A.lambda_inv_quartic(a, b, true) == A.lambda_inv_apply(a, b));
  }
}
