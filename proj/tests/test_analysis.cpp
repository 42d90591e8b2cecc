#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braceforge/analysis.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/chains.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/family.hpp"
#include "braceforge/hol.hpp"
#include "braceforge/rng.hpp"

using namespace braceforge;

TEST_CASE("commutator identity on the family") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  CommutatorIdentity ident(A);
  ElementIndex R = family_R(A), S = family_S(A);
  CHECK(ident.check(R, S, R));
  Rng rng(19);
  for (int t = 0; t < 2000; ++t)
    CHECK(ident.check(rng.below(A.size()), rng.below(A.size()), rng.below(A.size())));
  CHECK(commutator_star_check(A, S, R, family_Q(A)));
}

TEST_CASE("commutator identity requires vanishing A^5") {
  CHECK_THROWS_AS(CommutatorIdentity(ring_brace(Prime(5), 5)), PreconditionViolated);
  CHECK_NOTHROW(CommutatorIdentity(ring_brace(Prime(5), 4)));
}

TEST_CASE("quartic lambda inverse equals the matrix inverse") {
  BraceTable A = build_brace(make_family_params(5, 4, 2, 1));
  for (ElementIndex a = 0; a < A.size(); ++a) {
    ElementIndex b = (a * 31 + 7) % A.size();
    CHECK(lambda_inv_quartic_checked(A, a, b) == A.lambda_inv_apply(a, b));
  }
}

TEST_CASE("fingerprint of the family") {
  BraceTable A = build_brace(make_family_params(5, 2, 3, 1));
  Fingerprint fp = invariant_fingerprint(A);
  CHECK(fp.left_dims == std::vector<std::size_t>{4, 3, 2, 1, 0});
  CHECK(fp.right_dims == std::vector<std::size_t>{4, 3, 3});
  CHECK(fp.left_nilpotent);
  CHECK(!fp.right_nilpotent);
  REQUIRE(fp.prime.has_value());
  CHECK(*fp.prime);
  REQUIRE(fp.ideal_dims.has_value());
  CHECK(*fp.ideal_dims == std::vector<std::size_t>{0, 3, 4});
  REQUIRE(fp.group.has_value());
  CHECK(*fp.group == GroupClass::XV);
  CHECK(fp.center_size == 5);

  std::string text = fp.to_json_string();
  CHECK(text.find("\"group\":\"XV\"") != std::string::npos);
}

TEST_CASE("fingerprints agree across the family") {
  Fingerprint base = invariant_fingerprint(build_brace(make_family_params(5, 1, 0, 0)));
  for (auto [y, i, k] : {std::array<int, 3>{2, 0, 0}, {1, 4, 2}, {3, 3, 3}})
    CHECK(invariant_fingerprint(build_brace(make_family_params(5, y, i, k))) == base);
  CHECK(!(invariant_fingerprint(trivial_brace(Prime(5), 4)) == base));
}

TEST_CASE("self isomorphism produces a valid witness") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  std::optional<IsoWitness> w = brace_isomorphic(A, A);
  REQUIRE(w.has_value());
  CHECK(is_iso_witness(A, A, w->gamma));
  for (ElementIndex a = 0; a < A.size(); ++a) CHECK(w->full_map[a] < A.size());
}

TEST_CASE("conjugate braces are isomorphic with verifiable witness") {
  BraceTable A = build_brace(make_family_params(5, 2, 1, 0));
  Rng rng(101);
  for (int t = 0; t < 3; ++t) {
    FpMatrix gamma = random_gl(Prime(5), 4, rng);
    BraceTable C = conjugate_brace(A, gamma);
    std::optional<IsoWitness> w = brace_isomorphic(A, C);
    REQUIRE(w.has_value());
    CHECK(is_iso_witness(A, C, w->gamma));
    // the conjugating matrix itself certifies the isomorphism
    CHECK(is_iso_witness(A, C, mat_inv(gamma)));
  }
}

TEST_CASE("non-isomorphic braces are rejected") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  CHECK(!brace_isomorphic(A, trivial_brace(Prime(5), 4)).has_value());
  CHECK(!brace_isomorphic(A, ring_brace(Prime(5), 4)).has_value());
  CHECK_THROWS_AS(brace_isomorphic(A, trivial_brace(Prime(7), 4)), DimensionMismatch);
}

TEST_CASE("is_iso_witness rejects wrong maps") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  FpMatrix id = FpMatrix::identity(5, 4);
  CHECK(is_iso_witness(A, A, id));
  FpMatrix singular(5, 4, 4);
  CHECK(!is_iso_witness(A, A, singular));
  // an additive automorphism that scrambles the filtration is not a brace map
  FpMatrix swap = FpMatrix::from_rows(5, {{0, 0, 0, 1},
                                          {0, 1, 0, 0},
                                          {0, 0, 1, 0},
                                          {1, 0, 0, 0}});
  CHECK(!is_iso_witness(A, A, swap));
}

TEST_CASE("iso between different family parameters") {
  // Every member has the same fingerprint; the search must settle the question.
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  BraceTable B = build_brace(make_family_params(5, 2, 0, 0));
  std::optional<IsoWitness> w = brace_isomorphic(A, B);
  if (w) CHECK(is_iso_witness(A, B, w->gamma));
}
