#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "braceforge/brace.hpp"
#include "braceforge/chains.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/family.hpp"
#include "braceforge/ideals.hpp"

using namespace braceforge;

TEST_CASE("family chains") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));

  ChainReport left = left_chain(A);
  CHECK(left.dims == std::vector<std::size_t>{4, 3, 2, 1, 0});
  CHECK(left.reaches_zero());
  CHECK(!left.stabilized_nonzero);

  ChainReport right = right_chain(A);
  CHECK(right.dims == std::vector<std::size_t>{4, 3, 3});
  CHECK(right.stabilized_nonzero);
  CHECK(!right.reaches_zero());

  ChainReport strong = strong_chain(A);
  CHECK(strong.dims == std::vector<std::size_t>{4, 3, 3});
  CHECK(strong.stabilized_nonzero);

  NilpotencyFlags flags = classify_nilpotency(A);
  CHECK(flags.left);
  CHECK(!flags.right);
  CHECK(!flags.strong);
  CHECK(a5_vanishes(A));
}

TEST_CASE("right chain term is spanned by Q P S") {
  BraceTable A = build_brace(make_family_params(5, 2, 1, 4));
  ChainReport right = right_chain(A);
  const Subspace& tail = right.term(right.dims.size() - 1);
  CHECK(tail.dim() == 3);
  CHECK(tail.contains(A.vector_of(family_Q(A))));
  CHECK(tail.contains(A.vector_of(family_P(A))));
  CHECK(tail.contains(A.vector_of(family_S(A))));
  CHECK(!tail.contains(A.vector_of(family_R(A))));
}

TEST_CASE("trivial and ring brace chains") {
  BraceTable T = trivial_brace(Prime(5), 4);
  CHECK(left_chain(T).dims == std::vector<std::size_t>{4, 0});
  NilpotencyFlags tf = classify_nilpotency(T);
  CHECK(tf.left);
  CHECK(tf.right);
  CHECK(tf.strong);

  BraceTable R = ring_brace(Prime(5), 3);  // x F_5[x] / (x^4)
  CHECK(left_chain(R).dims == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(right_chain(R).dims == std::vector<std::size_t>{3, 2, 1, 0});
  NilpotencyFlags rf = classify_nilpotency(R);
  CHECK(rf.left);
  CHECK(rf.right);
  CHECK(rf.strong);
  CHECK(a5_vanishes(R));
  CHECK(!a5_vanishes(ring_brace(Prime(5), 5)));  // A^5 = span{x^5} != 0
}

TEST_CASE("star span against direct image") {
  BraceTable A = build_brace(make_family_params(5, 1, 2, 3));
  Subspace full = Subspace::full(5, 4);
  Subspace sq = star_span(A, full);  // A * A
  CHECK(sq.dim() == 3);
  // independently: the span of all pairwise products
  Subspace direct(5, 4);
  for (ElementIndex a = 0; a < A.size(); ++a)
    direct = direct.sum(star_image(A, a, full));
  CHECK(direct == sq);
}

TEST_CASE("chain report json") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  std::string text = right_chain(A).to_json_string();
  CHECK(text.find("\"kind\":\"right\"") != std::string::npos);
  CHECK(text.find("\"stabilized_nonzero\":true") != std::string::npos);
}

TEST_CASE("subspace counting") {
  CHECK(count_subspaces(Prime(2), 2) == 5);
  CHECK(count_subspaces(Prime(5), 4) == 1120);
  CHECK(count_subspaces(Prime(7), 4) == 3652);
  std::vector<Subspace> subs = enumerate_subspaces(Prime(2), 2);
  CHECK(subs.size() == 5);
  std::vector<Subspace> s54 = enumerate_subspaces(Prime(5), 4);
  CHECK(s54.size() == 1120);
}

TEST_CASE("family ideal lattice") {
  BraceTable A = build_brace(make_family_params(5, 3, 1, 2));
  std::vector<Ideal> ideals = all_ideals(A);
  std::vector<std::size_t> dims;
  for (const Ideal& ideal : ideals) dims.push_back(ideal.space.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{0, 3, 4});
  CHECK(is_prime(A));

  // the dim-3 ideal is A^2 = A*A
  Subspace a2 = star_span(A, Subspace::full(5, 4));
  bool found = false;
  for (const Ideal& ideal : ideals)
    if (ideal.space == a2) found = true;
  CHECK(found);

  // A^2 * A^2 is nonzero (Q*Q = -yS), and right-multiplying it once more by
  // A^2 lands exactly on F_p P; the vanishing product is the other
  // bracketing, A^2 * (A^2 * A^2).
  Subspace sq = star_span(A, a2, a2);
  CHECK(sq.dim() == 2);
  Subspace p_line =
      Subspace::from_vectors(5, 4, {A.vector_of(family_P(A))});
  CHECK(star_span(A, sq, a2) == p_line);
  CHECK(star_span(A, a2, sq).is_zero());

  // A^2 is strongly nilpotent as a brace in itself: the chain
  // T^[n+1] = sum_j T^[j] * T^[n+1-j] starting from T^[1] = A^2 reaches 0.
  std::vector<Subspace> terms{a2};
  std::vector<std::size_t> chain_dims{a2.dim()};
  while (!terms.back().is_zero() && terms.size() < 8) {
    Subspace next(5, 4);
    const std::size_t n1 = terms.size() + 1;
    for (std::size_t j = 1; j < n1; ++j)
      next = next.sum(star_span(A, terms[j - 1], terms[n1 - j - 1]));
    terms.push_back(next);
    chain_dims.push_back(next.dim());
  }
  CHECK(chain_dims == std::vector<std::size_t>{3, 2, 1, 0});
}

TEST_CASE("trivial brace: every subspace is an ideal, not prime") {
  BraceTable T = trivial_brace(Prime(3), 3);
  std::vector<Ideal> ideals = all_ideals(T);
  CHECK(ideals.size() == count_subspaces(Prime(3), 3));
  CHECK(!is_prime(T));
}

TEST_CASE("ideal product matches star span") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  Subspace full = Subspace::full(5, 4);
  CHECK(ideal_product(A, full, full) == star_span(A, full));
}

TEST_CASE("is_ideal rejects non-invariant subspaces") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  // span{R} is not an ideal: S*R has components outside it
  Subspace r_line = Subspace::from_vectors(5, 4, {A.vector_of(family_R(A))});
  CHECK(!is_ideal(A, r_line));
  Subspace zero(5, 4);
  CHECK(is_ideal(A, zero));
  CHECK(is_ideal(A, Subspace::full(5, 4)));
}

TEST_CASE("circle center of the family is F_p P") {
  BraceTable A = build_brace(make_family_params(5, 2, 0, 0));
  CenterResult center = circle_center(A);
  CHECK(center.elements.size() == 5);
  REQUIRE(center.space.has_value());
  CHECK(center.space->dim() == 1);
  CHECK(center.space->contains(A.vector_of(family_P(A))));
}

TEST_CASE("circle generators generate") {
  BraceTable A = build_brace(make_family_params(5, 1, 1, 1));
  std::vector<ElementIndex> gens = circle_generators(A);
  CHECK(gens.size() >= 2);
  CHECK(gens.size() <= 4);
}

TEST_CASE("group identification") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  CHECK(identify_group(A) == GroupClass::XV);
  CHECK(identify_group(build_brace(make_family_params(7, 3, 1, 6))) == GroupClass::XV);

  CHECK(identify_group(trivial_brace(Prime(5), 4)) == GroupClass::Abelian);
  // commutative but with circle elements of order 9: exponent != p
  CHECK(identify_group(ring_brace(Prime(3), 4)) == GroupClass::Other);
  // commutative radical ring of exponent p
  CHECK(identify_group(ring_brace(Prime(5), 4)) == GroupClass::Abelian);

  CHECK_THROWS_AS(identify_group(trivial_brace(Prime(5), 3)), WrongCardinality);
  CHECK(std::string(group_class_name(GroupClass::XV)) == "XV");
  CHECK(std::string(group_class_name(GroupClass::Abelian)) == "abelian");
}
