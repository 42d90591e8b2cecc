#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/subspace.hpp"

namespace braceforge {

// An ideal is an F_p-subspace I with A*I <= I and I*A <= I (left factors
// ranging over all elements).  Lambda-invariance and circle-normality follow
// and are covered by tests rather than re-checked here.
struct Ideal {
  Subspace space;
};

// Every subspace of F_p^n exactly once, in canonical RREF form, ordered by
// dimension then pivot pattern then filling.  Guarded: total count <= 10^6.
std::vector<Subspace> enumerate_subspaces(const Prime& p, std::size_t n);

// Number of subspaces of F_p^n (sum of Gaussian binomials); saturates at
// 2^64-1 instead of overflowing.
std::uint64_t count_subspaces(const Prime& p, std::size_t n);

bool is_ideal(const BraceTable& A, const Subspace& V);

std::vector<Ideal> all_ideals(const BraceTable& A);

// Additive span of {a*b : a over all elements of I, b over a basis of J}.
Subspace ideal_product(const BraceTable& A, const Subspace& I, const Subspace& J);

// True iff the product of every ordered pair of nonzero ideals is nonzero.
bool is_prime(const BraceTable& A);

struct CenterResult {
  std::vector<ElementIndex> elements;  // ascending
  std::optional<Subspace> space;       // present when the set is a subspace
};

// {c : c o a = a o c for all a}, computed against a greedy circle-generating
// set so the cost is O(N * #generators) rather than O(N^2).
CenterResult circle_center(const BraceTable& A);

// Greedy circle-generating set of (A, o): scan indices ascending, keep each
// element outside the subgroup generated so far.
std::vector<ElementIndex> circle_generators(const BraceTable& A);

enum class GroupClass { Abelian, XIV, XV, Other };

const char* group_class_name(GroupClass g);

// Classification among groups of order p^4: anything of exponent != p is
// Other; exponent-p groups split into Abelian (elementary abelian) and the
// two nonabelian ones, told apart by center size p^2 (XIV) vs p (XV).
GroupClass identify_group(const BraceTable& A);

}  // namespace braceforge
