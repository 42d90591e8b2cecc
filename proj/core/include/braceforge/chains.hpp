#pragma once

#include <string>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/subspace.hpp"

namespace braceforge {

// Additive span of {a*b : a ranges over the LEFT set, b over a basis of
// `right`}.  Restricting the right factor to a basis is sound because
// a*(b+c) = a*b + a*c; the left factor must range over every element
// because * is not left-additive.

// left = the full brace
Subspace star_span(const BraceTable& A, const Subspace& right);
// left = all p^dim elements of a subspace
Subspace star_span(const BraceTable& A, const Subspace& left, const Subspace& right);
// left = a single element (used for pointwise containments like Q * A^i)
Subspace star_image(const BraceTable& A, ElementIndex a, const Subspace& right);

struct ChainReport {
  enum class Kind { Left, Right, Strong };
  Kind kind;
  std::vector<std::size_t> dims;  // dim A^(1), dim A^(2), ... until termination
  bool stabilized_nonzero = false;
  std::vector<Subspace> terms;

  // Termination rule: a term equal to its predecessor is recorded once and
  // ends the chain (stabilized_nonzero = dim > 0); a zero term ends the
  // chain without repetition.  Hence the last two dims are equal iff the
  // chain stabilized at a nonzero subspace.
  bool reaches_zero() const { return !dims.empty() && dims.back() == 0; }
  const Subspace& term(std::size_t i) const { return terms.at(i); }  // A^(i+1)

  std::string kind_name() const;
  std::string to_json_string(int indent = -1) const;
};

// A^{i+1} = A * A^i
ChainReport left_chain(const BraceTable& A);
// A^{(i+1)} = A^{(i)} * A
ChainReport right_chain(const BraceTable& A);
// A^{[i+1]} = sum_{j=1..i} A^{[j]} * A^{[i+1-j]}.  This recurrence uses all
// earlier terms, so a single repeat does not by itself prove stabilization;
// the implementation keeps iterating over a verification horizon and throws
// if the plateau breaks (it never does for weakly decreasing chains that
// have genuinely stabilized).
ChainReport strong_chain(const BraceTable& A);

struct NilpotencyFlags {
  bool left = false;
  bool right = false;
  bool strong = false;
};

NilpotencyFlags classify_nilpotency(const BraceTable& A);

// True iff the left chain vanishes by A^5 (the quartic-inverse precondition).
bool a5_vanishes(const BraceTable& A);

// lambda_a^{-1}(b) by the quartic formula, with the A^5 = 0 precondition
// actually computed; throws PreconditionViolated when it fails.
ElementIndex lambda_inv_quartic_checked(const BraceTable& A, ElementIndex a,
                                        ElementIndex b);

}  // namespace braceforge
