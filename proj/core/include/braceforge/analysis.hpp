#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/ideals.hpp"

namespace braceforge {

// Six-term identity for (a^-1 o b^-1 o a o b) * c; only valid in braces with
// A^5 = 0, so the precondition is computed once per instance here.
class CommutatorIdentity {
 public:
  explicit CommutatorIdentity(const BraceTable& A);  // PreconditionViolated if A^5 != 0
  bool check(ElementIndex a, ElementIndex b, ElementIndex c) const;

 private:
  const BraceTable& A_;
};

bool commutator_star_check(const BraceTable& A, ElementIndex a, ElementIndex b,
                           ElementIndex c);

// Cheap isomorphism-invariant data; optional parts are omitted when their
// computation is infeasible for the instance (they then do not participate
// in comparisons either).
struct Fingerprint {
  std::vector<std::size_t> left_dims, right_dims;
  std::optional<std::vector<std::size_t>> strong_dims;
  bool left_nilpotent = false;
  bool right_nilpotent = false;
  std::optional<bool> strong_nilpotent;
  std::optional<bool> prime;
  std::optional<std::vector<std::size_t>> ideal_dims;  // sorted ascending
  std::optional<GroupClass> group;                     // only when |A| = p^4
  std::size_t center_size = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_json_string(int indent = -1) const;
};

Fingerprint invariant_fingerprint(const BraceTable& A);

struct IsoWitness {
  std::map<std::string, ElementIndex> images;  // A basis label -> image in B
  FpMatrix gamma;                              // columns are the basis images
  std::vector<ElementIndex> full_map;          // phi as an index permutation
};

struct IsoOptions {
  std::uint64_t node_budget = 50000000;  // TooLarge once the search exceeds this
};

// Backtracking search for a bijection preserving + and o.  Images of the
// (standard) basis vectors are assigned deepest filtration level first; a
// candidate must sit in the same left-chain level B^i \ B^{i+1} as its
// preimage, keep the partial map injective, and satisfy the lambda
// compatibility phi(lambda_a(b)) = lambda_phi(a)(phi(b)) wherever it is
// already evaluable.  The filtration constraint loses no witnesses (the
// left chain is isomorphism-invariant), so an empty result means
// non-isomorphic.  A returned witness is re-verified on every pair.
std::optional<IsoWitness> brace_isomorphic(const BraceTable& A, const BraceTable& B,
                                           const IsoOptions& opts = {});

// True iff x -> gamma x is an isomorphism A -> B (checked on all pairs).
bool is_iso_witness(const BraceTable& A, const BraceTable& B, const FpMatrix& gamma);

}  // namespace braceforge
