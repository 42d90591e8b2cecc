#include "braceforge/chains.hpp"

#include <sstream>

namespace braceforge {

namespace {

// Core star-span worker over an explicit list of left elements.
Subspace star_span_list(const BraceTable& A, const std::vector<ElementIndex>& left,
                        const Subspace& right) {
  const std::size_t n = A.dim();
  std::vector<FpVector> products;
  products.reserve(left.size() * right.dim());
  for (ElementIndex a : left) {
    for (std::size_t r = 0; r < right.dim(); ++r) {
      ElementIndex b = A.index_of(right.basis().row(r));
      products.push_back(A.vector_of(A.star(a, b)));
    }
  }
  return Subspace::from_vectors(A.p(), n, products);
}

std::vector<ElementIndex> all_elements(const BraceTable& A) {
  std::vector<ElementIndex> v(A.size());
  for (ElementIndex a = 0; a < A.size(); ++a) v[a] = a;
  return v;
}

std::vector<ElementIndex> subspace_elements(const BraceTable& A, const Subspace& s) {
  std::vector<ElementIndex> out;
  for (const FpVector& v : s.elements()) out.push_back(A.index_of(v));
  return out;
}

}  // namespace

Subspace star_span(const BraceTable& A, const Subspace& right) {
  return star_span_list(A, all_elements(A), right);
}

Subspace star_span(const BraceTable& A, const Subspace& left, const Subspace& right) {
  return star_span_list(A, subspace_elements(A, left), right);
}

Subspace star_image(const BraceTable& A, ElementIndex a, const Subspace& right) {
  return star_span_list(A, {a}, right);
}

std::string ChainReport::kind_name() const {
  switch (kind) {
    case Kind::Left: return "left";
    case Kind::Right: return "right";
    default: return "strong";
  }
}

namespace {

// Shared driver for the two memoryless chains (next term depends only on the
// current one).  Termination: zero term, or a term equal to its predecessor.
template <typename Step>
ChainReport run_chain(const BraceTable& A, ChainReport::Kind kind, Step step) {
  ChainReport rep;
  rep.kind = kind;
  Subspace cur = Subspace::full(A.p(), A.dim());
  rep.terms.push_back(cur);
  rep.dims.push_back(cur.dim());
  while (true) {
    Subspace next = step(cur);
    rep.terms.push_back(next);
    rep.dims.push_back(next.dim());
    if (next.is_zero()) break;
    if (next == cur) {
      rep.stabilized_nonzero = true;
      break;
    }
    cur = std::move(next);
  }
  return rep;
}

}  // namespace

ChainReport left_chain(const BraceTable& A) {
  return run_chain(A, ChainReport::Kind::Left,
                   [&](const Subspace& cur) { return star_span(A, cur); });
}

ChainReport right_chain(const BraceTable& A) {
  Subspace full = Subspace::full(A.p(), A.dim());
  return run_chain(A, ChainReport::Kind::Right,
                   [&](const Subspace& cur) { return star_span(A, cur, full); });
}

ChainReport strong_chain(const BraceTable& A) {
  ChainReport rep;
  rep.kind = ChainReport::Kind::Strong;
  std::vector<Subspace> terms;  // terms[i] = A^{[i+1]}
  terms.push_back(Subspace::full(A.p(), A.dim()));

  // The recurrence consults every earlier term, so one repeat is confirmed
  // by extending the computation over an n+1 step horizon before the plateau
  // is trusted; a broken plateau just resets the tracking and keeps going.
  const std::size_t horizon = A.dim() + 1;
  std::size_t plateau = 0;   // consecutive terms equal to their predecessor
  std::size_t first_repeat = 0;  // index of the first term of the plateau
  const std::size_t cap = 8 * (A.dim() + 2);
  bool hit_zero = false;

  while (terms.size() < cap) {
    const std::size_t i = terms.size();  // computing A^{[i+1]}, 1-based i+1
    Subspace next(A.p(), A.dim());
    for (std::size_t j = 1; j <= i; ++j) {
      // A^{[j]} * A^{[i+1-j]}
      next = next.sum(star_span(A, terms[j - 1], terms[i - j]));
    }
    bool repeat = (next == terms.back());
    bool zero = next.is_zero();
    terms.push_back(std::move(next));
    if (zero) {
      hit_zero = true;
      break;
    }
    if (repeat) {
      if (plateau == 0) first_repeat = terms.size() - 1;
      ++plateau;
      if (plateau >= horizon) break;
    } else {
      plateau = 0;
    }
  }
  if (!hit_zero && plateau < horizon)
    throw TooLarge("strong chain failed to stabilize within the iteration cap");

  // Report terms up to and including the first repeated one (or the zero).
  std::size_t keep = hit_zero ? terms.size() : first_repeat + 1;
  for (std::size_t t = 0; t < keep; ++t) {
    rep.terms.push_back(terms[t]);
    rep.dims.push_back(terms[t].dim());
  }
  rep.stabilized_nonzero = plateau > 0;
  return rep;
}

NilpotencyFlags classify_nilpotency(const BraceTable& A) {
  NilpotencyFlags f;
  f.left = left_chain(A).reaches_zero();
  f.right = right_chain(A).reaches_zero();
  f.strong = strong_chain(A).reaches_zero();
  return f;
}

bool a5_vanishes(const BraceTable& A) {
  // A^5 = 0 iff the left chain's 5th term vanishes; the chain report stops
  // at stabilization, so a short report ending in 0 also means A^5 = 0.
  ChainReport rep = left_chain(A);
  if (rep.reaches_zero()) return rep.dims.size() <= 5;
  return false;  // stabilized at a nonzero subspace: A^i never vanishes
}

ElementIndex lambda_inv_quartic_checked(const BraceTable& A, ElementIndex a,
                                        ElementIndex b) {
  if (!a5_vanishes(A))
    throw PreconditionViolated("quartic lambda-inverse requires A^5 = 0");
  return A.lambda_inv_quartic(a, b, true);
}

std::string ChainReport::to_json_string(int indent) const {
  std::ostringstream os;
  (void)indent;
  os << "{\"kind\":\"" << kind_name() << "\",\"dims\":[";
  for (std::size_t i = 0; i < dims.size(); ++i)
    os << (i ? "," : "") << dims[i];
  os << "],\"stabilized_nonzero\":" << (stabilized_nonzero ? "true" : "false")
     << "}";
  return os.str();
}

}  // namespace braceforge
