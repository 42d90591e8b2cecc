#include "braceforge/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braceforge/chains.hpp"

namespace braceforge {

CommutatorIdentity::CommutatorIdentity(const BraceTable& A) : A_(A) {
  if (!a5_vanishes(A))
    throw PreconditionViolated("commutator identity needs A^5 = 0");
}

bool CommutatorIdentity::check(ElementIndex a, ElementIndex b, ElementIndex c) const {
  const BraceTable& A = A_;
  const ElementIndex g =
      A.circle(A.circle(A.circle_inv(a), A.circle_inv(b)), A.circle(a, b));
  const ElementIndex lhs = A.star(g, c);

  const ElementIndex bc = A.star(b, c), ac = A.star(a, c);
  const ElementIndex abc = A.star(a, bc);  // a*(b*c)
  const ElementIndex bac = A.star(b, ac);  // b*(a*c)
  ElementIndex rhs = A.sub(abc, bac);
  rhs = A.add(rhs, A.star(a, bac));
  rhs = A.add(rhs, A.star(b, bac));
  rhs = A.sub(rhs, A.star(b, abc));
  rhs = A.sub(rhs, A.star(a, abc));
  return lhs == rhs;
}

bool commutator_star_check(const BraceTable& A, ElementIndex a, ElementIndex b,
                           ElementIndex c) {
  return CommutatorIdentity(A).check(a, b, c);
}

Fingerprint invariant_fingerprint(const BraceTable& A) {
  Fingerprint f;
  const ChainReport L = left_chain(A);
  const ChainReport R = right_chain(A);
  f.left_dims = L.dims;
  f.right_dims = R.dims;
  f.left_nilpotent = L.reaches_zero();
  f.right_nilpotent = R.reaches_zero();
  try {
    const ChainReport S = strong_chain(A);
    f.strong_dims = S.dims;
    f.strong_nilpotent = S.reaches_zero();
  } catch (const TooLarge&) {
    // chain did not provably stabilize; leave the strong parts absent
  }
  f.center_size = circle_center(A).elements.size();
  if (A.dim() == 4) f.group = identify_group(A);
  if (count_subspaces(Prime(A.p()), A.dim()) <= 1000000) {
    const std::vector<Ideal> ideals = all_ideals(A);
    std::vector<std::size_t> dims;
    dims.reserve(ideals.size());
    for (const Ideal& I : ideals) dims.push_back(I.space.dim());
    std::sort(dims.begin(), dims.end());
    f.ideal_dims = std::move(dims);
    bool prime = true;
    for (const Ideal& I : ideals) {
      if (I.space.is_zero() || !prime) continue;
      for (const Ideal& J : ideals) {
        if (J.space.is_zero()) continue;
        if (ideal_product(A, I.space, J.space).is_zero()) {
          prime = false;
          break;
        }
      }
    }
    f.prime = prime;
  }
  return f;
}

namespace {

void append_dims(std::ostringstream& os, const std::vector<std::size_t>& dims) {
  os << '[';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ',';
    os << dims[i];
  }
  os << ']';
}

}  // namespace

std::string Fingerprint::to_json_string(int) const {
  std::ostringstream os;
  os << "{\"left_dims\":";
  append_dims(os, left_dims);
  os << ",\"right_dims\":";
  append_dims(os, right_dims);
  os << ",\"strong_dims\":";
  if (strong_dims)
    append_dims(os, *strong_dims);
  else
    os << "null";
  os << ",\"left_nilpotent\":" << (left_nilpotent ? "true" : "false");
  os << ",\"right_nilpotent\":" << (right_nilpotent ? "true" : "false");
  os << ",\"strong_nilpotent\":";
  if (strong_nilpotent)
    os << (*strong_nilpotent ? "true" : "false");
  else
    os << "null";
  os << ",\"prime\":";
  if (prime)
    os << (*prime ? "true" : "false");
  else
    os << "null";
  os << ",\"ideal_dims\":";
  if (ideal_dims)
    append_dims(os, *ideal_dims);
  else
    os << "null";
  os << ",\"group\":";
  if (group)
    os << '"' << group_class_name(*group) << '"';
  else
    os << "null";
  os << ",\"center_size\":" << center_size << '}';
  return os.str();
}

namespace {

struct LevelData {
  std::vector<Subspace> terms;        // left chain: terms[0] = A^1 = all of A
  std::vector<std::size_t> level_of;  // 1-based; deeper = smaller subspace
};

LevelData compute_levels(const BraceTable& T) {
  LevelData L;
  L.terms = left_chain(T).terms;
  L.level_of.assign(T.size(), 0);
  for (ElementIndex x = 0; x < T.size(); ++x) {
    const FpVector v = T.vector_of(x);
    std::size_t lvl = 0;
    for (std::size_t i = 0; i < L.terms.size(); ++i) {
      if (!L.terms[i].contains(v)) break;
      lvl = i + 1;
    }
    L.level_of[x] = lvl;
  }
  return L;
}

std::vector<ElementIndex> linear_full_map(const BraceTable& A, const BraceTable& B,
                                          const FpMatrix& gamma) {
  std::vector<ElementIndex> fm(A.size());
  for (ElementIndex x = 0; x < A.size(); ++x)
    fm[x] = B.index_of(mat_vec(gamma, A.vector_of(x)));
  return fm;
}

bool full_map_is_iso(const BraceTable& A, const BraceTable& B,
                     const std::vector<ElementIndex>& fm) {
  const std::uint32_t N = A.size();
  for (ElementIndex a = 0; a < N; ++a)
    for (ElementIndex b = 0; b < N; ++b) {
      if (fm[A.add(a, b)] != B.add(fm[a], fm[b])) return false;
      if (fm[A.circle(a, b)] != B.circle(fm[a], fm[b])) return false;
    }
  return true;
}

struct IsoSearch {
  const BraceTable& A;
  const BraceTable& B;
  std::size_t n;
  std::uint32_t p;
  std::vector<std::size_t> order;                  // basis positions, deepest first
  std::vector<std::vector<ElementIndex>> cands;    // per basis position
  std::vector<ElementIndex> img;                   // image index per basis position
  std::vector<bool> assigned;                      // per basis position
  std::vector<std::size_t> assigned_pos;           // in assignment order
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  IsoSearch(const BraceTable& a, const BraceTable& b, std::uint64_t nb)
      : A(a), B(b), n(a.dim()), p(a.p()), img(n, 0), assigned(n, false), budget(nb) {}

  void spend(std::uint64_t amount) {
    nodes += amount;
    if (nodes > budget) throw TooLarge("isomorphism search exceeded node budget");
  }

  // Partial map applied to an element of the assigned coordinate span.
  ElementIndex phi(ElementIndex x) const {
    ElementIndex out = 0;
    for (std::size_t j : assigned_pos) {
      const std::uint16_t d = A.digit(x, j);
      if (d) out = B.add(out, B.scale(d, img[j]));
    }
    return out;
  }

  bool in_assigned_span(ElementIndex x) const {
    for (std::size_t j = 0; j < n; ++j)
      if (!assigned[j] && A.digit(x, j)) return false;
    return true;
  }

  // phi(lambda_a(e_j)) = lambda_phi(a)(phi(e_j)) for every a in the assigned
  // span and every assigned basis position j, skipping pairs whose lambda
  // image leaves the span (phi is not defined there yet).
  bool partial_compatible() {
    const std::size_t d = assigned_pos.size();
    std::uint64_t span = 1;
    for (std::size_t t = 0; t < d; ++t) span *= p;
    spend(span);

    std::vector<std::uint16_t> dig(d, 0);
    ElementIndex a = 0;
    while (true) {
      const ElementIndex pa = phi(a);
      for (std::size_t j : assigned_pos) {
        const ElementIndex t = A.lambda_apply(a, A.basis_element(j));
        if (!in_assigned_span(t)) continue;
        if (phi(t) != B.lambda_apply(pa, img[j])) return false;
      }
      // odometer over the assigned digits
      std::size_t s = 0;
      while (s < d) {
        const std::size_t j = assigned_pos[s];
        if (++dig[s] < p) {
          a += A.basis_element(j);
          break;
        }
        a -= ElementIndex((p - 1) * A.basis_element(j));
        dig[s] = 0;
        ++s;
      }
      if (s == d) break;
    }
    return true;
  }

  bool independent_with(ElementIndex candidate) const {
    FpMatrix rows(p, assigned_pos.size() + 1, n);
    std::size_t r = 0;
    for (std::size_t j : assigned_pos) {
      for (std::size_t c = 0; c < n; ++c) rows.at(r, c) = B.digit(img[j], c);
      ++r;
    }
    for (std::size_t c = 0; c < n; ++c) rows.at(r, c) = B.digit(candidate, c);
    return Subspace::from_rows(rows).dim() == assigned_pos.size() + 1;
  }

  bool dfs(std::size_t depth) {
    if (depth == n) return true;
    const std::size_t j = order[depth];
    for (ElementIndex cand : cands[j]) {
      spend(1);
      if (!independent_with(cand)) continue;
      img[j] = cand;
      assigned[j] = true;
      assigned_pos.push_back(j);
      if (partial_compatible() && dfs(depth + 1)) return true;
      assigned_pos.pop_back();
      assigned[j] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> brace_isomorphic(const BraceTable& A, const BraceTable& B,
                                           const IsoOptions& opts) {
  if (A.p() != B.p() || A.dim() != B.dim())
    throw DimensionMismatch("isomorphism search needs matching p and dimension");
  if (A.size() > 65536)
    throw TooLarge("isomorphism search capped at p^n <= 65536");
  if (invariant_fingerprint(A) != invariant_fingerprint(B)) return std::nullopt;

  const std::size_t n = A.dim();
  const LevelData LA = compute_levels(A);
  const LevelData LB = compute_levels(B);

  IsoSearch search(A, B, opts.node_budget);
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), std::size_t{0});
  std::vector<std::size_t> basis_level(n);
  for (std::size_t j = 0; j < n; ++j) basis_level[j] = LA.level_of[A.basis_element(j)];
  std::sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b) {
    if (basis_level[a] != basis_level[b]) return basis_level[a] > basis_level[b];
    return a < b;
  });
  search.cands.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (ElementIndex x = 1; x < B.size(); ++x)
      if (LB.level_of[x] == basis_level[j]) search.cands[j].push_back(x);

  if (!search.dfs(0)) return std::nullopt;

  IsoWitness w{{}, FpMatrix(A.p(), n, n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    w.images[A.basis_names()[j]] = search.img[j];
    for (std::size_t r = 0; r < n; ++r) w.gamma.at(r, j) = B.digit(search.img[j], r);
  }
  w.full_map = linear_full_map(A, B, w.gamma);
  if (!full_map_is_iso(A, B, w.full_map))
    throw RelationFailure("isomorphism witness failed full verification");
  return w;
}

bool is_iso_witness(const BraceTable& A, const BraceTable& B, const FpMatrix& gamma) {
  if (A.p() != B.p() || A.dim() != B.dim()) return false;
  if (gamma.rows != A.dim() || gamma.cols != A.dim() || gamma.p != A.p()) return false;
  if (!mat_invertible(gamma)) return false;
  return full_map_is_iso(A, B, linear_full_map(A, B, gamma));
}

}  // namespace braceforge
