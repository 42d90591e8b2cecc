#include "braceforge/ideals.hpp"

#include <algorithm>

#include "braceforge/chains.hpp"

namespace braceforge {

namespace {

constexpr std::uint64_t kMaxSubspaces = 1000000;

// Free (non-forced) entries of an RREF matrix with the given pivot columns:
// row r may hold arbitrary values at non-pivot columns right of its pivot.
std::size_t free_slot_count(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::size_t k = pivots.size(), total = 0;
  for (std::size_t r = 0; r < k; ++r)
    total += (n - 1 - pivots[r]) - (k - 1 - r);
  return total;
}

template <typename Fn>
void for_each_pivot_pattern(std::size_t n, Fn&& fn) {
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t r = 0; r < k; ++r) pivots[r] = r;
    while (true) {
      fn(pivots);
      if (k == 0) break;
      // next k-combination of {0..n-1} in lexicographic order
      std::size_t r = k;
      while (r > 0 && pivots[r - 1] == n - (k - r) - 1) --r;
      if (r == 0) break;
      ++pivots[r - 1];
      for (std::size_t j = r; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

}  // namespace

std::uint64_t count_subspaces(const Prime& p, std::size_t n) {
  std::uint64_t total = 0;
  bool saturated = false;
  for_each_pivot_pattern(n, [&](const std::vector<std::size_t>& pivots) {
    if (saturated) return;
    std::uint64_t cnt = 1;
    for (std::size_t j = free_slot_count(pivots, n); j > 0; --j) {
      if (cnt > UINT64_MAX / p.value()) {
        saturated = true;
        return;
      }
      cnt *= p.value();
    }
    if (total > UINT64_MAX - cnt)
      saturated = true;
    else
      total += cnt;
  });
  return saturated ? UINT64_MAX : total;
}

std::vector<Subspace> enumerate_subspaces(const Prime& p, std::size_t n) {
  if (n == 0) throw InvalidParams("ambient dimension must be positive");
  const std::uint64_t total = count_subspaces(p, n);
  if (total > kMaxSubspaces)
    throw TooLarge("subspace count " + std::to_string(total) + " exceeds " +
                   std::to_string(kMaxSubspaces));

  std::vector<Subspace> out;
  out.reserve(total);
  for_each_pivot_pattern(n, [&](const std::vector<std::size_t>& pivots) {
    const std::size_t k = pivots.size();
    // slot (row, col) list in a fixed order so fillings enumerate canonically
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
          slots.emplace_back(r, c);

    FpMatrix m(p.value(), k, n);
    for (std::size_t r = 0; r < k; ++r) m.at(r, pivots[r]) = 1;
    std::vector<std::uint16_t> fill(slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s)
        m.at(slots[s].first, slots[s].second) = fill[s];
      out.push_back(Subspace::from_rows(m));
      // odometer over the fill values
      std::size_t s = 0;
      while (s < fill.size()) {
        if (++fill[s] < p.value()) break;
        fill[s] = 0;
        ++s;
      }
      if (s == fill.size()) break;
    }
  });
  return out;
}

bool is_ideal(const BraceTable& A, const Subspace& V) {
  if (V.is_zero()) return true;
  const std::uint32_t N = A.size();
  std::vector<ElementIndex> vbasis;
  for (std::size_t r = 0; r < V.dim(); ++r) {
    FpVector row(A.p(), V.ambient_dim());
    for (std::size_t c = 0; c < V.ambient_dim(); ++c) row.c[c] = V.basis().at(r, c);
    vbasis.push_back(A.index_of(row));
  }
  // A*V <= V: star is right-linear, so the right factor may run over a basis.
  for (ElementIndex a = 0; a < N; ++a)
    for (ElementIndex b : vbasis)
      if (!V.contains(A.vector_of(A.star(a, b)))) return false;
  // V*A <= V: left factor must run over every element of V.
  std::vector<FpVector> velems = V.elements();
  for (const FpVector& vv : velems) {
    const ElementIndex v = A.index_of(vv);
    for (std::size_t t = 0; t < A.dim(); ++t)
      if (!V.contains(A.vector_of(A.star(v, A.basis_element(t))))) return false;
  }
  return true;
}

std::vector<Ideal> all_ideals(const BraceTable& A) {
  std::vector<Ideal> out;
  for (Subspace& V : enumerate_subspaces(Prime(A.p()), A.dim()))
    if (is_ideal(A, V)) out.push_back(Ideal{std::move(V)});
  return out;
}

Subspace ideal_product(const BraceTable& A, const Subspace& I, const Subspace& J) {
  return star_span(A, I, J);
}

bool is_prime(const BraceTable& A) {
  const std::vector<Ideal> ideals = all_ideals(A);
  for (const Ideal& I : ideals) {
    if (I.space.is_zero()) continue;
    for (const Ideal& J : ideals) {
      if (J.space.is_zero()) continue;
      if (ideal_product(A, I.space, J.space).is_zero()) return false;
    }
  }
  return true;
}

std::vector<ElementIndex> circle_generators(const BraceTable& A) {
  const std::uint32_t N = A.size();
  std::vector<char> in_subgroup(N, 0);
  in_subgroup[0] = 1;
  std::vector<ElementIndex> members{0};
  std::vector<ElementIndex> gens;
  for (ElementIndex x = 1; x < N; ++x) {
    if (in_subgroup[x]) continue;
    gens.push_back(x);
    // close members under right-multiplication by the generators
    std::vector<ElementIndex> frontier{x};
    in_subgroup[x] = 1;
    members.push_back(x);
    // products of old members with x seed the frontier as well
    const std::size_t old_count = members.size() - 1;
    for (std::size_t m = 0; m < old_count; ++m) {
      const ElementIndex t = A.circle(members[m], x);
      if (!in_subgroup[t]) {
        in_subgroup[t] = 1;
        members.push_back(t);
        frontier.push_back(t);
      }
    }
    while (!frontier.empty()) {
      const ElementIndex f = frontier.back();
      frontier.pop_back();
      for (ElementIndex g : gens) {
        for (ElementIndex t : {A.circle(f, g), A.circle(g, f)}) {
          if (!in_subgroup[t]) {
            in_subgroup[t] = 1;
            members.push_back(t);
            frontier.push_back(t);
          }
        }
      }
    }
  }
  return gens;
}

CenterResult circle_center(const BraceTable& A) {
  const std::vector<ElementIndex> gens = circle_generators(A);
  CenterResult out;
  for (ElementIndex c = 0; c < A.size(); ++c) {
    bool central = true;
    for (ElementIndex g : gens)
      if (A.circle(c, g) != A.circle(g, c)) {
        central = false;
        break;
      }
    if (central) out.elements.push_back(c);
  }
  std::vector<FpVector> vecs;
  vecs.reserve(out.elements.size());
  for (ElementIndex c : out.elements) vecs.push_back(A.vector_of(c));
  Subspace span = Subspace::from_vectors(A.p(), A.dim(), vecs);
  std::uint64_t span_size = 1;
  for (std::size_t j = 0; j < span.dim(); ++j) span_size *= A.p();
  if (span_size == out.elements.size()) out.space = span;
  return out;
}

const char* group_class_name(GroupClass g) {
  switch (g) {
    case GroupClass::Abelian: return "abelian";
    case GroupClass::XIV: return "XIV";
    case GroupClass::XV: return "XV";
    case GroupClass::Other: return "other";
  }
  return "other";
}

GroupClass identify_group(const BraceTable& A) {
  if (A.dim() != 4)
    throw WrongCardinality("group identification needs |A| = p^4, got p^" +
                           std::to_string(A.dim()));
  const std::uint32_t p = A.p();
  for (ElementIndex x = 0; x < A.size(); ++x)
    if (A.circle_pow(x, p) != 0) return GroupClass::Other;

  const std::vector<ElementIndex> gens = circle_generators(A);
  bool abelian = true;
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (A.circle(gens[i], gens[j]) != A.circle(gens[j], gens[i])) {
        abelian = false;
        break;
      }
  if (abelian) return GroupClass::Abelian;

  const std::size_t center = circle_center(A).elements.size();
  if (center == std::size_t(p) * p) return GroupClass::XIV;
  if (center == p) return GroupClass::XV;
  return GroupClass::Other;
}

}  // namespace braceforge
