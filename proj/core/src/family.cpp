#include "braceforge/family.hpp"

#include <string>
#include <unordered_set>

namespace braceforge {

namespace {

std::uint16_t reduce(std::int64_t v, std::uint16_t p) {
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint16_t>(r);
}

std::string mat_key(const FpMatrix& m) {
  std::string key;
  key.reserve(m.a.size() * 2);
  for (std::uint16_t v : m.a) {
    key.push_back(static_cast<char>(v & 0xFF));
    key.push_back(static_cast<char>(v >> 8));
  }
  return key;
}

std::uint32_t nf_index(const NormalForm& nf, std::uint16_t p) {
  return ((static_cast<std::uint32_t>(nf.alpha) * p + nf.beta) * p + nf.gamma) * p +
         nf.xi;
}

}  // namespace

void validate_params(const FamilyParams& params) {
  Prime prime(params.p);  // throws InvalidParams if not prime
  if (params.p <= 3)
    throw InvalidParams("family construction requires p > 3");
  if (params.y % params.p == 0)
    throw InvalidParams("family construction requires y != 0");
}

FamilyParams make_family_params(std::uint32_t p, std::int64_t y, std::int64_t i,
                                std::int64_t k) {
  Prime prime(p);
  FamilyParams params{prime.value(), reduce(y, prime.value()),
                      reduce(i, prime.value()), reduce(k, prime.value())};
  validate_params(params);
  return params;
}

GeneratorMatrices generator_matrices(const FamilyParams& params) {
  validate_params(params);
  const std::uint16_t p = params.p;
  const int y = params.y;
  const int i = params.i;
  const int k = params.k;
  const int h = inv_mod(2, p) * y % p;  // 2^{-1} y

  GeneratorMatrices m;
  m.p = p;
  // Basis order e1 = 1, e2 = R', e3 = Q', e4 = P', e5 = S'; columns are the
  // images of the basis vectors.
  m.M_P = FpMatrix::from_rows(p, {{1, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0},
                                  {0, 0, 1, 0, 0},
                                  {1, 0, 0, 1, 0},
                                  {0, y, 0, 0, 1}});
  m.M_Q = FpMatrix::from_rows(p, {{1, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0},
                                  {1, 0, 1, 0, 0},
                                  {0, 0, 0, 1, 0},
                                  {0, h, -y, 0, 1}});
  m.M_R = FpMatrix::from_rows(p, {{1, 0, 0, 0, 0},
                                  {1, 1, 0, 0, 0},
                                  {0, 0, 1, 0, 0},
                                  {0, i, 0, 1, 0},
                                  {0, k, h, y, 1}});
  m.M_S = FpMatrix::from_rows(p, {{1, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0},
                                  {0, -1, 1, 0, 0},
                                  {0, 1, -1, 1, 0},
                                  {1, -h, 0, 0, 1}});
  return m;
}

CheckReport verify_generator_relations(const GeneratorMatrices& mats, Prime p) {
  CheckReport rep;
  const FpMatrix &P = mats.M_P, &Q = mats.M_Q, &R = mats.M_R, &S = mats.M_S;

  auto check = [&](const char* name, const FpMatrix& lhs, const FpMatrix& rhs) {
    if (lhs == rhs)
      rep.add_pass(name);
    else
      rep.add_fail(name, "matrix identity fails");
    ++rep.items_checked;
  };

  check("M_Q M_S = M_S M_Q M_P", mat_mul(Q, S), mat_mul(mat_mul(S, Q), P));
  check("M_Q M_R = M_R M_Q", mat_mul(Q, R), mat_mul(R, Q));
  check("M_P M_S = M_S M_P", mat_mul(P, S), mat_mul(S, P));
  check("M_P M_Q = M_Q M_P", mat_mul(P, Q), mat_mul(Q, P));
  check("M_P M_R = M_R M_P", mat_mul(P, R), mat_mul(R, P));
  check("M_R M_S = M_S M_R M_Q", mat_mul(R, S), mat_mul(mat_mul(S, R), Q));

  const FpMatrix id = FpMatrix::identity(mats.p, 5);
  check("M_P^p = Id", mat_pow(P, p.value()), id);
  check("M_Q^p = Id", mat_pow(Q, p.value()), id);
  check("M_R^p = Id", mat_pow(R, p.value()), id);
  check("M_S^p = Id", mat_pow(S, p.value()), id);
  return rep;
}

std::vector<FpMatrix> enumerate_group(const GeneratorMatrices& mats, Prime p) {
  const std::uint16_t pp = p.value();
  const std::uint32_t size = static_cast<std::uint32_t>(pp) * pp * pp * pp;

  // Nested partial products: one matrix multiply per element overall.
  std::vector<FpMatrix> out(size, FpMatrix());
  std::unordered_set<std::string> seen;
  seen.reserve(size * 2);

  FpMatrix mr = FpMatrix::identity(pp, 5);
  for (std::uint16_t alpha = 0; alpha < pp; ++alpha) {
    FpMatrix mq = mr;
    for (std::uint16_t beta = 0; beta < pp; ++beta) {
      FpMatrix mp = mq;
      for (std::uint16_t gamma = 0; gamma < pp; ++gamma) {
        FpMatrix ms = mp;
        for (std::uint16_t xi = 0; xi < pp; ++xi) {
          std::uint32_t idx = nf_index({alpha, beta, gamma, xi}, pp);
          if (!seen.insert(mat_key(ms)).second)
            throw RelationFailure(
                "duplicate group element at normal form index " +
                std::to_string(idx) + "; representation not faithful");
          out[idx] = ms;
          if (xi + 1 < pp) ms = mat_mul(ms, mats.M_S);
        }
        if (gamma + 1 < pp) mp = mat_mul(mp, mats.M_P);
      }
      if (beta + 1 < pp) mq = mat_mul(mq, mats.M_Q);
    }
    if (alpha + 1 < pp) mr = mat_mul(mr, mats.M_R);
  }
  return out;
}

FpVector cocycle_f(const GeneratorMatrices& mats, const NormalForm& nf) {
  FpMatrix m = mat_mul(
      mat_mul(mat_pow(mats.M_R, nf.alpha), mat_pow(mats.M_Q, nf.beta)),
      mat_mul(mat_pow(mats.M_P, nf.gamma), mat_pow(mats.M_S, nf.xi)));
  FpVector f(mats.p, 4);
  for (std::size_t r = 0; r < 4; ++r) f[r] = m.at(r + 1, 0);
  // e1's own coordinate row is m(0,0) = 1; subtracting 1 removes it and the
  // (R',Q',P',S') rows pass through unchanged.
  return f;
}

CheckReport verify_cocycle(const GeneratorMatrices& mats, Prime p) {
  CheckReport rep;
  const std::uint16_t pp = p.value();
  const std::uint32_t size = static_cast<std::uint32_t>(pp) * pp * pp * pp;
  std::vector<FpMatrix> group = enumerate_group(mats, p);

  // f(g) for every element, plus bijectivity via distinct indices.
  std::vector<std::uint32_t> fidx(size);
  std::vector<bool> hit(size, false);
  bool bijective = true;
  std::uint32_t collision = 0;
  for (std::uint32_t g = 0; g < size; ++g) {
    const FpMatrix& m = group[g];
    std::uint32_t v = 0;
    for (std::size_t r = 1; r < 5; ++r) v = v * pp + m.at(r, 0);
    fidx[g] = v;
    if (hit[v]) {
      bijective = false;
      collision = g;
    }
    hit[v] = true;
  }
  if (bijective)
    rep.add_pass("f bijective");
  else
    rep.add_fail("f bijective",
                 "duplicate f value at normal-form index " + std::to_string(collision));

  // Cocycle identity f(g.h) = f(g) + lambda_g(f(h)) for all pairs, computed
  // on the matrix side: column 1 of M_g M_h equals M_g (column 1 of M_h).
  bool holds = true;
  std::string witness;
  for (std::uint32_t g = 0; g < size && holds; ++g) {
    const FpMatrix& mg = group[g];
    for (std::uint32_t h2 = 0; h2 < size; ++h2) {
      const FpMatrix& mh = group[h2];
      // lhs = f(g.h): rows 1..4 of M_g * col1(M_h)
      // rhs = f(g) + B_g * f(h) with B_g the 4x4 block of M_g
      bool same = true;
      for (std::size_t r = 1; r < 5; ++r) {
        std::uint32_t lhs = 0;
        for (std::size_t c = 0; c < 5; ++c) lhs += mg.at(r, c) * mh.at(c, 0);
        std::uint32_t rhs = mg.at(r, 0);  // f(g) component + B_g f(h)
        for (std::size_t c = 1; c < 5; ++c) rhs += mg.at(r, c) * mh.at(c, 0);
        if (lhs % pp != rhs % pp) {
          same = false;
          break;
        }
      }
      ++rep.items_checked;
      if (!same) {
        holds = false;
        witness = "(g,h) = (" + std::to_string(g) + "," + std::to_string(h2) + ")";
        break;
      }
    }
  }
  if (holds)
    rep.add_pass("cocycle identity");
  else
    rep.add_fail("cocycle identity", witness);
  return rep;
}

BraceTable build_brace(const FamilyParams& params) {
  validate_params(params);
  const std::uint16_t p = params.p;
  const std::uint32_t size = static_cast<std::uint32_t>(p) * p * p * p;
  GeneratorMatrices mats = generator_matrices(params);
  std::vector<FpMatrix> group = enumerate_group(mats, Prime(p));

  std::vector<FpMatrix> lambda(size, FpMatrix());
  std::vector<bool> filled(size, false);
  for (std::uint32_t g = 0; g < size; ++g) {
    const FpMatrix& m = group[g];
    if (m.at(0, 0) != 1 || m.at(0, 1) || m.at(0, 2) || m.at(0, 3) || m.at(0, 4))
      throw RelationFailure("group matrix is not affine (first row != e1)");
    std::uint32_t idx = 0;
    for (std::size_t r = 1; r < 5; ++r) idx = idx * p + m.at(r, 0);
    if (filled[idx])
      throw RelationFailure("cocycle f not injective; cannot index the brace");
    filled[idx] = true;
    FpMatrix block(p, 4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) block.at(r, c) = m.at(r + 1, c + 1);
    lambda[idx] = std::move(block);
  }
  return BraceTable(Prime(p), 4, {"R", "Q", "P", "S"}, std::move(lambda), params);
}

ElementIndex family_R(const BraceTable& A) { return A.basis_element(0); }
ElementIndex family_Q(const BraceTable& A) { return A.basis_element(1); }
ElementIndex family_P(const BraceTable& A) { return A.basis_element(2); }
ElementIndex family_S(const BraceTable& A) { return A.basis_element(3); }

CheckReport verify_multiplicative_table(const BraceTable& A,
                                        const FamilyParams& params) {
  CheckReport rep;
  const std::uint16_t p = A.p();
  // Tables without provenance (hand-assembled, loaded from file) are fair
  // game — the whole point is to test whether they BEHAVE like the member
  // with these params.  A table that carries different params is a caller
  // mix-up, not a mathematical mismatch.
  if (A.dim() != 4 || p != params.p)
    throw PreconditionViolated("table shape does not fit the family");
  if (A.meta() && !(*A.meta() == params))
    throw PreconditionViolated("brace was built from different params");
  const int y = params.y;
  const int h = inv_mod(2, p) * y % p;  // 2^{-1} y

  const ElementIndex R = family_R(A), Q = family_Q(A), P = family_P(A),
                     S = family_S(A);
  auto vec = [&](int cr, int cq, int cp, int cs) {
    return A.index_of(FpVector(p, {cr, cq, cp, cs}));
  };

  struct Entry {
    const char* name;
    ElementIndex a, b, expect;
  };
  const Entry table[] = {
      {"P*P = 0", P, P, vec(0, 0, 0, 0)},
      {"P*Q = 0", P, Q, vec(0, 0, 0, 0)},
      {"P*R = yS", P, R, vec(0, 0, 0, y)},
      {"P*S = 0", P, S, vec(0, 0, 0, 0)},
      {"Q*P = 0", Q, P, vec(0, 0, 0, 0)},
      {"Q*Q = -yS", Q, Q, vec(0, 0, 0, -y)},
      {"Q*R = 2^-1 yS", Q, R, vec(0, 0, 0, h)},
      {"Q*S = 0", Q, S, vec(0, 0, 0, 0)},
      {"R*P = yS", R, P, vec(0, 0, 0, y)},
      {"R*Q = 2^-1 yS", R, Q, vec(0, 0, 0, h)},
      {"R*R = iP + kS", R, R, vec(0, 0, params.i, params.k)},
      {"R*S = 0", R, S, vec(0, 0, 0, 0)},
      {"S*P = 0", S, P, vec(0, 0, 0, 0)},
      {"S*Q = -P", S, Q, vec(0, 0, -1, 0)},
      {"S*R = -Q + P - 2^-1 yS", S, R, vec(0, -1, 1, -h)},
      {"S*S = 0", S, S, vec(0, 0, 0, 0)},
  };
  for (const Entry& e : table) {
    ElementIndex got = A.star(e.a, e.b);
    if (got == e.expect)
      rep.add_pass(e.name);
    else
      rep.add_fail(e.name, "got index " + std::to_string(got) + ", expected " +
                               std::to_string(e.expect));
    ++rep.items_checked;
  }
  return rep;
}

NormalForm normal_form(const BraceTable& A, ElementIndex a) {
  A.check_index(a);
  if (A.dim() != 4 || !A.meta())
    throw PreconditionViolated("normal forms require a family-built brace");
  const std::uint16_t p = A.p();
  const ElementIndex R = family_R(A), Q = family_Q(A);

  NormalForm nf;
  // Every lambda fixes the R-coordinate, so left-multiplying by R^{p-alpha}
  // clears it; on span{Q,P,S} the same holds for the Q-coordinate under
  // powers of Q; what remains is P^gamma . S^xi = gamma P + xi S.
  nf.alpha = A.digit(a, 0);
  ElementIndex a1 = A.circle(A.circle_pow(R, p - nf.alpha), a);
  nf.beta = A.digit(a1, 1);
  ElementIndex a2 = A.circle(A.circle_pow(Q, p - nf.beta), a1);
  nf.gamma = A.digit(a2, 2);
  nf.xi = A.digit(a2, 3);
  if (A.digit(a1, 0) != 0 || A.digit(a2, 0) != 0 || A.digit(a2, 1) != 0)
    throw RelationFailure("normal-form peeling failed to clear coordinates");
  return nf;
}

bool witness_not_right_nilpotent(const BraceTable& A, const FamilyParams& params) {
  const ElementIndex R = family_R(A), Q = family_Q(A), S = family_S(A);
  // (S*Q) * ((-1/y) R) = S
  std::uint32_t c = A.p() - inv_mod(params.y, A.p());  // -1/y mod p
  ElementIndex u = A.scale(c, R);
  return A.star(A.star(S, Q), u) == S;
}

CheckReport verify_presentation_constraints(const BraceTable& A) {
  CheckReport rep;
  const ElementIndex R = family_R(A), Q = family_Q(A), P = family_P(A),
                     S = family_S(A);
  const ElementIndex gens[] = {P, Q, R, S};
  auto c2 = [&](ElementIndex a, ElementIndex b) { return A.circle(a, b); };
  auto c3 = [&](ElementIndex a, ElementIndex b, ElementIndex c) {
    return A.circle(A.circle(a, b), c);
  };

  struct Rel {
    const char* name;
    ElementIndex w1, w2;
  };
  const Rel rels[] = {
      {"Q.S = S.Q.P", c2(Q, S), c3(S, Q, P)},
      {"Q.R = R.Q", c2(Q, R), c2(R, Q)},
      {"P.S = S.P", c2(P, S), c2(S, P)},
      {"P.Q = Q.P", c2(P, Q), c2(Q, P)},
      {"P.R = R.P", c2(P, R), c2(R, P)},
      {"R.S = S.R.Q", c2(R, S), c3(S, R, Q)},
      {"P^p = 0", A.circle_pow(P, A.p()), 0},
      {"Q^p = 0", A.circle_pow(Q, A.p()), 0},
      {"R^p = 0", A.circle_pow(R, A.p()), 0},
      {"S^p = 0", A.circle_pow(S, A.p()), 0},
  };
  for (const Rel& rel : rels) {
    if (rel.w1 == rel.w2)
      rep.add_pass(std::string(rel.name) + " (elements)");
    else
      rep.add_fail(std::string(rel.name) + " (elements)",
                   std::to_string(rel.w1) + " != " + std::to_string(rel.w2));
    bool stars = true;
    for (ElementIndex g : gens)
      if (A.star(rel.w1, g) != A.star(rel.w2, g)) stars = false;
    if (stars)
      rep.add_pass(std::string(rel.name) + " (star consequences)");
    else
      rep.add_fail(std::string(rel.name) + " (star consequences)",
                   "star(w1, g) != star(w2, g) for some generator g");
    rep.items_checked += 1 + 4;
  }
  return rep;
}

}  // namespace braceforge
