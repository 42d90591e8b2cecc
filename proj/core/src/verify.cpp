#include "braceforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "braceforge/rng.hpp"

namespace braceforge {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  bool armed = false;
  Clock::time_point at{};

  static Deadline after_ms(std::uint64_t ms) {
    Deadline d;
    if (ms) {
      d.armed = true;
      d.at = Clock::now() + std::chrono::milliseconds(ms);
    }
    return d;
  }
  bool expired() const { return armed && Clock::now() >= at; }
};

// Full-mode scans run on three dense N x N tables (row x = the map x op -)
// so the inner loop is pure uint16 lookups.  Guarded to N <= 4096: beyond
// that the tables and the N^3 scan itself are out of reach anyway.
constexpr std::uint32_t kFullModeMaxSize = 4096;

struct OpTables {
  std::uint32_t N = 0;
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<std::uint16_t> circle, star, add;
  // Digit vectors packed one digit per byte; lets the scan add three vectors
  // with two SWAR adds instead of two table walks.  Needs n <= 8, p <= 127.
  std::vector<std::uint64_t> packed;
  bool has_packed = false;
  std::uint64_t bias = 0, high = 0;

  std::uint64_t padd(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t s = x + y;                     // byte sums <= 2(p-1) < 256
    std::uint64_t ge = ((s + bias) & high) >> 7; // byte >= p detector
    return s - ge * p;
  }
};

OpTables build_tables(const BraceTable& A) {
  OpTables T;
  T.N = A.size();
  T.p = A.p();
  T.n = A.dim();
  const std::uint32_t N = T.N, p = T.p;
  const std::size_t n = T.n;
  T.circle.resize(std::size_t(N) * N);
  T.star.resize(std::size_t(N) * N);
  T.add.resize(std::size_t(N) * N);

  for (std::uint32_t a = 0; a < N; ++a) {
    const std::uint16_t* M = A.lambda_raw(a);
    std::uint16_t* crow = T.circle.data() + std::size_t(a) * N;
    std::uint16_t* srow = T.star.data() + std::size_t(a) * N;
    std::uint16_t* arow = T.add.data() + std::size_t(a) * N;
    for (std::uint32_t b = 0; b < N; ++b) {
      std::uint32_t ci = 0, si = 0, ai = 0;
      for (std::size_t r = 0; r < n; ++r) {
        std::uint32_t acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += std::uint32_t(M[r * n + t]) * A.digit(b, t);
        const std::uint32_t lam = acc % p;
        const std::uint32_t da = A.digit(a, r), db = A.digit(b, r);
        ci = ci * p + (lam + da) % p;
        si = si * p + (lam + p - db) % p;
        ai = ai * p + (da + db) % p;
      }
      crow[b] = static_cast<std::uint16_t>(ci);
      srow[b] = static_cast<std::uint16_t>(si);
      arow[b] = static_cast<std::uint16_t>(ai);
    }
  }

  if (n <= 8 && p <= 127) {
    T.has_packed = true;
    T.packed.resize(N);
    for (std::uint32_t x = 0; x < N; ++x) {
      std::uint64_t w = 0;
      for (std::size_t j = 0; j < n; ++j) w |= std::uint64_t(A.digit(x, j)) << (8 * j);
      T.packed[x] = w;
    }
    for (std::size_t j = 0; j < n; ++j) {
      T.bias |= std::uint64_t(128 - p) << (8 * j);
      T.high |= std::uint64_t(0x80) << (8 * j);
    }
  }
  return T;
}

struct TripleWitness {
  std::uint32_t a, b, c;
};

// Law indices used by both scan paths.
enum : int { kAssoc = 0, kCompat = 1, kStarLaw1 = 2, kStarLaw2 = 3 };

struct ScanResult {
  std::optional<TripleWitness> witness[4];
  std::uint64_t triples = 0;
  bool hit_budget = false;

  void record(int law, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (!witness[law]) witness[law] = TripleWitness{a, b, c};
  }
};

template <bool UsePacked>
void scan_range(const OpTables& T, std::uint32_t a0, std::uint32_t a1,
                const Deadline& dl, ScanResult& out) {
  const std::uint32_t N = T.N;
  const std::uint16_t* C = T.circle.data();
  const std::uint16_t* S = T.star.data();
  const std::uint16_t* AD = T.add.data();
  const std::uint64_t* PV = T.packed.data();
  std::vector<std::uint16_t> Ta(N);  // Ta[x] = a + (a o x)

  for (std::uint32_t a = a0; a < a1; ++a) {
    const std::uint16_t* crow_a = C + std::size_t(a) * N;
    const std::uint16_t* srow_a = S + std::size_t(a) * N;
    const std::uint16_t* arow_a = AD + std::size_t(a) * N;
    for (std::uint32_t x = 0; x < N; ++x) Ta[x] = arow_a[crow_a[x]];

    for (std::uint32_t b = 0; b < N; ++b) {
      if (dl.armed && (b & 63u) == 0 && dl.expired()) {
        out.hit_budget = true;
        return;
      }
      const std::uint32_t ab = crow_a[b];   // a o b
      const std::uint32_t sab = srow_a[b];  // a * b
      const std::uint16_t* crow_b = C + std::size_t(b) * N;
      const std::uint16_t* srow_b = S + std::size_t(b) * N;
      const std::uint16_t* arow_b = AD + std::size_t(b) * N;
      const std::uint16_t* crow_ab = C + std::size_t(ab) * N;
      const std::uint16_t* srow_ab = S + std::size_t(ab) * N;
      const std::uint16_t* arow_cab = AD + std::size_t(ab) * N;
      const std::uint16_t* arow_sab = AD + std::size_t(sab) * N;

      for (std::uint32_t c = 0; c < N; ++c) {
        const std::uint16_t bc = crow_b[c];
        const std::uint16_t addbc = arow_b[c];
        const std::uint16_t ac = crow_a[c];
        const std::uint16_t sac = srow_a[c];
        const std::uint16_t sbc = srow_b[c];
        // (a o b) o c = a o (b o c)
        unsigned bad = static_cast<unsigned>(crow_ab[c] != crow_a[bc]);
        // a o (b+c) + a = (a o b) + (a o c)
        bad |= static_cast<unsigned>(Ta[addbc] != arow_cab[ac]);
        // a*(b+c) = a*b + a*c
        bad |= static_cast<unsigned>(srow_a[addbc] != arow_sab[sac]);
        // (a+b+a*b)*c = a*c + b*c + a*(b*c), with a+b+a*b = a o b
        if constexpr (UsePacked) {
          const std::uint64_t rhs = T.padd(T.padd(PV[sac], PV[sbc]), PV[srow_a[sbc]]);
          bad |= static_cast<unsigned>(PV[srow_ab[c]] != rhs);
        } else {
          const std::uint16_t rhs =
              AD[std::size_t(AD[std::size_t(sac) * N + sbc]) * N + srow_a[sbc]];
          bad |= static_cast<unsigned>(srow_ab[c] != rhs);
        }
        if (bad) {
          if (crow_ab[c] != crow_a[bc]) out.record(kAssoc, a, b, c);
          if (Ta[addbc] != arow_cab[ac]) out.record(kCompat, a, b, c);
          const std::uint16_t rhs1 =
              AD[std::size_t(AD[std::size_t(sac) * N + sbc]) * N + srow_a[sbc]];
          if (srow_ab[c] != rhs1) out.record(kStarLaw1, a, b, c);
          if (srow_a[addbc] != arow_sab[sac]) out.record(kStarLaw2, a, b, c);
        }
      }
      out.triples += N;
    }
  }
}

ScanResult scan_full(const OpTables& T, unsigned threads, const Deadline& dl) {
  threads = std::max(1u, threads);
  threads = std::min(threads, T.N);
  std::vector<ScanResult> parts(threads);
  auto run = [&](unsigned t, std::uint32_t lo, std::uint32_t hi) {
    if (T.has_packed)
      scan_range<true>(T, lo, hi, dl, parts[t]);
    else
      scan_range<false>(T, lo, hi, dl, parts[t]);
  };
  if (threads == 1) {
    run(0, 0, T.N);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const auto lo = static_cast<std::uint32_t>(std::uint64_t(T.N) * t / threads);
      const auto hi = static_cast<std::uint32_t>(std::uint64_t(T.N) * (t + 1) / threads);
      workers.emplace_back(run, t, lo, hi);
    }
    for (auto& w : workers) w.join();
  }
  // Deterministic merge: smallest witness triple wins, regardless of which
  // worker found it.
  ScanResult merged;
  for (const auto& r : parts) {
    merged.triples += r.triples;
    merged.hit_budget = merged.hit_budget || r.hit_budget;
    for (int k = 0; k < 4; ++k) {
      if (!r.witness[k]) continue;
      if (!merged.witness[k]) {
        merged.witness[k] = r.witness[k];
        continue;
      }
      const auto& m = *merged.witness[k];
      const auto& c = *r.witness[k];
      if (std::tie(c.a, c.b, c.c) < std::tie(m.a, m.b, m.c)) merged.witness[k] = r.witness[k];
    }
  }
  return merged;
}

ScanResult scan_sampled(const BraceTable& A, std::uint64_t count, std::uint64_t seed,
                        const Deadline& dl) {
  ScanResult out;
  Rng rng(seed);
  const std::uint32_t N = A.size();
  for (std::uint64_t t = 0; t < count; ++t) {
    if (dl.armed && (t & 1023u) == 0 && dl.expired()) {
      out.hit_budget = true;
      break;
    }
    const ElementIndex a = rng.below(N), b = rng.below(N), c = rng.below(N);
    if (A.circle(A.circle(a, b), c) != A.circle(a, A.circle(b, c))) out.record(kAssoc, a, b, c);
    if (A.add(A.circle(a, A.add(b, c)), a) != A.add(A.circle(a, b), A.circle(a, c)))
      out.record(kCompat, a, b, c);
    const ElementIndex sbc = A.star(b, c);
    if (A.star(A.circle(a, b), c) != A.add(A.add(A.star(a, c), sbc), A.star(a, sbc)))
      out.record(kStarLaw1, a, b, c);
    if (A.star(a, A.add(b, c)) != A.add(A.star(a, b), A.star(a, c)))
      out.record(kStarLaw2, a, b, c);
    ++out.triples;
  }
  return out;
}

std::string triple_witness(const TripleWitness& w) {
  return "(a,b,c)=(" + std::to_string(w.a) + "," + std::to_string(w.b) + "," +
         std::to_string(w.c) + ")";
}

void add_law_entry(CheckReport& rep, const char* name, const std::optional<TripleWitness>& w) {
  if (w)
    rep.add_fail(name, triple_witness(*w));
  else
    rep.add_pass(name);
}

}  // namespace

CheckReport verify_brace_axioms(const BraceTable& A, const VerifyOptions& opts) {
  CheckReport rep;
  const Deadline dl = Deadline::after_ms(opts.time_budget_ms);
  const std::uint32_t N = A.size();

  // Element vectors are digit strings mod p, so (A,+) is abelian of exponent
  // p by construction; recorded for completeness of the axiom list.
  rep.add_pass("additive group (structural)");

  bool id_ok = true, inv_ok = true;
  std::string id_wit, inv_wit;
  auto check_element = [&](ElementIndex a) {
    if (id_ok && (A.circle(0, a) != a || A.circle(a, 0) != a)) {
      id_ok = false;
      id_wit = "a=" + std::to_string(a);
    }
    if (inv_ok) {
      const ElementIndex b = A.circle_inv(a);
      if (A.circle(a, b) != 0 || A.circle(b, a) != 0) {
        inv_ok = false;
        inv_wit = "a=" + std::to_string(a);
      }
    }
  };
  if (N <= 65536) {
    for (ElementIndex a = 0; a < N; ++a) check_element(a);
  } else {
    Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < 65536; ++t) check_element(rng.below(N));
  }
  if (id_ok)
    rep.add_pass("circle identity");
  else
    rep.add_fail("circle identity", id_wit);
  if (inv_ok)
    rep.add_pass("circle inverses");
  else
    rep.add_fail("circle inverses", inv_wit);

  ScanResult scan;
  if (opts.mode == VerifyMode::Full) {
    if (N > kFullModeMaxSize)
      throw TooLarge("full axiom scan needs p^n <= " + std::to_string(kFullModeMaxSize) +
                     "; use sampled mode");
    const OpTables T = build_tables(A);
    scan = scan_full(T, opts.threads, dl);
  } else {
    scan = scan_sampled(A, opts.samples, opts.seed, dl);
    rep.seed = opts.seed;
    rep.samples = opts.samples;
  }

  add_law_entry(rep, "circle associativity", scan.witness[kAssoc]);
  add_law_entry(rep, "compatibility", scan.witness[kCompat]);
  add_law_entry(rep, "star law (a+b+a*b)*c", scan.witness[kStarLaw1]);
  add_law_entry(rep, "star law a*(b+c)", scan.witness[kStarLaw2]);
  rep.items_checked = scan.triples;
  rep.partial = scan.hit_budget;
  return rep;
}

CheckReport verify_fp_linearity(const BraceTable& A) {
  CheckReport rep;
  const std::uint32_t N = A.size();
  const std::uint32_t p = A.p();
  std::uint64_t checked = 0;
  for (ElementIndex a = 0; a < N; ++a) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const ElementIndex b = A.basis_element(j);
      const ElementIndex sab = A.star(a, b);
      for (std::uint32_t alpha = 0; alpha < p; ++alpha) {
        ++checked;
        if (A.star(a, A.scale(alpha, b)) != A.scale(alpha, sab)) {
          rep.add_fail("Fp-linearity a*(alpha b) = alpha(a*b)",
                       "(a,basis,alpha)=(" + std::to_string(a) + "," + std::to_string(j) +
                           "," + std::to_string(alpha) + ")");
          rep.items_checked = checked;
          return rep;
        }
      }
    }
  }
  rep.add_pass("Fp-linearity a*(alpha b) = alpha(a*b)");
  rep.items_checked = checked;
  return rep;
}

CheckReport verify_lambda_homomorphism(const BraceTable& A, const VerifyOptions& opts) {
  CheckReport rep;
  const Deadline dl = Deadline::after_ms(opts.time_budget_ms);
  const std::uint32_t N = A.size();
  const std::size_t n = A.dim();
  const std::uint32_t p = A.p();

  std::optional<std::pair<ElementIndex, ElementIndex>> witness;
  auto check_pair = [&](ElementIndex a, ElementIndex b) {
    const std::uint16_t* M = A.lambda_raw(A.circle(a, b));
    const std::uint16_t* Ma = A.lambda_raw(a);
    const std::uint16_t* Mb = A.lambda_raw(b);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += std::uint32_t(Ma[r * n + t]) * Mb[t * n + c];
        if (acc % p != M[r * n + c]) {
          if (!witness) witness = {a, b};
          return;
        }
      }
  };

  std::uint64_t pairs = 0;
  bool hit_budget = false;
  if (opts.mode == VerifyMode::Full) {
    if (N > 8192)
      throw TooLarge("full homomorphism scan needs p^n <= 8192; use sampled mode");
    for (ElementIndex a = 0; a < N && !hit_budget; ++a) {
      if (dl.expired()) {
        hit_budget = true;
        break;
      }
      for (ElementIndex b = 0; b < N; ++b) check_pair(a, b);
      pairs += N;
    }
  } else {
    Rng rng(opts.seed);
    for (std::uint64_t t = 0; t < opts.samples; ++t) {
      if (dl.armed && (t & 1023u) == 0 && dl.expired()) {
        hit_budget = true;
        break;
      }
      check_pair(rng.below(N), rng.below(N));
      ++pairs;
    }
    rep.seed = opts.seed;
    rep.samples = opts.samples;
  }

  if (witness)
    rep.add_fail("lambda homomorphism",
                 "(a,b)=(" + std::to_string(witness->first) + "," +
                     std::to_string(witness->second) + ")");
  else
    rep.add_pass("lambda homomorphism");
  rep.items_checked = pairs;
  rep.partial = hit_budget;
  return rep;
}

}  // namespace braceforge
