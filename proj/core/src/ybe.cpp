#include "braceforge/ybe.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <thread>
#include <tuple>

#include "braceforge/rng.hpp"

namespace braceforge {

namespace {

constexpr std::uint32_t kPrecomputeMaxSize = 65536;
constexpr std::uint32_t kFullBraidMaxSize = 4096;

using Clock = std::chrono::steady_clock;

}  // namespace

SolutionR::SolutionR(const BraceTable& A) : A_(A) {
  if (A.size() <= kPrecomputeMaxSize) {
    const std::size_t n = A.dim();
    inv_.resize(std::size_t(A.size()) * n * n);
    for (ElementIndex a = 0; a < A.size(); ++a) {
      const FpMatrix m = mat_inv(A.lambda_matrix(a));
      std::copy(m.a.begin(), m.a.end(), inv_.begin() + std::size_t(a) * n * n);
    }
  }
}

ElementIndex SolutionR::lambda_inv_at(ElementIndex a, ElementIndex b) const {
  if (inv_.empty()) return A_.lambda_inv_apply(a, b);
  const std::size_t n = A_.dim();
  const std::uint16_t* M = inv_.data() + std::size_t(a) * n * n;
  const std::uint32_t p = A_.p();
  ElementIndex out = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t t = 0; t < n; ++t) acc += std::uint32_t(M[r * n + t]) * A_.digit(b, t);
    out = out * p + acc % p;
  }
  return out;
}

std::pair<ElementIndex, ElementIndex> SolutionR::r(ElementIndex x, ElementIndex y) const {
  const ElementIndex u = A_.lambda_apply(x, y);
  return {u, lambda_inv_at(u, x)};
}

std::pair<ElementIndex, ElementIndex> r(const BraceTable& A, ElementIndex x,
                                        ElementIndex y) {
  A.check_index(x);
  A.check_index(y);
  const ElementIndex u = A.lambda_apply(x, y);
  return {u, A.lambda_inv_apply(u, x)};
}

CheckReport verify_involutive(const BraceTable& A) {
  CheckReport rep;
  rep.add_pass("non-degeneracy (structural)");
  const std::uint32_t N = A.size();
  if (std::uint64_t(N) * N > 100000000ull)
    throw TooLarge("involutivity scan needs p^{2n} <= 10^8");
  const SolutionR R(A);
  std::optional<std::pair<ElementIndex, ElementIndex>> witness;
  for (ElementIndex x = 0; x < N && !witness; ++x)
    for (ElementIndex y = 0; y < N; ++y) {
      const auto [u, v] = R.r(x, y);
      if (R.r(u, v) != std::make_pair(x, y)) {
        witness = {x, y};
        break;
      }
    }
  if (witness)
    rep.add_fail("involutivity r(r(x,y)) = (x,y)",
                 "(x,y)=(" + std::to_string(witness->first) + "," +
                     std::to_string(witness->second) + ")");
  else
    rep.add_pass("involutivity r(r(x,y)) = (x,y)");
  rep.items_checked = std::uint64_t(N) * N;
  return rep;
}

namespace {

struct BraidScan {
  std::optional<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> witness;
  std::uint64_t triples = 0;
  bool hit_budget = false;
};

// Dense first/second-component tables of r; the braid check is then twelve
// uint16 lookups per triple.
struct RTables {
  std::uint32_t N;
  std::vector<std::uint16_t> r1, r2;
};

RTables build_rtables(const BraceTable& A) {
  RTables T;
  T.N = A.size();
  T.r1.resize(std::size_t(T.N) * T.N);
  T.r2.resize(std::size_t(T.N) * T.N);
  const SolutionR R(A);
  for (ElementIndex x = 0; x < T.N; ++x) {
    std::uint16_t* row1 = T.r1.data() + std::size_t(x) * T.N;
    std::uint16_t* row2 = T.r2.data() + std::size_t(x) * T.N;
    for (ElementIndex y = 0; y < T.N; ++y) {
      const auto [u, v] = R.r(x, y);
      row1[y] = static_cast<std::uint16_t>(u);
      row2[y] = static_cast<std::uint16_t>(v);
    }
  }
  return T;
}

void braid_range(const RTables& T, std::uint32_t x0, std::uint32_t x1,
                 bool budget_armed, Clock::time_point deadline, BraidScan& out) {
  const std::uint32_t N = T.N;
  const std::uint16_t* R1 = T.r1.data();
  const std::uint16_t* R2 = T.r2.data();
  for (std::uint32_t x = x0; x < x1; ++x) {
    const std::uint16_t* r1x = R1 + std::size_t(x) * N;
    const std::uint16_t* r2x = R2 + std::size_t(x) * N;
    for (std::uint32_t y = 0; y < N; ++y) {
      if (budget_armed && (y & 63u) == 0 && Clock::now() >= deadline) {
        out.hit_budget = true;
        return;
      }
      const std::uint32_t a1 = r1x[y], b1 = r2x[y];
      const std::uint16_t* r1a1 = R1 + std::size_t(a1) * N;
      const std::uint16_t* r2a1 = R2 + std::size_t(a1) * N;
      const std::uint16_t* r1b1 = R1 + std::size_t(b1) * N;
      const std::uint16_t* r2b1 = R2 + std::size_t(b1) * N;
      const std::uint16_t* r1y = R1 + std::size_t(y) * N;
      const std::uint16_t* r2y = R2 + std::size_t(y) * N;
      for (std::uint32_t z = 0; z < N; ++z) {
        // lhs: r12 r23 r12 applied to (x,y,z)
        const std::uint16_t b2 = r1b1[z], c2 = r2b1[z];
        const std::uint16_t a3 = r1a1[b2], b3 = r2a1[b2];
        // rhs: r23 r12 r23
        const std::uint16_t b4 = r1y[z], c4 = r2y[z];
        const std::uint16_t a5 = r1x[b4], b5 = r2x[b4];
        const std::uint16_t b6 = R1[std::size_t(b5) * N + c4];
        const std::uint16_t c6 = R2[std::size_t(b5) * N + c4];
        if (((a3 != a5) | (b3 != b6) | (c2 != c6)) != 0) {
          if (!out.witness) out.witness = {x, y, z};
        }
      }
      out.triples += N;
    }
  }
}

}  // namespace

CheckReport verify_braid(const BraceTable& A, const VerifyOptions& opts) {
  CheckReport rep;
  const std::uint32_t N = A.size();
  const bool budget_armed = opts.time_budget_ms != 0;
  const auto deadline = Clock::now() + std::chrono::milliseconds(opts.time_budget_ms);

  BraidScan scan;
  if (opts.mode == VerifyMode::Full) {
    if (N > kFullBraidMaxSize)
      throw TooLarge("full braid scan needs p^n <= " + std::to_string(kFullBraidMaxSize) +
                     "; use sampled mode");
    const RTables T = build_rtables(A);
    unsigned threads = std::max(1u, opts.threads);
    threads = std::min(threads, N);
    if (threads == 1) {
      braid_range(T, 0, N, budget_armed, deadline, scan);
    } else {
      std::vector<BraidScan> parts(threads);
      std::vector<std::thread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        const auto lo = static_cast<std::uint32_t>(std::uint64_t(N) * t / threads);
        const auto hi = static_cast<std::uint32_t>(std::uint64_t(N) * (t + 1) / threads);
        workers.emplace_back([&, t, lo, hi] {
          braid_range(T, lo, hi, budget_armed, deadline, parts[t]);
        });
      }
      for (auto& w : workers) w.join();
      for (const auto& part : parts) {
        scan.triples += part.triples;
        scan.hit_budget = scan.hit_budget || part.hit_budget;
        if (part.witness && (!scan.witness || *part.witness < *scan.witness))
          scan.witness = part.witness;
      }
    }
  } else {
    const SolutionR R(A);
    Rng rng(opts.seed);
    for (std::uint64_t t = 0; t < opts.samples; ++t) {
      if (budget_armed && (t & 1023u) == 0 && Clock::now() >= deadline) {
        scan.hit_budget = true;
        break;
      }
      const ElementIndex x = rng.below(N), y = rng.below(N), z = rng.below(N);
      const auto [a1, b1] = R.r(x, y);
      const auto [b2, c2] = R.r(b1, z);
      const auto [a3, b3] = R.r(a1, b2);
      const auto [b4, c4] = R.r(y, z);
      const auto [a5, b5] = R.r(x, b4);
      const auto [b6, c6] = R.r(b5, c4);
      if (a3 != a5 || b3 != b6 || c2 != c6)
        if (!scan.witness) scan.witness = {x, y, z};
      ++scan.triples;
    }
    rep.seed = opts.seed;
    rep.samples = opts.samples;
  }

  if (scan.witness) {
    const auto [x, y, z] = *scan.witness;
    rep.add_fail("braid relation r12 r23 r12 = r23 r12 r23",
                 "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                     std::to_string(z) + ")");
  } else {
    rep.add_pass("braid relation r12 r23 r12 = r23 r12 r23");
  }
  rep.items_checked = scan.triples;
  rep.partial = scan.hit_budget;
  return rep;
}

}  // namespace braceforge
