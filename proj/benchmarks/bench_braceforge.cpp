// Throughput benchmarks for the hot paths: family construction, axiom
// scanning, cocycle verification, braid relation, chains and ideals.

#include <benchmark/benchmark.h>

#include "braceforge/brace.hpp"
#include "braceforge/chains.hpp"
#include "braceforge/family.hpp"
#include "braceforge/ideals.hpp"
#include "braceforge/verify.hpp"
#include "braceforge/ybe.hpp"

using namespace braceforge;

namespace {

const BraceTable& canonical_p5() {
  static BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  return A;
}

void BM_build_brace_p5(benchmark::State& state) {
  FamilyParams prm = make_family_params(5, 1, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(build_brace(prm));
}
BENCHMARK(BM_build_brace_p5)->Unit(benchmark::kMillisecond);

void BM_build_brace_p7(benchmark::State& state) {
  FamilyParams prm = make_family_params(7, 3, 1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(build_brace(prm));
}
BENCHMARK(BM_build_brace_p7)->Unit(benchmark::kMillisecond);

void BM_cocycle_p5(benchmark::State& state) {
  GeneratorMatrices mats = generator_matrices(make_family_params(5, 1, 0, 0));
  std::uint64_t items = 0;
  for (auto _ : state) {
    CheckReport rep = verify_cocycle(mats, Prime(5));
    items += rep.items_checked;
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(static_cast<int64_t>(items));
}
BENCHMARK(BM_cocycle_p5)->Unit(benchmark::kMillisecond);

void BM_axioms_sampled_p5(benchmark::State& state) {
  const BraceTable& A = canonical_p5();
  VerifyOptions opts;
  opts.mode = VerifyMode::Sampled;
  opts.samples = static_cast<std::uint64_t>(state.range(0));
  opts.seed = 1;
  std::uint64_t items = 0;
  for (auto _ : state) {
    CheckReport rep = verify_brace_axioms(A, opts);
    items += rep.items_checked;
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(static_cast<int64_t>(items));
}
BENCHMARK(BM_axioms_sampled_p5)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_axioms_full_p5(benchmark::State& state) {
  const BraceTable& A = canonical_p5();
  std::uint64_t items = 0;
  for (auto _ : state) {
    CheckReport rep = verify_brace_axioms(A);
    items += rep.items_checked;
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(static_cast<int64_t>(items));  // 625^3 triples/iter
}
BENCHMARK(BM_axioms_full_p5)->Unit(benchmark::kMillisecond);

void BM_braid_full_p5(benchmark::State& state) {
  const BraceTable& A = canonical_p5();
  std::uint64_t items = 0;
  for (auto _ : state) {
    CheckReport rep = verify_braid(A);
    items += rep.items_checked;
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(static_cast<int64_t>(items));
}
BENCHMARK(BM_braid_full_p5)->Unit(benchmark::kMillisecond);

void BM_chains_p5(benchmark::State& state) {
  const BraceTable& A = canonical_p5();
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_chain(A));
    benchmark::DoNotOptimize(right_chain(A));
    benchmark::DoNotOptimize(strong_chain(A));
  }
}
BENCHMARK(BM_chains_p5)->Unit(benchmark::kMillisecond);

void BM_ideals_prime_p5(benchmark::State& state) {
  const BraceTable& A = canonical_p5();
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_ideals(A));
    benchmark::DoNotOptimize(is_prime(A));
  }
}
BENCHMARK(BM_ideals_prime_p5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
