// braceforge: construct F_p braces of the p^4 family, verify brace laws,
// classify nilpotency/ideals/groups, and exercise the derived structures
// (Yang-Baxter solution, pre-Lie algebra, holomorph embedding) from files.
//
// Exit codes: 0 success, 2 usage/parse error, 3 mathematical check failed,
// 4 time budget exceeded (partial report).  Reports are JSON on stdout (or
// --out); wall time goes to stderr so identical runs emit identical bytes.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braceforge/analysis.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/brace_io.hpp"
#include "braceforge/chains.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/family.hpp"
#include "braceforge/hol.hpp"
#include "braceforge/ideals.hpp"
#include "braceforge/prelie.hpp"
#include "braceforge/verify.hpp"
#include "braceforge/version.hpp"
#include "braceforge/ybe.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace braceforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMathFail = 3;
constexpr int kExitBudget = 4;

struct RunConfig {
  std::string command;  // echo of the invoked command line
  std::string in_path, in_path_b, out_path;
  bool full = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = resolve from env / hardware
  double time_budget_s = 0.0;
};

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BRACEFORGE_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

VerifyOptions make_verify_options(const RunConfig& cfg, std::uint64_t default_samples,
                                  bool default_full) {
  VerifyOptions opts;
  bool sampled = cfg.samples.has_value() || (!default_full && !cfg.full);
  if (cfg.full) sampled = false;
  opts.mode = sampled ? VerifyMode::Sampled : VerifyMode::Full;
  opts.samples = cfg.samples.value_or(default_samples);
  opts.seed = cfg.seed;
  opts.threads = resolve_threads(cfg.threads);
  opts.time_budget_ms = static_cast<std::uint64_t>(cfg.time_budget_s * 1000.0);
  return opts;
}

json report_json(const CheckReport& rep) { return json::parse(rep.to_json_string()); }
json chain_json(const ChainReport& rep) { return json::parse(rep.to_json_string()); }

json envelope(const RunConfig& cfg) {
  json out;
  out["version"] = std::string(kVersion);
  out["command"] = cfg.command;
  out["seed"] = cfg.seed;
  return out;
}

void emit(const json& out, const std::string& out_path) {
  std::string text = out.dump(1) + "\n";
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + out_path);
  f << text;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << text;
}

int finish(json out, const RunConfig& cfg, bool ok, bool partial) {
  emit(out, cfg.out_path);
  if (partial) return kExitBudget;
  return ok ? kExitOk : kExitMathFail;
}

// ---------------------------------------------------------------- construct

int cmd_construct(const RunConfig& cfg, std::int64_t p, std::int64_t y, std::int64_t i,
                  std::int64_t k, bool expand, const std::string& csv_path) {
  FamilyParams params = make_family_params(static_cast<std::uint32_t>(p), y, i, k);
  BraceTable A = build_brace(params);
  save_brace(A, cfg.in_path, expand);  // in_path doubles as --out for construct
  json out = envelope(cfg);
  out["written"] = cfg.in_path;
  out["kind"] = expand ? "table" : "family";
  out["p"] = params.p;
  out["y"] = params.y;
  out["i"] = params.i;
  out["k"] = params.k;
  if (!csv_path.empty()) {
    write_text(csv_path, circle_table_csv(A));
    out["csv"] = csv_path;
  }
  return finish(std::move(out), cfg, true, false);
}

// ----------------------------------------------------------------- classify

json nilpotency_json(const BraceTable& A, std::optional<ChainReport>& strong_out) {
  ChainReport left = left_chain(A);
  ChainReport right = right_chain(A);
  json chains;
  chains["left"] = chain_json(left);
  chains["right"] = chain_json(right);
  try {
    strong_out = strong_chain(A);
    chains["strong"] = chain_json(*strong_out);
  } catch (const TooLarge&) {
    chains["strong"] = nullptr;
  }
  return chains;
}

int cmd_classify(const RunConfig& cfg) {
  BraceTable A = load_brace(cfg.in_path);
  VerifyOptions opts = make_verify_options(cfg, 100000, /*default_full=*/false);
  CheckReport axioms = verify_brace_axioms(A, opts);

  json out = envelope(cfg);
  out["axioms"] = report_json(axioms);
  if (!axioms.ok()) return finish(std::move(out), cfg, false, axioms.partial);

  std::optional<ChainReport> strong;
  json chains = nilpotency_json(A, strong);
  NilpotencyFlags flags = classify_nilpotency(A);
  out["left_nilpotent"] = flags.left;
  out["right_nilpotent"] = flags.right;
  if (strong)
    out["strongly_nilpotent"] = flags.strong;
  else
    out["strongly_nilpotent"] = nullptr;

  if (count_subspaces(Prime(A.p()), A.dim()) <= 1000000)
    out["prime"] = is_prime(A);
  else
    out["prime"] = nullptr;

  try {
    out["group"] = group_class_name(identify_group(A));
  } catch (const WrongCardinality&) {
    out["group"] = nullptr;
  }
  out["center_size"] = circle_center(A).elements.size();
  out["chain_dims"] = std::move(chains);
  return finish(std::move(out), cfg, true, false);
}

// -------------------------------------------------------------------- sweep

int cmd_sweep(const RunConfig& cfg, std::int64_t p) {
  make_family_params(static_cast<std::uint32_t>(p), 1, 0, 0);  // validates p
  VerifyOptions opts = make_verify_options(cfg, 100000, /*default_full=*/false);

  json failures = json::array();
  std::map<std::string, std::uint64_t> fingerprint_counts;
  std::uint64_t total = 0, passed = 0;
  for (std::int64_t y = 1; y < p; ++y)
    for (std::int64_t i = 0; i < p; ++i)
      for (std::int64_t k = 0; k < p; ++k) {
        ++total;
        FamilyParams params = make_family_params(static_cast<std::uint32_t>(p), y, i, k);
        BraceTable A = build_brace(params);
        std::vector<std::string> bad;
        if (!verify_generator_relations(generator_matrices(params), Prime(A.p())).ok())
          bad.push_back("generator relations");
        if (!verify_multiplicative_table(A, params).ok()) bad.push_back("table");
        if (!verify_brace_axioms(A, opts).ok()) bad.push_back("axioms");
        if (!witness_not_right_nilpotent(A, params)) bad.push_back("witness");
        fingerprint_counts[invariant_fingerprint(A).to_json_string()] += 1;
        if (bad.empty()) {
          ++passed;
        } else {
          json f;
          f["y"] = y;
          f["i"] = i;
          f["k"] = k;
          f["failures"] = bad;
          failures.push_back(std::move(f));
        }
      }

  json out = envelope(cfg);
  out["p"] = p;
  out["mode"] = opts.mode == VerifyMode::Full ? "full" : "sampled";
  if (opts.mode == VerifyMode::Sampled) out["samples"] = opts.samples;
  out["triples"] = total;
  out["passed"] = passed;
  out["failed"] = std::move(failures);
  out["distinct_fingerprints"] = fingerprint_counts.size();
  json fps = json::array();
  for (const auto& [fp, count] : fingerprint_counts) {
    json entry;
    entry["count"] = count;
    entry["fingerprint"] = json::parse(fp);
    fps.push_back(std::move(entry));
  }
  out["fingerprints"] = std::move(fps);
  return finish(std::move(out), cfg, passed == total, false);
}

// ------------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg) {
  BraceTable A = load_brace(cfg.in_path);
  VerifyOptions opts = make_verify_options(cfg, 100000, /*default_full=*/true);
  CheckReport axioms = verify_brace_axioms(A, opts);
  CheckReport linearity = verify_fp_linearity(A);
  CheckReport hom = verify_lambda_homomorphism(A, opts);

  json out = envelope(cfg);
  out["mode"] = opts.mode == VerifyMode::Full ? "full" : "sampled";
  out["axioms"] = report_json(axioms);
  out["linearity"] = report_json(linearity);
  out["homomorphism"] = report_json(hom);
  bool ok = axioms.ok() && linearity.ok() && hom.ok();
  return finish(std::move(out), cfg, ok, axioms.partial);
}

// ------------------------------------------------------------------- chains

int cmd_chains(const RunConfig& cfg) {
  BraceTable A = load_brace(cfg.in_path);
  std::optional<ChainReport> strong;
  json chains = nilpotency_json(A, strong);
  NilpotencyFlags flags = classify_nilpotency(A);
  json out = envelope(cfg);
  out["chains"] = std::move(chains);
  out["left_nilpotent"] = flags.left;
  out["right_nilpotent"] = flags.right;
  if (strong)
    out["strongly_nilpotent"] = flags.strong;
  else
    out["strongly_nilpotent"] = nullptr;
  return finish(std::move(out), cfg, true, false);
}

// ------------------------------------------------------------------- ideals

int cmd_ideals(const RunConfig& cfg) {
  BraceTable A = load_brace(cfg.in_path);
  std::vector<Ideal> ideals = all_ideals(A);
  json list = json::array();
  for (const Ideal& ideal : ideals) {
    json entry;
    entry["dim"] = ideal.space.dim();
    const FpMatrix& basis = ideal.space.basis();
    json rows = json::array();
    for (std::size_t r = 0; r < basis.rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < basis.cols; ++c) row.push_back(basis.at(r, c));
      rows.push_back(std::move(row));
    }
    entry["basis"] = std::move(rows);
    entry["is_ideal"] = is_ideal(A, ideal.space);
    list.push_back(std::move(entry));
  }
  json out = envelope(cfg);
  out["subspaces_scanned"] = count_subspaces(Prime(A.p()), A.dim());
  out["ideal_count"] = ideals.size();
  out["ideals"] = std::move(list);
  out["prime"] = is_prime(A);
  return finish(std::move(out), cfg, true, false);
}

// ---------------------------------------------------------------------- iso

int cmd_iso(const RunConfig& cfg, std::uint64_t node_budget) {
  BraceTable A = load_brace(cfg.in_path);
  BraceTable B = load_brace(cfg.in_path_b);
  IsoOptions opts;
  if (node_budget > 0) opts.node_budget = node_budget;
  std::optional<IsoWitness> witness = brace_isomorphic(A, B, opts);
  json out = envelope(cfg);
  out["isomorphic"] = witness.has_value();
  if (witness) {
    json images;
    for (const auto& [name, idx] : witness->images) images[name] = idx;
    out["witness"] = json::object();
    out["witness"]["images"] = std::move(images);
    json rows = json::array();
    for (std::size_t r = 0; r < witness->gamma.rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < witness->gamma.cols; ++c)
        row.push_back(witness->gamma.at(r, c));
      rows.push_back(std::move(row));
    }
    out["witness"]["gamma"] = std::move(rows);
  }
  return finish(std::move(out), cfg, true, false);
}

// ---------------------------------------------------------------------- ybe

int cmd_ybe(const RunConfig& cfg) {
  BraceTable A = load_brace(cfg.in_path);
  VerifyOptions opts = make_verify_options(cfg, 1000000, /*default_full=*/false);
  CheckReport involutive = verify_involutive(A);
  CheckReport braid = verify_braid(A, opts);
  json out = envelope(cfg);
  out["mode"] = opts.mode == VerifyMode::Full ? "full" : "sampled";
  out["involutive"] = report_json(involutive);
  out["braid"] = report_json(braid);
  bool ok = involutive.ok() && braid.ok();
  return finish(std::move(out), cfg, ok, braid.partial);
}

// ------------------------------------------------------------------- prelie

int cmd_prelie(const RunConfig& cfg, std::int64_t p, std::int64_t y, std::int64_t j,
               std::int64_t k) {
  Prime prime(static_cast<std::uint32_t>(p));
  auto reduce = [&](std::int64_t v) {
    std::int64_t m = v % p;
    if (m < 0) m += p;
    return static_cast<std::uint16_t>(m);
  };
  PreLieAlgebra V(prime, reduce(j), reduce(k), reduce(y));
  CheckReport identity = verify_prelie_identity(V);
  PreLieNilpotency nil = prelie_nilpotency(V);

  json out = envelope(cfg);
  out["p"] = V.p();
  out["j"] = V.j();
  out["k"] = V.k();
  out["y"] = V.y();
  out["identity"] = report_json(identity);
  out["left_nilpotent"] = nil.left;
  out["right_nilpotent"] = nil.right;
  out["left_dims"] = nil.left_dims;
  out["right_dims"] = nil.right_dims;
  json products;
  for (std::size_t a = 0; a < PreLieAlgebra::kDim; ++a)
    for (std::size_t b = 0; b < PreLieAlgebra::kDim; ++b) {
      FpVector prod = V.product(V.basis(a), V.basis(b));
      json coords = json::array();
      for (std::size_t c = 0; c < prod.size(); ++c) coords.push_back(prod[c]);
      products[std::string(V.basis_name(a)) + "*" + V.basis_name(b)] = std::move(coords);
    }
  out["products"] = std::move(products);
  return finish(std::move(out), cfg, identity.ok(), false);
}

// ---------------------------------------------------------------------- hol

int cmd_hol(const RunConfig& cfg, const std::string& gamma_path,
            const std::string& conjugate_path) {
  BraceTable A = load_brace(cfg.in_path);
  std::vector<HolElement> image = embed(A);  // ClosureFailure on corrupt tables
  bool regular = is_regular(image, Prime(A.p()), A.dim());

  json out = envelope(cfg);
  out["embed_size"] = image.size();
  out["regular"] = regular;
  bool ok = regular;
  if (!gamma_path.empty()) {
    FpMatrix gamma = load_gamma(gamma_path);
    out["automorphism"] = is_brace_automorphism(A, gamma);
    BraceTable C = conjugate_brace(A, gamma);
    VerifyOptions opts = make_verify_options(cfg, 100000, /*default_full=*/false);
    CheckReport axioms = verify_brace_axioms(C, opts);
    out["conjugate_axioms"] = report_json(axioms);
    ok = ok && axioms.ok();
    if (!conjugate_path.empty()) {
      save_brace(C, conjugate_path, /*as_table=*/true);
      out["conjugate_written"] = conjugate_path;
    }
  }
  return finish(std::move(out), cfg, ok, false);
}

// ----------------------------------------------------------- matrix checks

int cmd_matrix_relations(const RunConfig& cfg, std::int64_t p, std::int64_t y,
                         std::int64_t i, std::int64_t k) {
  FamilyParams params = make_family_params(static_cast<std::uint32_t>(p), y, i, k);
  GeneratorMatrices mats = generator_matrices(params);
  Prime prime(params.p);
  CheckReport relations = verify_generator_relations(mats, prime);
  CheckReport cocycle = verify_cocycle(mats, prime);

  json out = envelope(cfg);
  out["p"] = params.p;
  out["y"] = params.y;
  out["i"] = params.i;
  out["k"] = params.k;
  out["relations"] = report_json(relations);
  out["cocycle"] = report_json(cocycle);
  return finish(std::move(out), cfg, relations.ok() && cocycle.ok(), false);
}

std::string join_args(int argc, char** argv) {
  std::string joined;
  for (int i = 0; i < argc; ++i) {
    if (i) joined += ' ';
    joined += argv[i];
  }
  return joined;
}

void add_sampling_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--full", cfg.full, "exhaustive scan over all triples");
  cmd->add_option("--samples", cfg.samples, "sampled mode with this many seeded triples");
  cmd->add_option("--seed", cfg.seed, "RNG seed for sampled mode");
  cmd->add_option("--threads", cfg.threads,
                  "worker threads (default: BRACEFORGE_THREADS or hardware)");
  cmd->add_option("--time-budget", cfg.time_budget_s,
                  "seconds before aborting with a partial report (exit 4)");
}

int run(int argc, char** argv) {
  RunConfig cfg;
  cfg.command = join_args(argc, argv);

  CLI::App app{"F_p brace construction, verification and classification"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::int64_t p = 5, y = 1, i = 0, k = 0, j = 0;
  bool expand = false;
  std::string csv_path, gamma_path, conjugate_path;
  std::uint64_t node_budget = 0;

  CLI::App* construct = app.add_subcommand("construct", "build a family brace file");
  construct->add_option("--p", p, "prime > 3")->required();
  construct->add_option("--y", y, "parameter y != 0 mod p");
  construct->add_option("--i", i, "parameter i");
  construct->add_option("--k", k, "parameter k");
  construct->add_option("--out", cfg.in_path, "output brace JSON path")->required();
  construct->add_flag("--expand", expand, "write the expanded lambda table form");
  construct->add_option("--csv", csv_path, "also write the circle multiplication CSV");

  CLI::App* classify = app.add_subcommand("classify", "nilpotency/prime/group report");
  classify->add_option("brace", cfg.in_path, "brace JSON file")->required();
  classify->add_option("--out", cfg.out_path, "report path (default stdout)");
  add_sampling_flags(classify, cfg);

  CLI::App* sweep = app.add_subcommand("sweep", "verify + fingerprint every (y,i,k)");
  sweep->add_option("--p", p, "prime > 3")->required();
  sweep->add_option("--out", cfg.out_path, "report path (default stdout)");
  add_sampling_flags(sweep, cfg);

  CLI::App* verify = app.add_subcommand("verify", "brace axiom verification");
  verify->add_option("brace", cfg.in_path, "brace JSON file")->required();
  verify->add_option("--out", cfg.out_path, "report path (default stdout)");
  add_sampling_flags(verify, cfg);

  CLI::App* chains = app.add_subcommand("chains", "left/right/strong radical chains");
  chains->add_option("brace", cfg.in_path, "brace JSON file")->required();
  chains->add_option("--out", cfg.out_path, "report path (default stdout)");

  CLI::App* ideals = app.add_subcommand("ideals", "ideal lattice and primality");
  ideals->add_option("brace", cfg.in_path, "brace JSON file")->required();
  ideals->add_option("--out", cfg.out_path, "report path (default stdout)");

  CLI::App* iso = app.add_subcommand("iso", "isomorphism test between two braces");
  iso->add_option("a", cfg.in_path, "first brace JSON file")->required();
  iso->add_option("b", cfg.in_path_b, "second brace JSON file")->required();
  iso->add_option("--node-budget", node_budget, "search node limit");
  iso->add_option("--out", cfg.out_path, "report path (default stdout)");

  CLI::App* ybe = app.add_subcommand("ybe", "Yang-Baxter solution checks");
  ybe->add_option("brace", cfg.in_path, "brace JSON file")->required();
  ybe->add_option("--out", cfg.out_path, "report path (default stdout)");
  add_sampling_flags(ybe, cfg);

  CLI::App* prelie = app.add_subcommand("prelie", "pre-Lie algebra checks");
  prelie->add_option("--p", p, "prime > 3")->required();
  prelie->add_option("--y", y, "parameter y != 0 mod p")->required();
  prelie->add_option("--j", j, "parameter j");
  prelie->add_option("--k", k, "parameter k");
  prelie->add_option("--out", cfg.out_path, "report path (default stdout)");

  CLI::App* hol = app.add_subcommand("hol", "holomorph embedding and conjugation");
  hol->add_option("brace", cfg.in_path, "brace JSON file")->required();
  hol->add_option("--gamma", gamma_path, "gamma JSON file {p, n, matrix}");
  hol->add_option("--conjugate", conjugate_path, "write the conjugated table here");
  hol->add_option("--out", cfg.out_path, "report path (default stdout)");
  add_sampling_flags(hol, cfg);

  CLI::App* relations = app.add_subcommand("matrix-relations",
                                           "generator matrix identities and cocycle");
  relations->add_option("--p", p, "prime > 3")->required();
  relations->add_option("--y", y, "parameter y != 0 mod p");
  relations->add_option("--i", i, "parameter i");
  relations->add_option("--k", k, "parameter k");
  relations->add_option("--out", cfg.out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (app.got_subcommand(construct)) return cmd_construct(cfg, p, y, i, k, expand, csv_path);
  if (app.got_subcommand(classify)) return cmd_classify(cfg);
  if (app.got_subcommand(sweep)) return cmd_sweep(cfg, p);
  if (app.got_subcommand(verify)) return cmd_verify(cfg);
  if (app.got_subcommand(chains)) return cmd_chains(cfg);
  if (app.got_subcommand(ideals)) return cmd_ideals(cfg);
  if (app.got_subcommand(iso)) return cmd_iso(cfg, node_budget);
  if (app.got_subcommand(ybe)) return cmd_ybe(cfg);
  if (app.got_subcommand(prelie)) return cmd_prelie(cfg, p, y, j, k);
  if (app.got_subcommand(hol)) return cmd_hol(cfg, gamma_path, conjugate_path);
  if (app.got_subcommand(relations)) return cmd_matrix_relations(cfg, p, y, i, k);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();
  int code = kExitUsage;
  try {
    code = run(argc, argv);
  } catch (const RelationFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    code = kExitMathFail;
  } catch (const ClosureFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    code = kExitMathFail;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    code = kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    code = kExitUsage;
  }
  std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
  std::fprintf(stderr, "wall_time_s=%.3f\n", wall.count());
  return code;
}
