#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braceforge/brace.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/family.hpp"
#include "braceforge/verify.hpp"

using namespace braceforge;

namespace {

BraceTable corrupt_family(std::uint32_t victim) {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  std::vector<FpMatrix> lambda;
  for (ElementIndex a = 0; a < A.size(); ++a) lambda.push_back(A.lambda_matrix(a));
  // swap two rows of one lambda matrix: still invertible, no longer a brace
  std::swap(lambda[victim].a[0], lambda[victim].a[4]);
  std::swap(lambda[victim].a[1], lambda[victim].a[5]);
  std::swap(lambda[victim].a[2], lambda[victim].a[6]);
  std::swap(lambda[victim].a[3], lambda[victim].a[7]);
  return BraceTable(Prime(5), 4, A.basis_names(), lambda);
}

}  // namespace

TEST_CASE("full scan passes on the family") {
  BraceTable A = build_brace(make_family_params(5, 2, 1, 3));
  CheckReport rep = verify_brace_axioms(A);
  CHECK(rep.ok());
  CHECK(rep.items_checked == 244140625ull);  // 625^3
  CHECK(!rep.seed.has_value());
  CHECK(rep.entries.size() == 7);
}

TEST_CASE("sampled scan is deterministic") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  VerifyOptions opts;
  opts.mode = VerifyMode::Sampled;
  opts.samples = 20000;
  opts.seed = 77;
  CheckReport r1 = verify_brace_axioms(A, opts);
  CheckReport r2 = verify_brace_axioms(A, opts);
  CHECK(r1.ok());
  CHECK(r1.to_json_string() == r2.to_json_string());
  CHECK(r1.seed == 77);
  CHECK(r1.samples == 20000);
  CHECK(r1.items_checked == 20000);
}

TEST_CASE("corrupted table is caught with a witness") {
  BraceTable broken = corrupt_family(42);
  CheckReport rep = verify_brace_axioms(broken);
  CHECK(!rep.ok());
  bool found_witness = false;
  for (const CheckEntry& e : rep.entries)
    if (!e.pass && e.witness.find("(a,b,c)=") != std::string::npos) found_witness = true;
  CHECK(found_witness);
}

TEST_CASE("witness does not depend on thread count") {
  BraceTable broken = corrupt_family(100);
  VerifyOptions one, three;
  one.threads = 1;
  three.threads = 3;
  CheckReport r1 = verify_brace_axioms(broken, one);
  CheckReport r3 = verify_brace_axioms(broken, three);
  CHECK(!r1.ok());
  CHECK(r1.to_json_string() == r3.to_json_string());
}

TEST_CASE("full mode refuses oversized tables") {
  BraceTable big = trivial_brace(Prime(5), 6);  // 15625 > 4096
  CHECK_THROWS_AS(verify_brace_axioms(big), TooLarge);
  VerifyOptions opts;
  opts.mode = VerifyMode::Sampled;
  opts.samples = 2000;
  CHECK(verify_brace_axioms(big, opts).ok());
}

TEST_CASE("time budget marks the report partial") {
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  VerifyOptions opts;
  opts.mode = VerifyMode::Sampled;
  opts.samples = 400000000ull;
  opts.time_budget_ms = 30;
  CheckReport rep = verify_brace_axioms(A, opts);
  CHECK(rep.partial);
  CHECK(!rep.ok());  // partial runs never claim success
  CHECK(rep.items_checked < opts.samples);
}

TEST_CASE("linearity and homomorphism checks") {
  BraceTable A = build_brace(make_family_params(5, 3, 0, 2));
  CHECK(verify_fp_linearity(A).ok());
  CheckReport hom = verify_lambda_homomorphism(A);
  CHECK(hom.ok());
  CHECK(hom.items_checked == 390625ull);  // 625^2 pairs

  BraceTable broken = corrupt_family(7);
  CHECK(!verify_lambda_homomorphism(broken).ok());
}

TEST_CASE("sampled catches a heavily corrupted table") {
  // corrupt every lambda matrix except the identity: a 100k sample cannot miss
  BraceTable A = build_brace(make_family_params(5, 1, 0, 0));
  std::vector<FpMatrix> lambda;
  lambda.push_back(FpMatrix::identity(5, 4));
  for (ElementIndex a = 1; a < A.size(); ++a) {
    FpMatrix m = FpMatrix::identity(5, 4);
    m.at(0, 0) = 2;  // diagonal scaling, invertible
    m.at(1, 1) = static_cast<std::uint16_t>(1 + a % 4);
    lambda.push_back(std::move(m));
  }
  BraceTable broken(Prime(5), 4, A.basis_names(), lambda);
  VerifyOptions opts;
  opts.mode = VerifyMode::Sampled;
  opts.samples = 100000;
  opts.seed = 5;
  CHECK(!verify_brace_axioms(broken, opts).ok());
}
