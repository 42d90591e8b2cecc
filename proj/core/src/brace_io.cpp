#include "braceforge/brace_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "braceforge/family.hpp"
#include "braceforge/rng.hpp"

namespace braceforge {

using nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

// The homomorphism law is part of the file contract for raw tables: full
// check at desk scale, seeded sample beyond it.
void check_homomorphism_on_load(const BraceTable& A) {
  const std::uint32_t size = A.size();
  auto check_pair = [&](ElementIndex a, ElementIndex b) {
    ElementIndex ab = A.circle(a, b);
    const std::uint16_t* M = A.lambda_raw(ab);
    const std::uint16_t* Ma = A.lambda_raw(a);
    const std::uint16_t* Mb = A.lambda_raw(b);
    const std::size_t n = A.dim();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += Ma[r * n + t] * Mb[t * n + c];
        if (acc % A.p() != M[r * n + c])
          throw RelationFailure("lambda(a.b) != lambda(a) lambda(b) at pair (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
      }
  };
  if (size <= 4096) {
    for (ElementIndex a = 0; a < size; ++a)
      for (ElementIndex b = 0; b < size; ++b) check_pair(a, b);
  } else {
    Rng rng(0);
    for (std::uint32_t t = 0; t < 1000000; ++t)
      check_pair(rng.below(size), rng.below(size));
  }
}

}  // namespace

std::string brace_to_json(const BraceTable& A, bool as_table, int indent) {
  ordered_json j;
  if (!as_table) {
    if (!A.meta())
      throw InvalidParams("brace has no family parameters; use the table form");
    j["kind"] = "family";
    j["p"] = A.meta()->p;
    j["y"] = A.meta()->y;
    j["i"] = A.meta()->i;
    j["k"] = A.meta()->k;
  } else {
    j["kind"] = "table";
    j["p"] = A.p();
    j["n"] = A.dim();
    j["basis"] = A.basis_names();
    ordered_json lam = ordered_json::array();
    for (ElementIndex a = 0; a < A.size(); ++a) {
      const std::uint16_t* m = A.lambda_raw(a);
      lam.push_back(std::vector<int>(m, m + A.dim() * A.dim()));
    }
    j["lambda"] = std::move(lam);
  }
  return j.dump(indent);
}

BraceTable brace_from_json(const std::string& text) {
  ordered_json j = parse(text);
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "family") {
      FamilyParams params =
          make_family_params(j.at("p").get<std::uint32_t>(), j.at("y").get<int>(),
                             j.at("i").get<int>(), j.at("k").get<int>());
      return build_brace(params);
    }
    if (kind != "table") throw ParseError("unknown kind \"" + kind + "\"");

    Prime p(j.at("p").get<std::uint32_t>());
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::string> basis =
        j.at("basis").get<std::vector<std::string>>();
    const auto& lam = j.at("lambda");
    std::vector<FpMatrix> lambda;
    lambda.reserve(lam.size());
    for (const auto& entry : lam) {
      std::vector<int> flat = entry.get<std::vector<int>>();
      if (flat.size() != n * n)
        throw ParseError("lambda entry has wrong length");
      FpMatrix m(p.value(), n, n);
      for (std::size_t t = 0; t < flat.size(); ++t) {
        int v = flat[t] % p.value();
        if (v < 0) v += p.value();
        m.a[t] = static_cast<std::uint16_t>(v);
      }
      lambda.push_back(std::move(m));
    }
    BraceTable A(p, n, std::move(basis), std::move(lambda));
    check_homomorphism_on_load(A);
    return A;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("bad brace file: ") + e.what());
  }
}

void save_brace(const BraceTable& A, const std::string& path, bool as_table) {
  write_file(path, brace_to_json(A, as_table) + "\n");
}

BraceTable load_brace(const std::string& path) {
  return brace_from_json(read_file(path));
}

std::string gamma_to_json(const FpMatrix& gamma, int indent) {
  ordered_json j;
  j["p"] = gamma.p;
  j["n"] = gamma.rows;
  j["matrix"] = std::vector<int>(gamma.a.begin(), gamma.a.end());
  return j.dump(indent);
}

FpMatrix gamma_from_json(const std::string& text) {
  ordered_json j = parse(text);
  try {
    Prime p(j.at("p").get<std::uint32_t>());
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<int> flat = j.at("matrix").get<std::vector<int>>();
    if (flat.size() != n * n) throw ParseError("gamma matrix has wrong length");
    FpMatrix m(p.value(), n, n);
    for (std::size_t t = 0; t < flat.size(); ++t) {
      int v = flat[t] % p.value();
      if (v < 0) v += p.value();
      m.a[t] = static_cast<std::uint16_t>(v);
    }
    if (!mat_invertible(m)) throw Singular("gamma is not invertible mod p");
    return m;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("bad gamma file: ") + e.what());
  }
}

FpMatrix load_gamma(const std::string& path) {
  return gamma_from_json(read_file(path));
}

std::string circle_table_csv(const BraceTable& A) {
  std::ostringstream os;
  os << "a\\b";
  for (ElementIndex b = 0; b < A.size(); ++b) os << ',' << b;
  os << '\n';
  for (ElementIndex a = 0; a < A.size(); ++a) {
    os << a;
    for (ElementIndex b = 0; b < A.size(); ++b) os << ',' << A.circle(a, b);
    os << '\n';
  }
  return os.str();
}

std::string CheckReport::to_json_string(int indent) const {
  ordered_json j;
  j["ok"] = ok();
  ordered_json checks = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json c;
    c["name"] = e.name;
    c["pass"] = e.pass;
    if (!e.pass) c["witness"] = e.witness;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["items_checked"] = items_checked;
  if (seed) j["seed"] = *seed;
  if (samples) j["samples"] = *samples;
  if (partial) j["partial"] = true;
  return j.dump(indent);
}

}  // namespace braceforge
