#pragma once

#include <string>

#include "braceforge/brace.hpp"
#include "braceforge/report.hpp"

namespace braceforge {

// Brace file format: JSON with a "kind" discriminator.
//   kind="family": {kind, p, y, i, k}            — rebuilt via the family
//   kind="table":  {kind, p, n, basis, lambda}   — raw lambda matrices,
// validated on load (lambda(0) = Id, invertibility, homomorphism law).
std::string brace_to_json(const BraceTable& A, bool as_table, int indent = 1);
BraceTable brace_from_json(const std::string& text);

void save_brace(const BraceTable& A, const std::string& path, bool as_table);
BraceTable load_brace(const std::string& path);

// gamma file: {p, n, matrix: row-major ints}; must be invertible.
std::string gamma_to_json(const FpMatrix& gamma, int indent = 1);
FpMatrix gamma_from_json(const std::string& text);
FpMatrix load_gamma(const std::string& path);

// Multiplication table as CSV: header row/column of element indices, body
// entry (a,b) = index of a.b.
std::string circle_table_csv(const BraceTable& A);

}  // namespace braceforge
