#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "braceforge/errors.hpp"
#include "braceforge/fp.hpp"

namespace braceforge {

// Dense vector over F_p, entries stored reduced.
struct FpVector {
  std::uint16_t p = 2;
  std::vector<std::uint16_t> c;

  FpVector() = default;
  FpVector(std::uint16_t p_, std::size_t n) : p(p_), c(n, 0) {}
  FpVector(std::uint16_t p_, std::initializer_list<int> init);

  std::size_t size() const { return c.size(); }
  std::uint16_t operator[](std::size_t i) const { return c[i]; }
  std::uint16_t& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
};

FpVector vec_add(const FpVector& a, const FpVector& b);
FpVector vec_sub(const FpVector& a, const FpVector& b);
FpVector vec_neg(const FpVector& a);
FpVector vec_scale(std::uint32_t s, const FpVector& a);

// Dense row-major matrix over F_p, entries stored reduced.
struct FpMatrix {
  std::uint16_t p = 2;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint16_t> a;

  FpMatrix() = default;
  FpMatrix(std::uint16_t p_, std::size_t r, std::size_t c)
      : p(p_), rows(r), cols(c), a(r * c, 0) {}

  static FpMatrix identity(std::uint16_t p, std::size_t n);
  // Build from integer rows (entries reduced mod p, negatives allowed).
  static FpMatrix from_rows(std::uint16_t p,
                            std::initializer_list<std::initializer_list<int>> rows);

  std::uint16_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  std::uint16_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }

  FpVector col(std::size_t c) const;
  FpVector row(std::size_t r) const;
  bool is_identity() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix mat_mul(const FpMatrix& A, const FpMatrix& B);
FpMatrix mat_add(const FpMatrix& A, const FpMatrix& B);
FpMatrix mat_pow(const FpMatrix& A, std::uint64_t e);
FpMatrix mat_inv(const FpMatrix& A);  // throws Singular
FpMatrix rref(const FpMatrix& A);
FpVector mat_vec(const FpMatrix& A, const FpVector& v);
bool mat_invertible(const FpMatrix& A);

}  // namespace braceforge
