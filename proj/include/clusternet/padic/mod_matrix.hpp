#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "clusternet/padic/context.hpp"

namespace cnet::padic {

/// Square integer matrix, row-major. Entries are exact integers; arithmetic
/// helpers reduce mod p^k.
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<Int> a;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : n(dim), a(dim * dim, 0) {}
  static SquareMatrix identity(std::size_t dim);
  /// Columns given as vectors.
  static SquareMatrix from_columns(const std::vector<std::vector<Int>>& columns);

  Int& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

/// M * v mod p^k.
std::vector<Int> apply_mod(const Context& ctx, const SquareMatrix& m, const std::vector<Int>& v);
/// Determinant mod p^k by cofactor expansion (dimension <= 8).
Int det_mod(const Context& ctx, const SquareMatrix& m);
/// Exact integer determinant (Bareiss).
mpz_class det_exact(const SquareMatrix& m);
/// Adjugate mod p^k: adj(M) * M = det(M) * I.
SquareMatrix adjugate_mod(const Context& ctx, const SquareMatrix& m);

}  // namespace cnet::padic
