#include "clusternet/padic/mod_matrix.hpp"

#include "clusternet/errors.hpp"

namespace cnet::padic {
namespace {

Int det_rec(const Context& ctx, const SquareMatrix& m, std::vector<std::size_t>& cols,
            std::size_t row) {
  if (row == m.n) return 1;
  Int total = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto c = cols[k];
    const Int entry = ctx.reduce(m(row, c));
    if (entry != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      const Int minor = det_rec(ctx, m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      const Int term = ctx.mul(entry, minor);
      total = sign > 0 ? ctx.add(total, term) : ctx.sub(total, term);
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::from_columns(const std::vector<std::vector<Int>>& columns) {
  SquareMatrix m(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.n) throw PreconditionError("columns do not form a square matrix");
    for (std::size_t i = 0; i < m.n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Int> apply_mod(const Context& ctx, const SquareMatrix& m, const std::vector<Int>& v) {
  if (v.size() != m.n) throw PreconditionError("dimension mismatch");
  std::vector<Int> out(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < m.n; ++j) acc = ctx.add(acc, ctx.mul(ctx.reduce(m(i, j)), ctx.reduce(v[j])));
    out[i] = acc;
  }
  return out;
}

Int det_mod(const Context& ctx, const SquareMatrix& m) {
  if (m.n > 8) throw PreconditionError("determinant supports dimension <= 8");
  std::vector<std::size_t> cols(m.n);
  for (std::size_t j = 0; j < m.n; ++j) cols[j] = j;
  return det_rec(ctx, m, cols, 0);
}

mpz_class det_exact(const SquareMatrix& m) {
  const std::size_t n = m.n;
  if (n == 0) return 1;
  std::vector<mpz_class> a(m.a.begin(), m.a.end());
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

SquareMatrix adjugate_mod(const Context& ctx, const SquareMatrix& m) {
  const std::size_t n = m.n;
  SquareMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SquareMatrix minor(n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Int cof = det_mod(ctx, minor);
      // adj = transpose of the cofactor matrix
      adj(j, i) = ((i + j) % 2 == 0) ? cof : ctx.sub(0, cof);
    }
  }
  return adj;
}

}  // namespace cnet::padic
