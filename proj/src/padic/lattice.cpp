#include "clusternet/padic/lattice.hpp"

#include <algorithm>
#include <tuple>

#include "clusternet/errors.hpp"

namespace cnet::padic {
namespace {

struct Hermite {
  SquareMatrix basis;
  std::vector<int> exps;
};

bool is_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// Hermite form of span(pool) + p^k Z_p^d, computed in (Z/p^k)^d.
Hermite hermite_mod(const Context& ctx, std::size_t d, std::vector<std::vector<Int>> pool) {
  const int k = ctx.precision();
  for (auto& g : pool) {
    for (auto& x : g) x = ctx.reduce(x);
  }
  std::erase_if(pool, is_zero);

  Hermite h{SquareMatrix(d), std::vector<int>(d, k)};
  for (std::size_t row = d; row-- > 0;) {
    std::size_t best = pool.size();
    int best_v = k;
    for (std::size_t g = 0; g < pool.size(); ++g) {
      const int v = ctx.valuation(pool[g][row]);
      if (v < best_v) {
        best_v = v;
        best = g;
      }
    }
    if (best == pool.size()) {
      h.exps[row] = k;
      h.basis(row, row) = ctx.power(k);
      continue;
    }
    auto pivot = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));

    const Int pv = ctx.power(best_v);
    const Int unit_inv = ctx.inverse(pivot[row] / pv);
    for (auto& x : pivot) x = ctx.mul(x, unit_inv);

    for (auto& g : pool) {
      const Int c = g[row] / pv;
      if (c == 0) continue;
      for (std::size_t i = 0; i < d; ++i) g[i] = ctx.sub(g[i], ctx.mul(c, pivot[i]));
    }
    // p^{k-v} * pivot vanishes in this row but not necessarily above it.
    std::vector<Int> extra(d);
    for (std::size_t i = 0; i < d; ++i) extra[i] = ctx.mul(pivot[i], ctx.power(k - best_v));
    pool.push_back(std::move(extra));
    std::erase_if(pool, is_zero);

    for (std::size_t i = 0; i < d; ++i) h.basis(i, row) = pivot[i];
    h.exps[row] = best_v;
  }

  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      if (h.exps[i] >= k) continue;
      const Int c = h.basis(i, j) / ctx.power(h.exps[i]);
      if (c == 0) continue;
      for (std::size_t r = 0; r <= i; ++r) {
        h.basis(r, j) = ctx.sub(h.basis(r, j), ctx.mul(c, h.basis(r, i)));
      }
    }
  }
  return h;
}

int min_entry_valuation(const Context& ctx, const SquareMatrix& m) {
  int best = ctx.precision();
  for (auto x : m.a) best = std::min(best, ctx.valuation(x));
  return best;
}

}  // namespace

Lattice::Lattice(Context ctx, SquareMatrix basis, std::vector<int> exps, int shift)
    : ctx_(ctx), basis_(std::move(basis)), exps_(std::move(exps)), shift_(shift) {
  const std::size_t d = basis_.n;
  const int k = ctx_.precision();
  containment_ = 0;
  for (std::size_t i = 0; i < d; ++i) {
    int t = 0;
    for (; t < k; ++t) {
      std::vector<Int> e(d, 0);
      e[i] = ctx_.power(t);
      if (canonical_contains(e)) break;
    }
    containment_ = std::max(containment_, t);
  }
}

Lattice Lattice::standard(const Context& ctx, std::size_t dim) {
  return Lattice(ctx, SquareMatrix::identity(dim), std::vector<int>(dim, 0), 0);
}

Lattice Lattice::from_generators(const Context& ctx, std::size_t dim,
                                 const std::vector<std::vector<Int>>& generators, int shift,
                                 int containment) {
  if (containment > ctx.precision()) {
    throw PrecisionError("lattice needs " + std::to_string(containment) +
                         " p-adic digits but the precision is " + std::to_string(ctx.precision()));
  }
  for (const auto& g : generators) {
    if (g.size() != dim) throw PreconditionError("generator of the wrong dimension");
  }
  auto h = hermite_mod(ctx, dim, generators);
  const int m = min_entry_valuation(ctx, h.basis);
  if (m > 0) {
    // Divide out p^m: the Hermite columns are an exact basis, so their
    // quotients span p^-m C, which still contains p^k Z_p^d.
    std::vector<std::vector<Int>> cols(dim, std::vector<Int>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) cols[j][i] = h.basis(i, j) / ctx.power(m);
    }
    h = hermite_mod(ctx, dim, std::move(cols));
    shift += m;
  }
  return Lattice(ctx, std::move(h.basis), std::move(h.exps), shift);
}

std::vector<std::vector<Int>> Lattice::hermite_columns() const {
  std::vector<std::vector<Int>> cols(dimension(), std::vector<Int>(dimension()));
  for (std::size_t j = 0; j < dimension(); ++j) {
    for (std::size_t i = 0; i < dimension(); ++i) cols[j][i] = basis_(i, j);
  }
  return cols;
}

bool Lattice::canonical_contains(std::vector<Int> r) const {
  const std::size_t d = basis_.n;
  const int k = ctx_.precision();
  for (auto& x : r) x = ctx_.reduce(x);
  for (std::size_t row = d; row-- > 0;) {
    if (r[row] == 0) continue;
    if (exps_[row] >= k || ctx_.valuation(r[row]) < exps_[row]) return false;
    const Int c = r[row] / ctx_.power(exps_[row]);
    for (std::size_t i = 0; i <= row; ++i) r[i] = ctx_.sub(r[i], ctx_.mul(c, basis_(i, row)));
  }
  return true;
}

bool Lattice::contains(const PadicVector& v) const {
  if (v.dimension() != dimension()) throw PreconditionError("vector of the wrong dimension");
  if (v.is_zero()) return true;
  if (v.min_valuation() < shift_) return false;
  return canonical_contains(v.residues(shift_));
}

bool Lattice::contains(const std::vector<Int>& v) const {
  return contains(PadicVector::from_integers(ctx_, v));
}

bool Lattice::is_subset_of(const Lattice& other) const {
  if (!(ctx_ == other.ctx_) || dimension() != other.dimension()) {
    throw PreconditionError("lattices over different Q_p^d");
  }
  const int t = shift_ - other.shift_;
  if (t < 0) return false;
  if (t >= ctx_.precision()) return true;
  for (const auto& col : hermite_columns()) {
    std::vector<Int> scaled(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) scaled[i] = ctx_.mul(col[i], ctx_.power(t));
    if (!other.canonical_contains(scaled)) return false;
  }
  return true;
}

Lattice Lattice::dilated(int e) const {
  Lattice out = *this;
  out.shift_ += e;
  return out;
}

LatticeClass Lattice::lattice_class() const { return LatticeClass(*this); }

std::vector<PadicVector> Lattice::basis() const {
  std::vector<PadicVector> out;
  for (const auto& col : hermite_columns()) {
    out.push_back(PadicVector::from_integers(ctx_, col).scaled(shift_));
  }
  return out;
}

nlohmann::json Lattice::to_json() const {
  return {{"shift", shift_}, {"columns", hermite_columns()}};
}

bool operator<(const Lattice& a, const Lattice& b) {
  return std::tie(a.shift_, a.exps_, a.basis_.a) < std::tie(b.shift_, b.exps_, b.basis_.a);
}

LatticeClass::LatticeClass(const Lattice& any) : rep_(any.dilated(-any.shift())) {}

void LatticeChain::validate() const {
  if (lattices.size() < 2) throw InvariantError("chain needs at least two lattices");
  for (std::size_t j = 1; j < lattices.size(); ++j) {
    if (!lattices[j - 1].is_subset_of(lattices[j]) || lattices[j - 1] == lattices[j]) {
      throw InvariantError("chain is not strictly increasing at position " + std::to_string(j));
    }
  }
  if (!(lattices.front() == lattices.back().dilated(1))) {
    throw InvariantError("chain does not start at p times its top lattice");
  }
  if (lattices.size() - 1 > lattices.back().dimension()) {
    throw InvariantError("chain longer than the dimension allows");
  }
}

}  // namespace cnet::padic
