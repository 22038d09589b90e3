#include "clusternet/padic/context.hpp"

#include <limits>
#include <string>

#include "clusternet/errors.hpp"

namespace cnet::padic {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Context::Context(Int prime, int precision) : p_(prime), k_(precision), mod_(1) {
  if (!is_prime(prime)) throw PreconditionError(std::to_string(prime) + " is not prime");
  if (precision < 1) throw PreconditionError("precision must be at least 1");
  powers_.push_back(1);
  for (int i = 0; i < precision; ++i) {
    if (mod_ > ((Int{1} << 31) - 1) / p_) {
      throw PreconditionError("p^k = " + std::to_string(p_) + "^" + std::to_string(precision) +
                              " exceeds the 2^31 residue range");
    }
    mod_ *= p_;
    powers_.push_back(mod_);
  }
}

int Context::valuation(Int residue) const {
  residue = reduce(residue);
  if (residue == 0) return k_;
  int v = 0;
  while (residue % p_ == 0) {
    residue /= p_;
    ++v;
  }
  return v;
}

int Context::integer_valuation(Int x) const {
  if (x == 0) throw PreconditionError("valuation of zero");
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

Int Context::inverse(Int unit) const {
  unit = reduce(unit);
  if (unit % p_ == 0) throw PreconditionError("inverse of a non-unit");
  // Extended Euclid on (unit, p^k).
  Int a = unit, b = mod_, x0 = 1, x1 = 0;
  while (b != 0) {
    const Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return reduce(x0);
}

Padic Padic::from_integer(const Context& ctx, Int x) {
  if (x == 0) return {};
  const int v = ctx.integer_valuation(x);
  Int u = x;
  for (int i = 0; i < v; ++i) u /= ctx.prime();
  return {false, v, ctx.reduce(u)};
}

PadicVector PadicVector::from_integers(const Context& ctx, std::span<const Int> values) {
  std::vector<Padic> coords;
  coords.reserve(values.size());
  for (auto x : values) coords.push_back(Padic::from_integer(ctx, x));
  return PadicVector(ctx, std::move(coords));
}

bool PadicVector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.zero) return false;
  }
  return true;
}

int PadicVector::min_valuation() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& c : coords_) {
    if (!c.zero && c.valuation < best) best = c.valuation;
  }
  return best;
}

std::vector<Int> PadicVector::residues(int shift) const {
  std::vector<Int> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (c.zero) {
      out.push_back(0);
      continue;
    }
    const int e = c.valuation - shift;
    if (e < 0) throw PreconditionError("coordinate valuation below the requested shift");
    out.push_back(e >= ctx_.precision() ? 0 : ctx_.mul(ctx_.power(e), c.unit));
  }
  return out;
}

PadicVector PadicVector::scaled(int e) const {
  auto coords = coords_;
  for (auto& c : coords) {
    if (!c.zero) c.valuation += e;
  }
  return PadicVector(ctx_, std::move(coords));
}

}  // namespace cnet::padic
