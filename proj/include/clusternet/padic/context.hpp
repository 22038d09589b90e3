#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cnet::padic {

using Int = std::int64_t;

/// Prime and working precision k. Residues live in [0, p^k); p^k is kept
/// below 2^31 so that products of residues fit in 64 bits.
class Context {
 public:
  Context(Int prime, int precision);

  Int prime() const { return p_; }
  int precision() const { return k_; }
  Int modulus() const { return mod_; }

  Int reduce(Int x) const {
    x %= mod_;
    return x < 0 ? x + mod_ : x;
  }
  Int mul(Int a, Int b) const { return reduce(a * b); }
  Int add(Int a, Int b) const { return reduce(a + b); }
  Int sub(Int a, Int b) const { return reduce(a - b); }

  /// Valuation of a residue; precision() for 0.
  int valuation(Int residue) const;
  /// Exact p-adic valuation of a nonzero integer (not capped by k).
  int integer_valuation(Int x) const;
  /// Inverse of a unit residue. Throws PreconditionError when p divides it.
  Int inverse(Int unit) const;
  /// p^e for 0 <= e <= precision().
  Int power(int e) const { return powers_.at(static_cast<std::size_t>(e)); }

  friend bool operator==(const Context& a, const Context& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

 private:
  Int p_;
  int k_;
  Int mod_;
  std::vector<Int> powers_;
};

bool is_prime(Int n);

/// Element p^valuation * unit of Q_p with the unit known mod p^k, or exact 0.
struct Padic {
  bool zero = true;
  int valuation = 0;
  Int unit = 0;

  static Padic from_integer(const Context& ctx, Int x);
  friend bool operator==(const Padic&, const Padic&) = default;
};

/// Vector in Q_p^d.
class PadicVector {
 public:
  PadicVector(Context ctx, std::vector<Padic> coords) : ctx_(ctx), coords_(std::move(coords)) {}
  static PadicVector from_integers(const Context& ctx, std::span<const Int> values);

  const Context& context() const { return ctx_; }
  std::size_t dimension() const { return coords_.size(); }
  const std::vector<Padic>& coords() const { return coords_; }
  bool is_zero() const;

  /// Smallest coordinate valuation; undefined for the zero vector.
  int min_valuation() const;
  /// p^-shift * v as residues mod p^k. Requires every valuation >= shift.
  std::vector<Int> residues(int shift) const;
  /// p^e * v.
  PadicVector scaled(int e) const;

  friend bool operator==(const PadicVector& a, const PadicVector& b) {
    return a.ctx_ == b.ctx_ && a.coords_ == b.coords_;
  }

 private:
  Context ctx_;
  std::vector<Padic> coords_;
};

}  // namespace cnet::padic
