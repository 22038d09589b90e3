#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "clusternet/padic/context.hpp"
#include "clusternet/padic/mod_matrix.hpp"

namespace cnet::padic {

class LatticeClass;

/// Full-rank Z_p-lattice in Q_p^d, stored as p^shift * C where C is in
/// canonical Hermite form: upper triangular basis columns, diagonal
/// p^{a_i} (0 <= a_i <= k), entries above the diagonal in [0, p^{a_i}),
/// and C inside Z_p^d but not inside pZ_p^d.
///
/// C must contain p^k Z_p^d; constructors raise PrecisionError when they
/// cannot guarantee it. Everything else is then exact arithmetic mod p^k.
class Lattice {
 public:
  /// Z_p^d.
  static Lattice standard(const Context& ctx, std::size_t dim);

  /// p^shift * span(generators). `containment` is an exponent e with
  /// p^e Z_p^d inside span(generators); it must not exceed the precision.
  static Lattice from_generators(const Context& ctx, std::size_t dim,
                                 const std::vector<std::vector<Int>>& generators, int shift,
                                 int containment);

  const Context& context() const { return ctx_; }
  std::size_t dimension() const { return basis_.n; }
  int shift() const { return shift_; }
  const std::vector<int>& exponents() const { return exps_; }
  /// Canonical basis of C as exact integer columns.
  const SquareMatrix& hermite() const { return basis_; }
  std::vector<std::vector<Int>> hermite_columns() const;
  /// Smallest e with p^e Z_p^d inside C.
  int containment() const { return containment_; }

  bool contains(const PadicVector& v) const;
  /// v is an integer vector (exact valuations).
  bool contains(const std::vector<Int>& v) const;
  bool is_subset_of(const Lattice& other) const;
  Lattice dilated(int e) const;
  LatticeClass lattice_class() const;
  /// Z_p-basis p^shift * (columns of C).
  std::vector<PadicVector> basis() const;

  nlohmann::json to_json() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.shift_ == b.shift_ && a.exps_ == b.exps_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Lattice& a, const Lattice& b);

 private:
  Lattice(Context ctx, SquareMatrix basis, std::vector<int> exps, int shift);
  bool canonical_contains(std::vector<Int> residues) const;

  Context ctx_;
  SquareMatrix basis_;
  std::vector<int> exps_;
  int shift_ = 0;
  int containment_ = 0;
};

/// Lattice modulo dilations by powers of p, held by its canonical
/// representative (shift 0).
class LatticeClass {
 public:
  explicit LatticeClass(const Lattice& any);
  const Lattice& representative() const { return rep_; }
  friend bool operator==(const LatticeClass& a, const LatticeClass& b) { return a.rep_ == b.rep_; }

 private:
  Lattice rep_;
};

/// Nested lattices L_0 ⊂ L_1 ⊂ ... ⊂ L_m with L_0 = p L_m.
struct LatticeChain {
  std::vector<Lattice> lattices;

  /// Throws InvariantError unless inclusions are strict and L_0 = p L_m.
  void validate() const;
  const Lattice& top() const { return lattices.back(); }
  friend bool operator==(const LatticeChain&, const LatticeChain&) = default;
};

}  // namespace cnet::padic
