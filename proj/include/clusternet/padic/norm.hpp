#pragma once

#include <cstddef>
#include <vector>

#include "clusternet/padic/context.hpp"
#include "clusternet/padic/lattice.hpp"
#include "clusternet/padic/mod_matrix.hpp"
#include "clusternet/rational.hpp"

namespace cnet::padic {

/// N(z) = max_i q_i |(A z)_i|_p with A = p^-scale * frame. The frame is an
/// integer matrix taken mod p^k whose determinant must have valuation
/// below k; weights satisfy 1/p < q_i <= 1.
class NormSpec {
 public:
  NormSpec(Context ctx, SquareMatrix frame, std::vector<Rational> weights, int scale = 0);
  static NormSpec diagonal(const Context& ctx, std::vector<Rational> weights);

  const Context& context() const { return ctx_; }
  std::size_t dimension() const { return frame_.n; }
  const SquareMatrix& frame() const { return frame_; }
  const std::vector<Rational>& weights() const { return weights_; }
  int scale() const { return scale_; }

  /// Weights pairwise distinct.
  bool generic() const;
  /// Weights strictly increasing.
  bool increasing() const;

  /// det(frame) = p^v * w with w a unit.
  int det_valuation() const { return det_val_; }
  Int det_unit() const { return det_unit_; }

 private:
  Context ctx_;
  SquareMatrix frame_;
  std::vector<Rational> weights_;
  int scale_;
  int det_val_ = 0;
  Int det_unit_ = 1;
};

/// p^e as an exact rational.
Rational rational_power(Int p, int e);

/// What N(z) depends on: s, the smallest coordinate valuation of z, and the
/// valuation of each row of frame * p^-s z mod p^k (k for a row that
/// vanishes there). `rows` is empty for z = 0.
struct NormProfile {
  int shift = 0;
  std::vector<int> rows;
};

NormProfile norm_profile(const NormSpec& n, const PadicVector& z);
/// Throws PrecisionError when the profile leaves the maximum undecided.
Rational norm_value(const NormSpec& n, const NormProfile& profile);

/// Exact norm value, 0 for the zero vector. Throws PrecisionError when the
/// residues available at precision k cannot decide the maximum.
Rational norm_eval(const NormSpec& n, const PadicVector& z);
Rational norm_eval(const NormSpec& n, const std::vector<Int>& z);

/// {z : N(z) <= R}. Throws PrecisionError if the ball cannot be held at
/// precision k.
Lattice ball_of_radius(const NormSpec& n, const Rational& radius);

/// max of N over a lattice.
Rational sup_on(const NormSpec& n, const Lattice& lattice);
bool is_ball(const NormSpec& n, const Lattice& lattice);

/// Every N-ball K with pL ⊆ K ⊆ L, ascending. Throws PreconditionError when
/// L is not an N-ball.
LatticeChain intermediary_balls(const NormSpec& n, const Lattice& lattice);

}  // namespace cnet::padic
