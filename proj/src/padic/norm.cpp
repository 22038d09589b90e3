#include "clusternet/padic/norm.hpp"

#include <algorithm>
#include <set>

#include "clusternet/errors.hpp"

namespace cnet::padic {

Rational rational_power(Int p, int e) {
  mpz_class base(static_cast<long>(p));
  mpz_class mag;
  mpz_pow_ui(mag.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(mag);
  Rational r(mpz_class(1), mag);
  r.canonicalize();
  return r;
}

NormSpec::NormSpec(Context ctx, SquareMatrix frame, std::vector<Rational> weights, int scale)
    : ctx_(ctx), frame_(std::move(frame)), weights_(std::move(weights)), scale_(scale) {
  const std::size_t d = frame_.n;
  if (d == 0) throw PreconditionError("norm on a zero-dimensional space");
  if (weights_.size() != d) {
    throw PreconditionError("expected " + std::to_string(d) + " weights, got " +
                            std::to_string(weights_.size()));
  }
  const Rational lower(mpz_class(1), mpz_class(static_cast<long>(ctx_.prime())));
  for (auto& q : weights_) {
    q.canonicalize();
    if (q <= lower || q > 1) {
      throw PreconditionError("weight " + to_string(q) + " outside (1/" +
                              std::to_string(ctx_.prime()) + ", 1]");
    }
  }
  for (auto& x : frame_.a) x = ctx_.reduce(x);
  mpz_class det = det_exact(frame_);
  if (det == 0) throw PreconditionError("frame matrix is singular");
  const mpz_class p(static_cast<long>(ctx_.prime()));
  while (det % p == 0) {
    det /= p;
    ++det_val_;
  }
  if (det_val_ >= ctx_.precision()) {
    throw PrecisionError("frame determinant has valuation " + std::to_string(det_val_) +
                         ", not below the precision " + std::to_string(ctx_.precision()));
  }
  mpz_class unit = det % mpz_class(static_cast<long>(ctx_.modulus()));
  det_unit_ = ctx_.reduce(unit.get_si());
}

NormSpec NormSpec::diagonal(const Context& ctx, std::vector<Rational> weights) {
  const std::size_t d = weights.size();
  return NormSpec(ctx, SquareMatrix::identity(d), std::move(weights), 0);
}

bool NormSpec::generic() const {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    for (std::size_t j = i + 1; j < weights_.size(); ++j) {
      if (weights_[i] == weights_[j]) return false;
    }
  }
  return true;
}

bool NormSpec::increasing() const {
  for (std::size_t i = 1; i < weights_.size(); ++i) {
    if (!(weights_[i - 1] < weights_[i])) return false;
  }
  return true;
}

NormProfile norm_profile(const NormSpec& n, const PadicVector& z) {
  const Context& ctx = n.context();
  if (!(z.context() == ctx) || z.dimension() != n.dimension()) {
    throw PreconditionError("vector does not match the norm's p, d or precision");
  }
  NormProfile out;
  if (z.is_zero()) return out;
  out.shift = z.min_valuation();
  const auto y = apply_mod(ctx, n.frame(), z.residues(out.shift));
  out.rows.reserve(y.size());
  for (Int r : y) out.rows.push_back(ctx.valuation(r));
  return out;
}

Rational norm_value(const NormSpec& n, const NormProfile& profile) {
  if (profile.rows.empty()) return 0;
  const Context& ctx = n.context();
  // Rows that vanish mod p^k only bound the value from above.
  bool determined = false;
  Rational best = 0;
  Rational bound = 0;
  for (std::size_t i = 0; i < profile.rows.size(); ++i) {
    const int v = profile.rows[i];
    const Rational term = n.weights()[i] * rational_power(ctx.prime(), n.scale() - v - profile.shift);
    if (v < ctx.precision()) {
      if (!determined || term > best) best = term;
      determined = true;
    } else {
      bound = std::max(bound, term);
    }
  }
  if (!determined || bound > best) {
    throw PrecisionError("norm undetermined at precision " + std::to_string(ctx.precision()));
  }
  return best;
}

Rational norm_eval(const NormSpec& n, const PadicVector& z) {
  return norm_value(n, norm_profile(n, z));
}

Rational norm_eval(const NormSpec& n, const std::vector<Int>& z) {
  return norm_eval(n, PadicVector::from_integers(n.context(), z));
}

Lattice ball_of_radius(const NormSpec& n, const Rational& radius) {
  if (radius <= 0) throw PreconditionError("ball radius must be positive");
  const Context& ctx = n.context();
  const std::size_t d = n.dimension();
  const Int p = ctx.prime();

  // v_i: smallest integer with q_i p^(scale - v_i) <= R.
  std::vector<int> v(d);
  for (std::size_t i = 0; i < d; ++i) {
    int e = 0;
    Rational t = n.weights()[i] * rational_power(p, n.scale());
    while (t > radius) {
      t /= p;
      ++e;
    }
    while (t * p <= radius) {
      t *= p;
      --e;
    }
    v[i] = e;
  }
  const int vmin = *std::min_element(v.begin(), v.end());
  const int vmax = *std::max_element(v.begin(), v.end());
  const int delta = n.det_valuation();
  const int containment = delta + vmax - vmin;
  if (containment > ctx.precision()) {
    throw PrecisionError("ball needs " + std::to_string(containment) +
                         " p-adic digits but the precision is " + std::to_string(ctx.precision()));
  }

  const Int winv = ctx.inverse(n.det_unit());
  const SquareMatrix adj = adjugate_mod(ctx, n.frame());
  std::vector<std::vector<Int>> gens(d, std::vector<Int>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const Int s = ctx.mul(winv, ctx.power(v[j] - vmin));
    for (std::size_t i = 0; i < d; ++i) gens[j][i] = ctx.mul(s, adj(i, j));
  }
  return Lattice::from_generators(ctx, d, gens, vmin - delta, containment);
}

Rational sup_on(const NormSpec& n, const Lattice& lattice) {
  const Context& ctx = n.context();
  if (!(lattice.context() == ctx) || lattice.dimension() != n.dimension()) {
    throw PreconditionError("lattice does not match the norm's p, d or precision");
  }
  const auto cols = lattice.hermite_columns();
  std::vector<std::vector<Int>> images;
  for (const auto& c : cols) images.push_back(apply_mod(ctx, n.frame(), c));

  Rational best = 0;
  for (std::size_t i = 0; i < n.dimension(); ++i) {
    int minval = ctx.precision();
    for (const auto& y : images) minval = std::min(minval, ctx.valuation(y[i]));
    if (minval >= ctx.precision()) {
      throw PrecisionError("supremum undetermined at precision " + std::to_string(ctx.precision()));
    }
    const Rational term =
        n.weights()[i] * rational_power(ctx.prime(), n.scale() - minval - lattice.shift());
    best = std::max(best, term);
  }
  return best;
}

bool is_ball(const NormSpec& n, const Lattice& lattice) {
  return ball_of_radius(n, sup_on(n, lattice)) == lattice;
}

LatticeChain intermediary_balls(const NormSpec& n, const Lattice& lattice) {
  const Rational top = sup_on(n, lattice);
  if (!(ball_of_radius(n, top) == lattice)) {
    throw PreconditionError("lattice is not a ball of this norm");
  }
  const Int p = n.context().prime();
  const Rational floor = top / p;

  // Within (R/p, R] every weight contributes exactly one threshold.
  std::set<Rational> radii{floor, top};
  for (std::size_t i = 0; i < n.dimension(); ++i) {
    Rational t = n.weights()[i] * rational_power(p, n.scale());
    while (t > top) t /= p;
    while (t * p <= top) t *= p;
    radii.insert(t);
  }

  LatticeChain chain;
  for (const auto& r : radii) {
    auto ball = ball_of_radius(n, r);
    if (chain.lattices.empty() || !(chain.lattices.back() == ball)) {
      chain.lattices.push_back(std::move(ball));
    }
  }
  return chain;
}

}  // namespace cnet::padic
