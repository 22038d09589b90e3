#include <random>

#include "doctest.h"

#include "clusternet/errors.hpp"
#include "clusternet/padic/axioms.hpp"
#include "clusternet/padic/building.hpp"
#include "clusternet/padic/norm.hpp"

using namespace cnet::padic;
using cnet::Rational;

namespace {

// Exact integer evaluation: max_i q_i p^(scale - v_p((F z)_i)).
Rational direct_norm(Int p, const SquareMatrix& f, const std::vector<Rational>& q, int scale,
                     const std::vector<Int>& z) {
  Rational best = 0;
  for (std::size_t i = 0; i < f.n; ++i) {
    Int y = 0;
    for (std::size_t j = 0; j < f.n; ++j) y += f(i, j) * z[j];
    if (y == 0) continue;
    int v = 0;
    while (y % p == 0) {
      y /= p;
      ++v;
    }
    best = std::max(best, Rational(q[i] * rational_power(p, scale - v)));
  }
  return best;
}

SquareMatrix random_frame(std::mt19937& rng, const Context& ctx, std::size_t d) {
  std::uniform_int_distribution<Int> entry(-6, 6);
  for (;;) {
    SquareMatrix m(d);
    for (auto& x : m.a) x = entry(rng);
    const mpz_class det = det_exact(m);
    if (det == 0) continue;
    if (ctx.integer_valuation(det.get_si()) >= ctx.precision()) continue;
    return m;
  }
}

std::vector<Int> window_point(Int code, Int base, std::size_t d) {
  std::vector<Int> x(d);
  for (std::size_t i = d; i-- > 0;) {
    x[i] = code % base;
    code /= base;
  }
  return x;
}

}  // namespace

TEST_SUITE("padic_norm") {
  TEST_CASE("norm spec validation") {
    const Context c(2, 6);
    CHECK_THROWS_AS(NormSpec::diagonal(c, {Rational(1, 2), Rational(1)}), cnet::PreconditionError);
    CHECK_THROWS_AS(NormSpec::diagonal(c, {Rational(3, 2)}), cnet::PreconditionError);
    CHECK_THROWS_AS(NormSpec::diagonal(c, {}), cnet::PreconditionError);
    CHECK_THROWS_AS(NormSpec(c, SquareMatrix(2), {Rational(1), Rational(1)}), cnet::PreconditionError);
    SquareMatrix deep(2);
    deep.a = {2, 0, 0, 32};
    CHECK_THROWS_AS(NormSpec(c, deep, {Rational(1), Rational(1)}), cnet::PrecisionError);
    CHECK_THROWS_AS(NormSpec(c, SquareMatrix::identity(2), {Rational(1)}), cnet::PreconditionError);

    const auto n = NormSpec::diagonal(c, {Rational(3, 5), Rational(4, 5)});
    CHECK(n.generic());
    CHECK(n.increasing());
    CHECK_FALSE(NormSpec::diagonal(c, {Rational(4, 5), Rational(4, 5)}).generic());
    CHECK_FALSE(NormSpec::diagonal(c, {Rational(4, 5), Rational(3, 5)}).increasing());

    SquareMatrix f(2);
    f.a = {2, 1, 0, 3};
    const NormSpec g(Context(3, 4), f, {Rational(1), Rational(1)});
    CHECK(g.det_valuation() == 1);
    CHECK(g.det_unit() == 2);
  }

  TEST_CASE("small values") {
    const Context c(2, 6);
    const auto n = NormSpec::diagonal(c, {Rational(3, 5), Rational(4, 5)});
    CHECK(norm_eval(n, std::vector<Int>{2, 1}) == Rational(4, 5));
    CHECK(norm_eval(n, std::vector<Int>{1, 2}) == Rational(3, 5));
    CHECK(norm_eval(n, std::vector<Int>{0, 4}) == Rational(1, 5));
    CHECK(norm_eval(n, std::vector<Int>{0, 0}) == 0);
    CHECK(rational_power(3, -2) == Rational(1, 9));
    const auto tiny = PadicVector::from_integers(c, std::vector<Int>{1, 0}).scaled(-3);
    CHECK(norm_eval(n, tiny) == Rational(24, 5));
  }

  TEST_CASE("evaluation matches exact integer arithmetic") {
    std::mt19937 rng(61);
    for (Int p : {2, 3, 5}) {
      const Context c(p, 6);
      for (std::size_t d : {1u, 2u, 3u}) {
        for (int trial = 0; trial < 10; ++trial) {
          const auto f = random_frame(rng, c, d);
          std::vector<Rational> q;
          for (std::size_t i = 0; i < d; ++i) q.push_back(Rational(2 * p + static_cast<Int>(i)) / (2 * p + static_cast<Int>(d)));
          const int scale = trial % 3 - 1;
          const NormSpec n(c, f, q, scale);
          std::uniform_int_distribution<Int> coord(-200, 200);
          for (int s = 0; s < 30; ++s) {
            std::vector<Int> z(d);
            for (auto& x : z) x = coord(rng);
            CHECK(norm_eval(n, z) == direct_norm(p, f, q, scale, z));
          }
        }
      }
    }
  }

  TEST_CASE("balls contain exactly the points within the radius") {
    std::mt19937 rng(62);
    for (Int p : {2, 3}) {
      const Context c(p, 8);
      const std::size_t d = 2;
      const int w = 3;
      Int base = 1;
      for (int i = 0; i < w; ++i) base *= p;
      for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_frame(rng, c, d);
        const std::vector<Rational> q{Rational(p + 1, p + 2), Rational(1)};
        const NormSpec n(c, f, q);
        for (const Rational& r : std::vector<Rational>{1, Rational(1, p), q[0] / p, q[0] / (p * p)}) {
          const auto ball = ball_of_radius(n, r);
          CHECK(is_ball(n, ball));
          CHECK(sup_on(n, ball) <= r);
          for (Int code = 0; code < base * base; ++code) {
            const auto x = window_point(code, base, d);
            CHECK(ball.contains(x) == (norm_eval(n, x) <= r));
          }
        }
      }
    }
    const auto n = NormSpec::diagonal(Context(2, 6), {Rational(3, 5), Rational(4, 5)});
    CHECK_THROWS_AS(ball_of_radius(n, 0), cnet::PreconditionError);
    const auto b = ball_of_radius(n, Rational(3, 5));
    CHECK(b == Lattice::from_generators(n.context(), 2, {{1, 0}, {0, 2}}, 0, 1));
    CHECK(ball_of_radius(n, Rational(3, 10)) == b.dilated(1));
  }

  TEST_CASE("supremum is attained on a basis") {
    std::mt19937 rng(63);
    const Context c(3, 6);
    for (int trial = 0; trial < 20; ++trial) {
      const NormSpec n(c, random_frame(rng, c, 2), {Rational(1, 2), Rational(5, 6)});
      std::uniform_int_distribution<Int> coord(-30, 30);
      const auto l = Lattice::from_generators(c, 2, {{coord(rng), coord(rng)}, {coord(rng), coord(rng)}, {9, 0}, {0, 9}}, trial % 3, 2);
      Rational best = 0;
      for (const auto& b : l.basis()) best = std::max(best, norm_eval(n, b));
      CHECK(sup_on(n, l) == best);
      CHECK(is_ball(n, l) == (ball_of_radius(n, best) == l));
    }
  }

  TEST_CASE("intermediary balls") {
    const Context c(2, 6);
    const auto z = Lattice::standard(c, 2);
    const auto n = NormSpec::diagonal(c, {Rational(3, 5), Rational(4, 5)});
    const auto chain = intermediary_balls(n, z);
    REQUIRE(chain.lattices.size() == 3);
    CHECK(chain.lattices[1] == Lattice::from_generators(c, 2, {{1, 0}, {0, 2}}, 0, 1));
    CHECK_NOTHROW(chain.validate());

    CHECK(intermediary_balls(NormSpec::diagonal(c, {Rational(4, 5), Rational(4, 5)}), z).lattices.size() == 2);
    const auto three = NormSpec::diagonal(Context(3, 6), {Rational(1, 2), Rational(2, 3), Rational(5, 6)});
    CHECK(intermediary_balls(three, Lattice::standard(three.context(), 3)).lattices.size() == 4);

    const auto skew = Lattice::from_generators(c, 2, {{1, 1}, {0, 2}}, 0, 1);
    CHECK_FALSE(is_ball(n, skew));
    CHECK_THROWS_AS(intermediary_balls(n, skew), cnet::PreconditionError);

    // Only the balls of the identity norm sit in the generic chain.
    std::size_t balls = 0;
    for (const auto& k : lattices_between(z)) balls += is_ball(n, k) ? 1 : 0;
    CHECK(balls == 3);
  }

  TEST_CASE("axiom kernels agree") {
    std::mt19937 rng(64);
    for (Int p : {2, 3}) {
      const Context c(p, 8);
      for (std::size_t d : {1u, 2u}) {
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<Rational> q;
          for (std::size_t i = 0; i < d; ++i) q.push_back(Rational(p + 1 + static_cast<Int>(i)) / (p + 1 + static_cast<Int>(d)));
          const NormSpec n(c, random_frame(rng, c, d), q, trial - 1);
          const int w = d == 1 ? 3 : 2;
          const auto fast = check_norm_axioms(n, w);
          const auto slow = check_norm_axioms_serial(n, w);
          CHECK(fast.passed());
          CHECK(slow.passed());
          CHECK(fast.points == slow.points);
          CHECK(fast.pairs == slow.pairs);
          CHECK_FALSE(fast.witness.has_value());
        }
      }
    }
    const auto n = NormSpec::diagonal(Context(2, 4), {Rational(1)});
    CHECK_THROWS_AS(check_norm_axioms(n, 0), cnet::PreconditionError);
    CHECK_THROWS_AS(check_norm_axioms(n, 4), cnet::PrecisionError);
    CHECK(check_norm_axioms(n, 3).points == 8);
  }
}
