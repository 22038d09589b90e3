#include <algorithm>
#include <set>

#include "doctest.h"

#include "clusternet/errors.hpp"
#include "clusternet/padic/ball_network.hpp"
#include "clusternet/padic/building.hpp"
#include "clusternet/padic/fp_space.hpp"
#include "clusternet/padic/norm.hpp"
#include "clusternet/complex.hpp"
#include "oracles.hpp"

using namespace cnet::padic;
using cnet::Rational;

namespace {

std::vector<int> codes_of(const FpSubspace& w) {
  const int p = w.prime();
  const std::size_t d = w.ambient_dimension();
  int total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  std::vector<int> out;
  for (int code = 0; code < total; ++code) {
    std::vector<int> v(d);
    int c = code;
    for (std::size_t i = d; i-- > 0;) {
      v[i] = c % p;
      c /= p;
    }
    if (w.contains(v)) out.push_back(code);
  }
  return out;
}

LatticeChain chain_of(const std::vector<Lattice>& ls) { return LatticeChain{ls}; }

}  // namespace

TEST_SUITE("padic_building") {
  TEST_CASE("subspaces and flags against the closure oracle") {
    for (auto [p, d] : std::vector<std::pair<int, std::size_t>>{{2, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 4}}) {
      CAPTURE(p);
      CAPTURE(d);
      std::vector<std::vector<int>> ours;
      for (const auto& w : all_subspaces(p, d)) ours.push_back(codes_of(w));
      std::sort(ours.begin(), ours.end());
      auto expected = oracle::subspaces_by_closure(p, d);
      std::sort(expected.begin(), expected.end());
      CHECK(ours == expected);
      CHECK(subspace_count(p, d) == expected.size());

      const auto flags = complete_flags(p, d);
      CHECK(flags.size() == oracle::complete_flags_by_poset(p, d));
      CHECK(flags.size() == flag_count(p, d));
      for (const auto& f : flags) {
        REQUIRE(f.size() == d + 1);
        for (std::size_t i = 0; i < d; ++i) {
          CHECK(f[i].dimension() == i);
          CHECK(f[i].is_subset_of(f[i + 1]));
        }
      }
    }
    CHECK(flag_count(3, 3) == 52);
  }

  TEST_CASE("fp subspace basics") {
    const auto w = FpSubspace::span(3, 3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 0}});
    CHECK(w.dimension() == 1);
    CHECK(w.contains({2, 1, 0}));
    CHECK_FALSE(w.contains({1, 1, 0}));
    CHECK(w.with({0, 0, 1}).dimension() == 2);
    CHECK(w.is_subset_of(w.with({0, 0, 1})));
    CHECK(w < w.with({0, 0, 1}));
  }

  TEST_CASE("lattices between pL and L") {
    for (auto [p, d, strict] : std::vector<std::tuple<Int, std::size_t, std::size_t>>{
             {2, 2, 3}, {3, 2, 4}, {2, 3, 14}}) {
      const Context c(p, 6);
      const auto top = Lattice::standard(c, d);
      const auto between = lattices_between(top);
      CHECK(between.front() == top.dilated(1));
      CHECK(between.back() == top);
      CHECK(between.size() == strict + 2);
      std::set<Lattice> distinct(between.begin(), between.end());
      CHECK(distinct.size() == between.size());
      for (const auto& k : between) {
        CHECK(top.dilated(1).is_subset_of(k));
        CHECK(k.is_subset_of(top));
      }
    }
    // A non-standard top works the same way.
    const Context c(2, 6);
    const auto top = Lattice::from_generators(c, 2, {{1, 1}, {0, 4}}, 3, 2);
    for (const auto& k : lattices_between(top)) {
      CHECK(top.dilated(1).is_subset_of(k));
      CHECK(k.is_subset_of(top));
    }
  }

  TEST_CASE("precision limits on sandwich lattices") {
    const Context c(2, 3);
    const auto deep = Lattice::from_generators(c, 2, {{1, 0}}, 0, 3);
    CHECK(deep.containment() == 3);
    CHECK_THROWS_AS(lattices_between(deep), cnet::PrecisionError);
  }

  TEST_CASE("adjacency") {
    const Context c(2, 6);
    const auto z2 = Lattice::standard(c, 2);
    const auto between = lattices_between(z2);
    for (std::size_t i = 1; i + 1 < between.size(); ++i) {
      CHECK(is_adjacent(z2, between[i]));
      CHECK(is_adjacent(between[i], z2));
      CHECK(is_adjacent(z2, between[i].dilated(2)));
      for (std::size_t j = 1; j + 1 < between.size(); ++j) {
        if (i != j) CHECK_FALSE(is_adjacent(between[i], between[j]));
      }
    }
    CHECK_FALSE(is_adjacent(z2, z2));
    CHECK_FALSE(is_adjacent(z2, z2.dilated(1)));
    CHECK_FALSE(is_adjacent(z2, Lattice::from_generators(c, 2, {{1, 0}, {0, 4}}, 0, 2)));

    const auto z3 = Lattice::standard(c, 3);
    const auto line = sandwich_lattice(z3, FpSubspace::span(2, 3, {{1, 0, 0}}));
    const auto plane = sandwich_lattice(z3, FpSubspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}}));
    const auto other = sandwich_lattice(z3, FpSubspace::span(2, 3, {{0, 1, 1}, {0, 0, 1}}));
    CHECK(is_adjacent(line, plane));
    CHECK(is_adjacent(plane, line));
    CHECK_FALSE(is_adjacent(line, other));
  }

  TEST_CASE("maximal chains") {
    for (auto [p, d] : std::vector<std::pair<Int, std::size_t>>{{2, 2}, {3, 2}, {2, 3}}) {
      const Context c(p, 6);
      const auto chains = maximal_chains(Lattice::standard(c, d));
      CHECK(chains.size() == flag_count(static_cast<int>(p), d));
      std::set<std::vector<Lattice>> distinct;
      for (const auto& ch : chains) {
        CHECK_NOTHROW(ch.validate());
        CHECK(ch.lattices.size() == d + 1);
        distinct.insert(ch.lattices);
      }
      CHECK(distinct.size() == chains.size());
    }
  }

  TEST_CASE("basis from a chain") {
    const Context c(2, 6);
    const auto z = Lattice::standard(c, 2);
    const auto pz = z.dilated(1);
    const auto x_axis = Lattice::from_generators(c, 2, {{1, 0}, {0, 2}}, 0, 1);
    const auto y_axis = Lattice::from_generators(c, 2, {{2, 0}, {0, 1}}, 0, 1);
    const auto diagonal = Lattice::from_generators(c, 2, {{1, 1}, {0, 2}}, 0, 1);

    CHECK(basis_columns_from_chain(chain_of({pz, x_axis, z})) ==
          std::vector<std::vector<Int>>{{1, 0}, {0, 1}});
    CHECK(basis_columns_from_chain(chain_of({pz, y_axis, z})) ==
          std::vector<std::vector<Int>>{{0, 1}, {1, 0}});
    CHECK(basis_columns_from_chain(chain_of({pz, diagonal, z})) ==
          std::vector<std::vector<Int>>{{1, 1}, {0, 1}});

    const auto shifted = chain_of({pz.dilated(3), x_axis.dilated(3), z.dilated(3)});
    const auto vecs = basis_from_chain(shifted);
    CHECK(vecs[0] == PadicVector::from_integers(c, std::vector<Int>{8, 0}));

    CHECK_THROWS_AS(basis_from_chain(chain_of({pz, z})), cnet::PreconditionError);
  }

  TEST_CASE("every maximal chain splits along its basis") {
    for (auto [p, d] : std::vector<std::pair<Int, std::size_t>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
      const Context c(p, 6);
      for (const auto& top : {Lattice::standard(c, d), Lattice::standard(c, d).dilated(-2)}) {
        for (const auto& ch : maximal_chains(top)) {
          const auto cols = basis_columns_from_chain(ch);
          const auto check = check_basis_decomposition(ch, cols);
          CHECK(check.memberships);
          CHECK(check.decomposition);
          CHECK(check.det_valuation == check.expected_valuation);
          CHECK(check.failures.empty());
        }
      }
    }
    // A wrong basis is caught.
    const Context c(2, 6);
    const auto ch = maximal_chains(Lattice::standard(c, 2)).front();
    auto cols = basis_columns_from_chain(ch);
    std::swap(cols[0], cols[1]);
    CHECK_FALSE(check_basis_decomposition(ch, cols).passed());
  }

  TEST_CASE("norm from a chain and back") {
    const Context c(2, 8);
    const std::vector<Rational> q{Rational(3, 5), Rational(4, 5)};
    const auto z = Lattice::standard(c, 2);
    const auto standard_chain =
        chain_of({z.dilated(1), Lattice::from_generators(c, 2, {{1, 0}, {0, 2}}, 0, 1), z});
    const auto n = norm_from_chain(standard_chain, q);
    CHECK(n.scale() == 0);
    CHECK(n.frame() == SquareMatrix::identity(2));

    for (auto [p, d] : std::vector<std::pair<Int, std::size_t>>{{2, 2}, {3, 2}, {2, 3}}) {
      const Context ctx(p, 8);
      std::vector<Rational> weights;
      for (std::size_t i = 0; i < d; ++i) weights.push_back(Rational(p * 4 + static_cast<Int>(i) + 1) / (p * 4 + static_cast<Int>(d)));
      for (const auto& top : {Lattice::standard(ctx, d), Lattice::standard(ctx, d).dilated(1)}) {
        for (const auto& ch : maximal_chains(top)) {
          const auto norm = norm_from_chain(ch, weights);
          CHECK(intermediary_balls(norm, top) == ch);
          const auto basis = basis_from_chain(ch);
          for (std::size_t j = 0; j < d; ++j) CHECK(norm_eval(norm, basis[j]) == weights[j]);
        }
      }
    }
    CHECK_THROWS_AS(norm_from_chain(standard_chain, {Rational(4, 5), Rational(3, 5)}),
                    cnet::PreconditionError);
    CHECK_THROWS_AS(norm_from_chain(standard_chain, {Rational(3, 5)}), cnet::PreconditionError);
  }

  TEST_CASE("correspondence reports") {
    const auto a = verify_correspondence(2, 2, {Rational(3, 5), Rational(4, 5)}, 8, 2);
    CHECK(a.passed);
    CHECK(a.strictly_between == 3);
    CHECK(a.chain_count == 3);
    CHECK(a.round_trips_passed == 3);
    CHECK(a.identity_chain_length == 3);
    CHECK(a.collisions.empty());

    const auto b = verify_correspondence(3, 2, {Rational(1, 2), Rational(2, 3)}, 8);
    CHECK(b.passed);
    CHECK(b.strictly_between == 4);
    CHECK(b.chain_count == 4);

    const auto e = verify_correspondence(2, 3, {Rational(5, 8), Rational(3, 4), Rational(7, 8)}, 8);
    CHECK(e.passed);
    CHECK(e.strictly_between == 14);
    CHECK(e.chain_count == 21);
    CHECK(e.round_trips_passed == 21);

    const auto degenerate = verify_correspondence(2, 2, {Rational(4, 5), Rational(4, 5)}, 8);
    CHECK_FALSE(degenerate.generic);
    CHECK(degenerate.identity_chain_length == 2);
    CHECK(degenerate.passed);

    CHECK_THROWS_AS(verify_correspondence(2, 2, {Rational(4, 5), Rational(3, 5)}, 8),
                    cnet::PreconditionError);
    CHECK_THROWS_AS(verify_correspondence(2, 2, {Rational(3, 5), Rational(4, 5)}, 8, 8),
                    cnet::PrecisionError);
  }

  TEST_CASE("ball networks have the dimension of the space") {
    for (std::size_t d : {1u, 2u, 3u}) {
      CAPTURE(d);
      std::vector<Rational> q;
      for (std::size_t i = 0; i < d; ++i) q.push_back(Rational(5 + static_cast<long>(i)) / (5 + static_cast<long>(d)));
      const auto result = ball_network(2, d, q, {SquareMatrix::identity(d)}, all_orderings(d), 2);
      const auto& net = result.network;
      CHECK(net.labels().size() == (std::size_t{1} << (2 * d)));
      const auto complex = cnet::build_complex(net, net.all_metrics());
      CHECK(complex.max_dimension() == d);
      CHECK(cnet::network_dimension(net, net.all_metrics()).overall == d);
      if (d == 2) {
        for (const auto& s : complex.maximal_simplices()) CHECK(s.vertices.size() == 3);
      }
    }
    CHECK(all_orderings(3).size() == 6);
    CHECK_THROWS_AS(ball_network(2, 2, {Rational(3, 5), Rational(4, 5)}, {SquareMatrix::identity(2)},
                                 all_orderings(2), 5),
                    cnet::PreconditionError);
  }
}
