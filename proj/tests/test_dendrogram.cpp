#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "clusternet/dendrogram.hpp"
#include "clusternet/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using cnet::Cluster;
using cnet::Dendrogram;
using cnet::DistanceMatrix;
using cnet::MemberSet;
using cnet::Rational;

namespace {

std::set<std::string> cluster_names(const Dendrogram& t) {
  std::set<std::string> out;
  for (const auto& c : t.clusters()) out.insert(cnet::member_names(c.members, t.labels()));
  return out;
}

std::set<std::pair<std::string, std::string>> edge_names(const Dendrogram& t) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [c, p] : t.edges()) {
    out.emplace(cnet::member_names(t.clusters()[c].members, t.labels()),
                cnet::member_names(t.clusters()[p].members, t.labels()));
  }
  return out;
}

// Clusters a brute-force ε-sweep produces: blocks of the threshold graph at
// 0 and at every entry value.
std::set<std::vector<std::size_t>> sweep_oracle(const DistanceMatrix& d) {
  std::set<std::vector<std::size_t>> out;
  std::set<Rational> levels{Rational(0)};
  for (const auto& x : d.entries()) levels.insert(x);
  for (const auto& eps : levels) {
    for (auto& b : oracle::threshold_blocks(d, eps)) out.insert(b);
  }
  return out;
}

void check_axioms(const Dendrogram& t, const cnet::UltrametricMatrix& u) {
  const std::size_t n = t.labels().size();
  MemberSet covered(n);
  for (auto leaf : t.leaves()) covered |= t.clusters()[leaf].members;
  CHECK(covered.all());
  std::set<MemberSet> seen;
  for (const auto& c : t.clusters()) CHECK(seen.insert(c.members).second);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Cluster& s = cnet::sup_cluster(t, t.labels()[a], t.labels()[b]);
      CHECK(s.members.test(a));
      CHECK(s.members.test(b));
      CHECK(s.radius == u(a, b));
      for (const auto& c : t.clusters()) {
        if (c.members.test(a) && c.members.test(b)) CHECK(s.members.is_subset_of(c.members));
      }
    }
  }
  for (const auto& c : t.clusters()) {
    Rational r = 0;
    for (auto i : cnet::members_of(c.members)) {
      for (auto j : cnet::members_of(c.members)) r = std::max(r, u(i, j));
    }
    CHECK(c.radius == r);
  }
}

}  // namespace

TEST_SUITE("dendrogram") {
  TEST_CASE("trees of the three-point figures") {
    const auto a1 = cnet::build_dendrogram(fixture::fig1());
    CHECK(cluster_names(a1) == std::set<std::string>{"A", "B", "C", "AB", "ABC"});
    CHECK(edge_names(a1) == std::set<std::pair<std::string, std::string>>{
                                {"A", "AB"}, {"B", "AB"}, {"AB", "ABC"}, {"C", "ABC"}});
    const auto b1 = cnet::build_dendrogram(fixture::fig2());
    CHECK(cluster_names(b1) == std::set<std::string>{"A", "B", "C", "BC", "ABC"});
    CHECK(edge_names(b1) == std::set<std::pair<std::string, std::string>>{
                                {"B", "BC"}, {"C", "BC"}, {"BC", "ABC"}, {"A", "ABC"}});
  }

  TEST_CASE("single point and simultaneous merges") {
    const auto one = cnet::build_dendrogram(DistanceMatrix({"x"}, {0}));
    CHECK(one.clusters().size() == 1);
    CHECK(one.edges().empty());
    const auto tri = cnet::build_dendrogram(DistanceMatrix({"A", "B", "C"}, {0, 1, 1, 1, 0, 1, 1, 1, 0}));
    CHECK(cluster_names(tri) == std::set<std::string>{"A", "B", "C", "ABC"});
    CHECK_THROWS_AS(cnet::build_dendrogram(DistanceMatrix({}, {})), cnet::StructuralError);
  }

  TEST_CASE("zero distances give merged leaves") {
    const auto t = cnet::build_dendrogram(DistanceMatrix({"A", "B", "C"}, {0, 0, 2, 0, 0, 2, 2, 2, 0}));
    CHECK(cluster_names(t) == std::set<std::string>{"AB", "C", "ABC"});
    CHECK(t.leaves().size() == 2);
  }

  TEST_CASE("sup and cuts") {
    const auto d = fixture::fig1();
    const auto t = cnet::build_dendrogram(d);
    const auto& ab = cnet::sup_cluster(t, "A", "B");
    CHECK(ab.members == fixture::set(d, "AB"));
    CHECK(ab.radius == 2);
    CHECK(cnet::sup_cluster(t, "A", "C").radius == 3);
    CHECK(cnet::sup_cluster(t, "A", "A").members == fixture::set(d, "A"));
    CHECK(cnet::sup_cluster(t, "A", "A").radius == 0);
    CHECK_THROWS_AS(cnet::sup_cluster(t, "A", "Z"), cnet::LookupError);

    CHECK(cnet::clusters_at(t, 2).blocks == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
    CHECK(cnet::clusters_at(t, 100).blocks.size() == 1);
    CHECK(cnet::clusters_at(t, 0).blocks.size() == 3);
    CHECK_THROWS_AS(cnet::clusters_at(t, -1), cnet::PreconditionError);
  }

  TEST_CASE("random matrices: sweep oracle, axioms, cuts") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 9);
      const auto d = oracle::random_dissimilarity(rng, n, trial % 2 == 1);
      const auto t = cnet::build_dendrogram(d);
      std::set<std::vector<std::size_t>> got;
      for (const auto& c : t.clusters()) got.insert(cnet::members_of(c.members));
      CHECK(got == sweep_oracle(d));
      check_axioms(t, cnet::chain_distance(d));
      for (const auto& eps : {Rational(0), Rational(1), Rational(2), Rational(5)}) {
        CHECK(cnet::clusters_at(t, eps) == cnet::epsilon_components(d, eps));
      }
      // Leaves are the zero classes.
      std::vector<std::vector<std::size_t>> leaves;
      for (auto l : t.leaves()) leaves.push_back(cnet::members_of(t.clusters()[l].members));
      std::sort(leaves.begin(), leaves.end());
      CHECK(leaves == cnet::zero_quotient(cnet::chain_distance(d)).blocks);
    }
  }

  TEST_CASE("constructor rejects malformed trees") {
    const std::vector<std::string> labels{"A", "B", "C"};
    auto s = [](std::initializer_list<std::size_t> m) { return cnet::make_member_set(3, m); };
    // valid
    CHECK_NOTHROW(Dendrogram(labels,
                             {{s({0}), 0}, {s({1}), 0}, {s({2}), 0}, {s({0, 1}), 1}, {s({0, 1, 2}), 2}},
                             {{0, 3}, {1, 3}, {3, 4}, {2, 4}}));
    // duplicate cluster
    CHECK_THROWS_AS(Dendrogram(labels, {{s({0}), 0}, {s({0}), 0}, {s({0, 1, 2}), 2}}, {}), cnet::InvariantError);
    // root not full
    CHECK_THROWS_AS(Dendrogram(labels, {{s({0}), 0}, {s({0, 1}), 1}}, {{0, 1}}), cnet::InvariantError);
    // skipped intermediate
    CHECK_THROWS_AS(Dendrogram(labels,
                               {{s({0}), 0}, {s({1}), 0}, {s({2}), 0}, {s({0, 1}), 1}, {s({0, 1, 2}), 2}},
                               {{0, 4}, {1, 3}, {3, 4}, {2, 4}}),
                    cnet::InvariantError);
    // missing parent
    CHECK_THROWS_AS(Dendrogram(labels,
                               {{s({0}), 0}, {s({1}), 0}, {s({2}), 0}, {s({0, 1}), 1}, {s({0, 1, 2}), 2}},
                               {{0, 3}, {1, 3}, {3, 4}}),
                    cnet::InvariantError);
    // two parents
    CHECK_THROWS_AS(Dendrogram(labels,
                               {{s({0}), 0}, {s({1}), 0}, {s({2}), 0}, {s({0, 1}), 1}, {s({0, 1, 2}), 2}},
                               {{0, 3}, {0, 4}, {1, 3}, {3, 4}, {2, 4}}),
                    cnet::InvariantError);
    // non-nesting edge
    CHECK_THROWS_AS(Dendrogram(labels,
                               {{s({0}), 0}, {s({1}), 0}, {s({2}), 0}, {s({0, 1}), 1}, {s({0, 1, 2}), 2}},
                               {{0, 3}, {1, 3}, {3, 4}, {2, 3}}),
                    cnet::InvariantError);
  }
}
