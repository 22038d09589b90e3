#include <set>

#include "doctest.h"

#include "clusternet/errors.hpp"
#include "clusternet/phylo.hpp"
#include "clusternet/serialize.hpp"
#include "fixtures.hpp"

using cnet::Rational;
using cnet::phylo::MarkerSet;
using cnet::phylo::SweepGrid;
using cnet::phylo::WeightVector;

namespace {

MarkerSet conflicting() {
  return MarkerSet({{"m1", cnet::read_matrix_csv_file(fixture::path("marker_ab_cd.csv"))},
                    {"m2", cnet::read_matrix_csv_file(fixture::path("marker_ac_bd.csv"))}});
}

std::set<std::string> vertex_names(const cnet::ClusterNetwork& net) {
  std::set<std::string> out;
  for (const auto& v : net.vertices()) out.insert(cnet::member_names(v.members, net.labels()));
  return out;
}

}  // namespace

TEST_SUITE("phylo") {
  TEST_CASE("combine") {
    const auto ms = conflicting();
    const auto& d1 = ms.markers()[0].distances;
    const auto& d2 = ms.markers()[1].distances;
    CHECK(cnet::phylo::combine(ms, {1, 0}) == d1);
    const auto sum = cnet::phylo::combine(ms, {1, 1});
    for (std::size_t k = 0; k < sum.entries().size(); ++k) {
      CHECK(sum.entries()[k] == d1.entries()[k] + d2.entries()[k]);
    }
    const auto scaled = cnet::phylo::combine(ms, {Rational(3, 2), 0});
    for (std::size_t k = 0; k < scaled.entries().size(); ++k) {
      CHECK(scaled.entries()[k] == Rational(3, 2) * d1.entries()[k]);
    }
    CHECK_THROWS_AS(cnet::phylo::combine(ms, {1}), cnet::StructuralError);
    CHECK_THROWS_AS(cnet::phylo::combine(ms, {0, 0}), cnet::StructuralError);
    CHECK_THROWS_AS(cnet::phylo::combine(ms, {-1, 2}), cnet::StructuralError);
  }

  TEST_CASE("scaling the weights keeps the clusters") {
    const auto ms = conflicting();
    for (const WeightVector& w : {WeightVector{1, 3}, WeightVector{2, 1}, WeightVector{1, 1}}) {
      const auto t = cnet::build_dendrogram(cnet::phylo::combine(ms, w));
      WeightVector w5;
      for (const auto& x : w) w5.push_back(x * 5);
      const auto t5 = cnet::build_dendrogram(cnet::phylo::combine(ms, w5));
      REQUIRE(t.clusters().size() == t5.clusters().size());
      for (std::size_t i = 0; i < t.clusters().size(); ++i) {
        CHECK(t.clusters()[i].members == t5.clusters()[i].members);
        CHECK(t5.clusters()[i].radius == 5 * t.clusters()[i].radius);
      }
    }
  }

  TEST_CASE("grids") {
    const auto g = SweepGrid::explicit_list({{1, 0}, {2, 0}, {0, 1}}, 2);
    CHECK(g.weights().size() == 2);
    CHECK_THROWS_AS(SweepGrid::explicit_list({}, 2), cnet::StructuralError);
    CHECK_THROWS_AS(SweepGrid::explicit_list({{0, 0}}, 2), cnet::StructuralError);
    const auto s = SweepGrid::simplex(4, 2);
    CHECK(s.weights().size() == 5);
    CHECK(s.weights().front() == WeightVector{1, 0});
    CHECK(SweepGrid::simplex(3, 3).weights().size() == 10);
  }

  TEST_CASE("conflicting markers give the two-rectangle network") {
    const auto ms = conflicting();
    const auto result = cnet::phylo::sweep(ms, SweepGrid::explicit_list({{1, 0}, {0, 1}}, 2));
    CHECK(vertex_names(result.network) ==
          std::set<std::string>{"A", "B", "C", "D", "AB", "CD", "AC", "BD", "ABCD"});
    CHECK(result.network.edges().size() == 12);

    const auto one = cnet::phylo::sweep(ms, SweepGrid::explicit_list({{1, 0}}, 2));
    CHECK(one.network.metric_ids().size() == 1);
    CHECK(cnet::phylo::sweep(ms, SweepGrid::explicit_list({{1, 0}, {1, 0}, {0, 1}}, 2)).network.vertices().size() ==
          result.network.vertices().size());
  }

  TEST_CASE("single marker sweep is that marker's tree") {
    const auto d = cnet::read_matrix_csv_file(fixture::path("fig1.csv"));
    const MarkerSet ms({{"only", d}});
    const auto result = cnet::phylo::sweep(ms, SweepGrid::simplex(3, 1));
    CHECK(cnet::restrict_to_metric(result.network, 0) == cnet::build_dendrogram(d));
  }

  TEST_CASE("identical trees are merged before fusion") {
    const auto ms = conflicting();
    const auto result = cnet::phylo::sweep(ms, SweepGrid::simplex(4, 2));
    std::size_t total = 0;
    for (const auto& [id, ws] : result.sources) total += ws.size();
    CHECK(total == 5);
    CHECK(result.network.metric_ids().size() == result.sources.size());
    CHECK(result.sources.size() == 3);
  }

  TEST_CASE("manifest and sweep spec") {
    const auto ms = cnet::phylo::read_manifest(fixture::path("markers.json"));
    CHECK(ms.size() == 2);
    CHECK(ms.markers()[0].id == "m1");
    const auto spec = nlohmann::json::parse(R"({"grid":{"type":"explicit","weights":[["1/2",1],[0.25,0]]}})");
    const auto g = cnet::phylo::read_sweep_spec(spec, 2);
    REQUIRE(g.weights().size() == 2);
    CHECK(g.weights()[0] == WeightVector{Rational(1, 2), 1});
    CHECK(g.weights()[1] == WeightVector{Rational(1, 4), 0});
    CHECK_THROWS_AS(cnet::phylo::read_sweep_spec(nlohmann::json::parse(R"({"grid":{"type":"cube"}})"), 2),
                    cnet::StructuralError);
    CHECK_THROWS_AS(cnet::phylo::read_manifest(fixture::path("missing.json")), cnet::StructuralError);
    CHECK_THROWS_AS(MarkerSet({{"a", fixture::fig1()}, {"b", fixture::fig4()}}), cnet::StructuralError);
    CHECK_THROWS_AS(MarkerSet({{"a", fixture::fig1()}, {"a", fixture::fig2()}}), cnet::StructuralError);
  }
}
