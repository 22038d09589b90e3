#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "clusternet/metric.hpp"
#include "clusternet/network.hpp"
#include "clusternet/rational.hpp"

namespace cnet::phylo {

/// Per-marker distance matrices over one set of taxa.
class MarkerSet {
 public:
  struct Marker {
    std::string id;
    DistanceMatrix distances;
  };

  /// Throws StructuralError on an empty list, repeated ids or differing label sets.
  explicit MarkerSet(std::vector<Marker> markers);

  const std::vector<Marker>& markers() const { return markers_; }
  std::size_t size() const { return markers_.size(); }
  const std::vector<std::string>& labels() const { return markers_.front().distances.labels(); }

 private:
  std::vector<Marker> markers_;
};

using WeightVector = std::vector<Rational>;

/// Nonnegative, not all zero. Throws StructuralError otherwise.
void check_weights(const WeightVector& w, std::size_t markers);

/// Weights divided by their sum.
WeightVector normalized(const WeightVector& w);

/// Weight vectors to evaluate, deduplicated up to positive scaling.
class SweepGrid {
 public:
  static SweepGrid explicit_list(std::vector<WeightVector> weights, std::size_t markers);
  /// All vectors (c_1/n, ..., c_m/n) with nonnegative integers c summing to n.
  static SweepGrid simplex(std::size_t resolution, std::size_t markers);

  const std::vector<WeightVector>& weights() const { return weights_; }

 private:
  std::vector<WeightVector> weights_;
};

/// d(X,Y) = sum_j w_j d_j(X,Y).
DistanceMatrix combine(const MarkerSet& markers, const WeightVector& w);

struct SweepResult {
  ClusterNetwork network;
  /// For each metric id of the network, the weight vectors that produced
  /// that (deduplicated) dendrogram; the first one is the representative.
  std::vector<std::pair<std::string, std::vector<WeightVector>>> sources;
};

/// One dendrogram per grid vector; identical cluster trees are merged
/// before fusion. Metric ids are "w0", "w1", ... in grid order.
SweepResult sweep(const MarkerSet& markers, const SweepGrid& grid);

/// Reads `{"markers":[{"id":..,"path":..}]}`; paths are relative to the
/// manifest's directory.
MarkerSet read_manifest(const std::string& path);

/// Reads `{"grid":{"type":"simplex","resolution":n}}` or
/// `{"grid":{"type":"explicit","weights":[[...],...]}}`. Weights may be
/// numbers or rational strings.
SweepGrid read_sweep_spec(const nlohmann::json& spec, std::size_t markers);

}  // namespace cnet::phylo
