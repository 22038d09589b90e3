#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusternet/dendrogram.hpp"
#include "clusternet/member_set.hpp"
#include "clusternet/rational.hpp"

namespace cnet {

/// Sorted, duplicate-free indices into ClusterNetwork::metric_ids().
using MetricSubset = std::vector<std::size_t>;

struct NetworkVertex {
  MemberSet members;
  std::vector<std::size_t> metrics;           // sorted metric indices
  std::map<std::size_t, Rational> radius;     // per metric in `metrics`

  bool in(std::size_t metric) const;
};

struct NetworkEdge {
  std::size_t child;
  std::size_t parent;
  std::vector<std::size_t> metrics;  // sorted metric indices

  friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
};

/// Union of the dendrograms of a metric family, with clusters that coincide
/// as sets merged into one vertex. Vertices are in canonical member order
/// and edges are sorted by (child, parent).
class ClusterNetwork {
 public:
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& metric_ids() const { return metric_ids_; }
  const std::vector<NetworkVertex>& vertices() const { return vertices_; }
  const std::vector<NetworkEdge>& edges() const { return edges_; }

  std::size_t metric_index(std::string_view id) const;
  std::optional<std::size_t> find(const MemberSet& members) const;

  /// Resolves ids to a subset; throws LookupError on an unknown id and
  /// PreconditionError on an empty list.
  MetricSubset resolve(std::span<const std::string> ids) const;
  MetricSubset all_metrics() const;

 private:
  friend ClusterNetwork merge_dendrograms(std::span<const Dendrogram>, std::vector<std::string>);

  std::vector<std::string> labels_;
  std::vector<std::string> metric_ids_;
  std::vector<NetworkVertex> vertices_;
  std::vector<NetworkEdge> edges_;
};

/// Throws StructuralError when label sets differ, ids repeat, or the counts
/// disagree. Metrics are ordered by id, so input order does not matter.
ClusterNetwork merge_dendrograms(std::span<const Dendrogram> dendros, std::vector<std::string> ids);

/// The dendrogram of one metric, recovered from the network.
Dendrogram restrict_to_metric(const ClusterNetwork& net, std::size_t metric);

/// True when the vertex is a ball for every metric in `r`.
bool is_r_ball(const ClusterNetwork& net, std::size_t vertex, const MetricSubset& r);

struct Superball {
  enum class Status { found, none, ambiguous };
  Status status = Status::none;
  std::optional<std::size_t> vertex;
  std::vector<std::size_t> candidates;  // the incomparable minima when ambiguous
};

/// Smallest r-ball strictly containing `vertex`. Throws PreconditionError
/// when `vertex` is not itself an r-ball.
Superball minimal_common_superball(const ClusterNetwork& net, std::size_t vertex,
                                   const MetricSubset& r);

/// Fundamental cycle basis of the undirected graph. Each cycle starts at its
/// smallest vertex id and runs toward the smaller of its two neighbours;
/// the list is sorted.
std::vector<std::vector<std::size_t>> undirected_cycles(const ClusterNetwork& net);

}  // namespace cnet
