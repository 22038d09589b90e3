#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clusternet/member_set.hpp"
#include "clusternet/metric.hpp"
#include "clusternet/rational.hpp"

namespace cnet {

/// A chain-distance ball, identified by its members. `radius` is the largest
/// chain distance between two members (0 for leaves).
struct Cluster {
  MemberSet members;
  Rational radius;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Tree of clusters of one metric. Clusters are kept in canonical order
/// (size, then member list), so the root is always last; edges are
/// (child, parent) pairs sorted ascending.
class Dendrogram {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Dendrogram() = default;

  /// Canonicalizes and checks the tree structure: distinct member sets, one
  /// parent per non-root cluster, strict nesting along edges, no intermediate
  /// cluster between child and parent, root = all points, leaves disjoint and
  /// covering. Throws InvariantError otherwise.
  Dendrogram(std::vector<std::string> labels, std::vector<Cluster> clusters,
             std::vector<Edge> edges);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Cluster>& clusters() const { return clusters_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t root() const { return clusters_.size() - 1; }
  std::optional<std::size_t> parent(std::size_t cluster) const;
  std::optional<std::size_t> find(const MemberSet& members) const;
  std::vector<std::size_t> leaves() const;

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Cluster> clusters_;
  std::vector<Edge> edges_;
  std::vector<std::optional<std::size_t>> parent_;
};

/// Single-linkage dendrogram: the distinct blocks of the threshold graph at 0
/// and at every chain-distance value. Equal-height merges happen together.
/// Throws StructuralError on an empty point set.
Dendrogram build_dendrogram(const DistanceMatrix& d);

/// Smallest cluster containing both labels.
const Cluster& sup_cluster(const Dendrogram& dendro, std::string_view a, std::string_view b);

/// Cut at height eps: the maximal clusters of radius <= eps.
Partition clusters_at(const Dendrogram& dendro, const Rational& eps);

}  // namespace cnet
