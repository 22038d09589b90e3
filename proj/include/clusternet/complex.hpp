#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "clusternet/member_set.hpp"
#include "clusternet/network.hpp"

namespace cnet {

struct CompatibilityViolation {
  std::size_t first, second;  // vertex ids
  MemberSet intersection;     // not a ball of any metric in the family
};

struct CompatibilityReport {
  bool compatible = true;
  std::vector<CompatibilityViolation> violations;
};

/// Every nonempty intersection of two balls must itself be a ball of some
/// metric of the family.
CompatibilityReport check_compatibility(const ClusterNetwork& net);

/// The balls K of `metric` with lower ⊆ K ⊆ upper, smallest first, endpoints
/// included. Throws PreconditionError unless lower ⊆ upper are both balls
/// of `metric`.
std::vector<std::size_t> intermediary_chain(const ClusterNetwork& net, std::size_t lower,
                                            std::size_t upper, std::size_t metric);

struct Simplex {
  std::vector<std::size_t> vertices;  // ascending by inclusion (and by id)
  std::size_t witness_metric;
  std::pair<std::size_t, std::size_t> anchor;

  std::size_t dimension() const { return vertices.size() - 1; }
};

/// Every subset of size >= 2 of each single-metric chain between `lower`
/// and `upper`, deduplicated by vertex set. `upper` must be the minimal
/// common superball of `lower` over `r`.
std::vector<Simplex> simplices_for_pair(const ClusterNetwork& net, std::size_t lower,
                                        std::size_t upper, const MetricSubset& r);

/// simplices_for_pair with `upper` looked up; empty for the root. Throws
/// AmbiguityError when the superball is not unique.
std::vector<Simplex> simplices_above(const ClusterNetwork& net, std::size_t lower,
                                     const MetricSubset& r);

struct SimplicialComplex {
  MetricSubset subfamily;
  std::vector<Simplex> simplices;          // sorted by vertex list, unique
  std::vector<std::size_t> ambiguous;      // r-balls skipped for lack of a unique superball

  std::size_t max_dimension() const;
  std::vector<Simplex> maximal_simplices() const;
};

SimplicialComplex build_complex(const ClusterNetwork& net, const MetricSubset& r);

/// Longest single-metric chain between the pair, minus one.
std::size_t r_dimension(const ClusterNetwork& net, std::size_t lower, std::size_t upper,
                        const MetricSubset& r);

struct PairDimension {
  std::size_t lower, upper, dimension;
};

struct DimensionReport {
  MetricSubset subfamily;
  std::vector<PairDimension> pairs;
  std::size_t overall = 0;
  std::vector<std::size_t> ambiguous;
};

DimensionReport network_dimension(const ClusterNetwork& net, const MetricSubset& r);

}  // namespace cnet
