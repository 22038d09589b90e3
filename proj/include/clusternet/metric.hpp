#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusternet/rational.hpp"

namespace cnet {

/// Disjoint blocks of point indices covering 0..n-1. Canonical form: each
/// block sorted, blocks ordered by their smallest element.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  static Partition canonical(std::vector<std::vector<std::size_t>> blocks);
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Finite symmetric dissimilarity with exact entries over labeled points.
///
/// Construction validates the structure (square, symmetric, zero diagonal,
/// nonnegative, unique nonempty labels) and reorders points so labels are
/// sorted; the triangle inequality is not required.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// `entries` is row-major, n*n.
  DistanceMatrix(std::vector<std::string> labels, std::vector<Rational> entries);

  static DistanceMatrix from_rows(std::vector<std::string> labels,
                                  const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  /// Throws LookupError for unknown labels.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> entries_;
};

/// Dissimilarity satisfying d(a,c) <= max(d(a,b), d(b,c)). Zero distances
/// between distinct points are allowed.
class UltrametricMatrix {
 public:
  UltrametricMatrix() = default;
  /// Throws StructuralError naming a violating triple.
  explicit UltrametricMatrix(DistanceMatrix matrix);

  const DistanceMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.size(); }
  const std::vector<std::string>& labels() const { return matrix_.labels(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  friend bool operator==(const UltrametricMatrix&, const UltrametricMatrix&) = default;

 private:
  struct Trusted {};
  UltrametricMatrix(DistanceMatrix matrix, Trusted) : matrix_(std::move(matrix)) {}

  friend UltrametricMatrix chain_distance(const DistanceMatrix&);
  friend UltrametricMatrix chain_distance_reference(const DistanceMatrix&);
  friend UltrametricMatrix induced_on_blocks(const UltrametricMatrix&, const Partition&);

  DistanceMatrix matrix_;
};

struct TripleViolation {
  enum class Kind { triangle, strong_triangle };
  std::size_t i, j, k;  // d(i,k) exceeds the bound through j; i < k
  Kind kind;
};

struct MetricReport {
  bool is_metric = true;
  bool is_ultrametric = true;
  std::vector<TripleViolation> violations;
};

MetricReport validate(const DistanceMatrix& d);

/// Connected components of the graph {(i,j) : d(i,j) <= eps}.
Partition epsilon_components(const DistanceMatrix& d, const Rational& eps);

/// Subdominant ultrametric: min over paths of the largest step.
UltrametricMatrix chain_distance(const DistanceMatrix& d);

/// Serial minimax closure over all intermediate points; kept as the
/// reference the parallel kernel is tested against.
UltrametricMatrix chain_distance_reference(const DistanceMatrix& d);

/// Classes of points at chain distance zero.
Partition zero_quotient(const UltrametricMatrix& u);

/// Ultrametric between blocks of a partition that refines the zero classes.
/// Block labels are the member labels joined with '+'.
UltrametricMatrix induced_on_blocks(const UltrametricMatrix& u, const Partition& blocks);

namespace kernels {

/// Entries replaced by their rank among the sorted distinct values.
struct RankedMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> ranks;  // row-major
  std::vector<Rational> levels;      // levels[rank]
};

RankedMatrix rank_encode(const DistanceMatrix& d);

/// Bottleneck distances from a minimum spanning tree. Prim scan and
/// per-source tree walks run under OpenMP.
std::vector<std::uint32_t> bottleneck_mst(std::span<const std::uint32_t> ranks, std::size_t n);

/// O(n^3) serial minimax closure.
std::vector<std::uint32_t> bottleneck_closure_serial(std::span<const std::uint32_t> ranks,
                                                     std::size_t n);

}  // namespace kernels

}  // namespace cnet
