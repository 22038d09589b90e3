#pragma once

#include <cstddef>
#include <vector>

namespace cnet::padic {

/// Subspace of F_p^d held by its reduced row echelon basis.
class FpSubspace {
 public:
  FpSubspace(int p, std::size_t dim);
  static FpSubspace span(int p, std::size_t dim, const std::vector<std::vector<int>>& vectors);

  int prime() const { return p_; }
  std::size_t ambient_dimension() const { return dim_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<int>>& basis() const { return rows_; }
  bool contains(const std::vector<int>& v) const;
  bool is_subset_of(const FpSubspace& other) const;
  FpSubspace with(const std::vector<int>& v) const;

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;
  /// Dimension first, then echelon rows.
  friend bool operator<(const FpSubspace& a, const FpSubspace& b);

 private:
  void insert(std::vector<int> v);

  int p_;
  std::size_t dim_;
  std::vector<std::vector<int>> rows_;
};

/// Every subspace of F_p^d, sorted.
std::vector<FpSubspace> all_subspaces(int p, std::size_t dim);

/// Complete flags 0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_d = F_p^d, in lexicographic order.
std::vector<std::vector<FpSubspace>> complete_flags(int p, std::size_t dim);

/// ∏_{i=1}^{d} (p^i - 1)/(p - 1).
std::size_t flag_count(int p, std::size_t dim);

}  // namespace cnet::padic
