#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clusternet/network.hpp"
#include "clusternet/padic/mod_matrix.hpp"
#include "clusternet/rational.hpp"

namespace cnet::padic {

struct BallNetworkResult {
  ClusterNetwork network;
  /// Pairs of metric ids whose dendrograms coincide on the sample.
  std::vector<std::string> diagnostics;
};

/// All permutations of 0..d-1 in lexicographic order.
std::vector<std::vector<std::size_t>> all_orderings(std::size_t d);

/// Network over the points of [0, p^window)^d. Each (frame, ordering) pair
/// gives the metric N(x - y) with weights q[ordering[0]], q[ordering[1]], ...
/// and id "f<frame>:<ordering digits>". Labels are the zero-padded
/// coordinates joined by '.'.
BallNetworkResult ball_network(Int p, std::size_t d, const std::vector<Rational>& q,
                               const std::vector<SquareMatrix>& frames,
                               const std::vector<std::vector<std::size_t>>& orderings, int window,
                               int precision = 8);

}  // namespace cnet::padic
