#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusternet/padic/norm.hpp"

namespace cnet::padic {

struct AxiomWitness {
  std::string axiom;
  std::vector<Int> x;
  std::vector<Int> y;
};

struct AxiomReport {
  int window = 0;
  std::size_t points = 0;
  std::size_t pairs = 0;
  bool nondegenerate = true;
  bool linear = true;
  bool strong_triangle = true;
  std::optional<AxiomWitness> witness;
  bool passed() const { return nondegenerate && linear && strong_triangle; }
};

/// Checks N over every representative x, y of (Z/p^w)^d, taken in
/// [0, p^w)^d: N(x) > 0 for x != 0, N(px) = N(x)/p, N(-x) = N((1+p)x) = N(x),
/// and N(x+y) <= max(N(x), N(y)) for all pairs. Norm values of every
/// possible sum are precomputed and the pair loop runs on their ranks.
AxiomReport check_norm_axioms(const NormSpec& n, int window);

/// Same checks evaluating the norm directly for every pair, single thread.
AxiomReport check_norm_axioms_serial(const NormSpec& n, int window);

}  // namespace cnet::padic
