#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusternet/padic/axioms.hpp"
#include "clusternet/padic/fp_space.hpp"
#include "clusternet/padic/lattice.hpp"
#include "clusternet/padic/norm.hpp"
#include "clusternet/rational.hpp"

namespace cnet::padic {

/// pL + span(B w : w in W) for a subspace W of L/pL ≅ F_p^d, where B is the
/// Hermite basis of L.
Lattice sandwich_lattice(const Lattice& top, const FpSubspace& w);

/// Every K with pL ⊆ K ⊆ L, one per subspace of F_p^d in subspace order
/// (so pL comes first and L last).
std::vector<Lattice> lattices_between(const Lattice& top);

/// Some dilate of b lies strictly between pa and a. Equal classes are not
/// adjacent.
bool is_adjacent(const Lattice& a, const Lattice& b);

/// pL = L_0 ⊂ ... ⊂ L_d = L, one chain per complete flag.
std::vector<LatticeChain> maximal_chains(const Lattice& top);

/// f_1..f_d with f_j ∈ L_j \ L_{j-1}: f_j = B x_j with x_j the
/// lexicographically smallest vector of {0..p-1}^d that works. Throws
/// PreconditionError for a chain that is not maximal.
std::vector<PadicVector> basis_from_chain(const LatticeChain& chain);

/// Same basis as exact integer columns C x_j; the vectors are
/// p^shift times these, shift being that of the top lattice.
std::vector<std::vector<Int>> basis_columns_from_chain(const LatticeChain& chain);

struct DecompositionCheck {
  bool memberships = true;    ///< f_j ∈ L_j and f_j ∉ L_{j-1}
  bool decomposition = true;  ///< L_j = ⊕_{i<=j} Z_p f_i ⊕ ⊕_{i>j} pZ_p f_i for every j
  int det_valuation = 0;      ///< valuation of det(f_1..f_d)
  int expected_valuation = 0; ///< d*shift + Σ a_i of the top lattice
  std::vector<std::string> failures;
  bool passed() const {
    return memberships && decomposition && det_valuation == expected_valuation;
  }
};

DecompositionCheck check_basis_decomposition(const LatticeChain& chain,
                                             const std::vector<std::vector<Int>>& columns);

/// The norm with N(f_j) = q_j for the chain's basis; A maps f_j to e_j.
/// Requires strictly increasing q in (1/p, 1].
NormSpec norm_from_chain(const LatticeChain& chain, const std::vector<Rational>& q);

struct ChainCheck {
  std::size_t index = 0;
  LatticeChain chain;
  std::vector<std::vector<Int>> basis;
  DecompositionCheck decomposition;
  bool round_trip = false;
  std::optional<LatticeChain> recovered;
  std::optional<AxiomReport> axioms;
  std::string error;
  bool passed() const {
    return error.empty() && round_trip && decomposition.passed() &&
           (!axioms || axioms->passed());
  }
};

struct CorrespondenceReport {
  Int p = 0;
  std::size_t d = 0;
  std::vector<Rational> q;
  int precision = 0;
  bool generic = true;
  std::size_t strictly_between = 0;
  std::size_t expected_strictly_between = 0;
  std::size_t chain_count = 0;
  std::size_t flag_count = 0;
  std::vector<ChainCheck> chains;
  std::size_t round_trips_passed = 0;
  bool distinct_ball_chains = true;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  /// Length of the ball chain of the identity-frame norm on Z_p^d.
  std::size_t identity_chain_length = 0;
  std::optional<int> axioms_window;
  bool passed = false;
};

/// Number of subspaces of F_p^d of every dimension.
std::size_t subspace_count(int p, std::size_t d);

/// Exhaustive check around Z_p^d. For generic q every maximal chain goes
/// through norm_from_chain and back; for repeated q only the identity-frame
/// chain length is reported and the run passes iff it is shorter than d+1.
CorrespondenceReport verify_correspondence(Int p, std::size_t d, const std::vector<Rational>& q,
                                           int precision, std::optional<int> axioms_window = {});

}  // namespace cnet::padic
