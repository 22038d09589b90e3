#include "clusternet/complex.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "clusternet/errors.hpp"

namespace cnet {
namespace {

// Chains longer than this would produce more than 2^24 faces.
constexpr std::size_t kMaxChainForFaces = 24;

void check_vertex(const ClusterNetwork& net, std::size_t v) {
  if (v >= net.vertices().size()) throw LookupError("vertex id " + std::to_string(v) + " out of range");
}

std::size_t resolve_upper(const ClusterNetwork& net, std::size_t lower, const MetricSubset& r,
                          std::optional<std::size_t> expected) {
  const auto sb = minimal_common_superball(net, lower, r);
  switch (sb.status) {
    case Superball::Status::found:
      if (expected && *expected != *sb.vertex) {
        throw PreconditionError("vertex " + std::to_string(*expected) +
                                " is not the minimal common superball of " + std::to_string(lower));
      }
      return *sb.vertex;
    case Superball::Status::none:
      throw PreconditionError("vertex " + std::to_string(lower) + " has no strictly larger r-ball");
    case Superball::Status::ambiguous:
      break;
  }
  throw AmbiguityError("vertex " + std::to_string(lower) + " has " +
                       std::to_string(sb.candidates.size()) + " incomparable minimal superballs");
}

}  // namespace

CompatibilityReport check_compatibility(const ClusterNetwork& net) {
  CompatibilityReport report;
  const auto& vs = net.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!vs[a].members.intersects(vs[b].members)) continue;
      MemberSet meet = vs[a].members & vs[b].members;
      if (meet == vs[a].members || meet == vs[b].members) continue;
      if (!net.find(meet)) {
        report.compatible = false;
        report.violations.push_back({a, b, std::move(meet)});
      }
    }
  }
  return report;
}

std::vector<std::size_t> intermediary_chain(const ClusterNetwork& net, std::size_t lower,
                                            std::size_t upper, std::size_t metric) {
  check_vertex(net, lower);
  check_vertex(net, upper);
  if (metric >= net.metric_ids().size()) throw LookupError("metric index out of range");
  const auto& vs = net.vertices();
  if (!vs[lower].in(metric) || !vs[upper].in(metric)) {
    throw PreconditionError("chain endpoints must be balls of metric '" + net.metric_ids()[metric] + "'");
  }
  if (!vs[lower].members.is_subset_of(vs[upper].members)) {
    throw PreconditionError("lower end of chain is not contained in the upper end");
  }
  std::vector<std::size_t> chain;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (vs[v].in(metric) && vs[lower].members.is_subset_of(vs[v].members) &&
        vs[v].members.is_subset_of(vs[upper].members)) {
      chain.push_back(v);
    }
  }
  // Canonical vertex order is by size first, so this is already the chain order.
  return chain;
}

std::vector<Simplex> simplices_for_pair(const ClusterNetwork& net, std::size_t lower,
                                        std::size_t upper, const MetricSubset& r) {
  resolve_upper(net, lower, r, upper);
  std::map<std::vector<std::size_t>, Simplex> out;
  for (auto s : r) {
    const auto chain = intermediary_chain(net, lower, upper, s);
    if (chain.size() > kMaxChainForFaces) {
      throw PreconditionError("chain of " + std::to_string(chain.size()) +
                              " balls is too long to enumerate its faces");
    }
    const std::size_t subsets = std::size_t{1} << chain.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      if (__builtin_popcountll(mask) < 2) continue;
      std::vector<std::size_t> verts;
      for (std::size_t k = 0; k < chain.size(); ++k) {
        if (mask >> k & 1U) verts.push_back(chain[k]);
      }
      out.try_emplace(verts, Simplex{verts, s, {lower, upper}});
    }
  }
  std::vector<Simplex> result;
  result.reserve(out.size());
  for (auto& [key, simplex] : out) result.push_back(std::move(simplex));
  return result;
}

std::vector<Simplex> simplices_above(const ClusterNetwork& net, std::size_t lower,
                                     const MetricSubset& r) {
  const auto sb = minimal_common_superball(net, lower, r);
  if (sb.status == Superball::Status::none) return {};
  const auto upper = resolve_upper(net, lower, r, std::nullopt);
  return simplices_for_pair(net, lower, upper, r);
}

std::size_t SimplicialComplex::max_dimension() const {
  std::size_t best = 0;
  for (const auto& s : simplices) best = std::max(best, s.dimension());
  return best;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices) {
    const bool covered = std::any_of(simplices.begin(), simplices.end(), [&](const Simplex& t) {
      return t.vertices.size() > s.vertices.size() &&
             std::includes(t.vertices.begin(), t.vertices.end(), s.vertices.begin(), s.vertices.end());
    });
    if (!covered) out.push_back(s);
  }
  return out;
}

SimplicialComplex build_complex(const ClusterNetwork& net, const MetricSubset& r) {
  if (r.empty()) throw PreconditionError("empty metric subfamily");
  SimplicialComplex complex;
  complex.subfamily = r;
  std::map<std::vector<std::size_t>, Simplex> all;
  for (std::size_t v = 0; v < net.vertices().size(); ++v) {
    if (!is_r_ball(net, v, r)) continue;
    const auto sb = minimal_common_superball(net, v, r);
    if (sb.status == Superball::Status::none) continue;
    if (sb.status == Superball::Status::ambiguous) {
      complex.ambiguous.push_back(v);
      continue;
    }
    for (auto& s : simplices_for_pair(net, v, *sb.vertex, r)) {
      all.try_emplace(s.vertices, std::move(s));
    }
  }
  for (auto& [key, s] : all) complex.simplices.push_back(std::move(s));
  return complex;
}

std::size_t r_dimension(const ClusterNetwork& net, std::size_t lower, std::size_t upper,
                        const MetricSubset& r) {
  resolve_upper(net, lower, r, upper);
  std::size_t longest = 0;
  for (auto s : r) longest = std::max(longest, intermediary_chain(net, lower, upper, s).size());
  return longest - 1;
}

DimensionReport network_dimension(const ClusterNetwork& net, const MetricSubset& r) {
  if (r.empty()) throw PreconditionError("empty metric subfamily");
  DimensionReport report;
  report.subfamily = r;
  for (std::size_t v = 0; v < net.vertices().size(); ++v) {
    if (!is_r_ball(net, v, r)) continue;
    const auto sb = minimal_common_superball(net, v, r);
    if (sb.status == Superball::Status::none) continue;
    if (sb.status == Superball::Status::ambiguous) {
      report.ambiguous.push_back(v);
      continue;
    }
    const auto dim = r_dimension(net, v, *sb.vertex, r);
    report.pairs.push_back({v, *sb.vertex, dim});
    report.overall = std::max(report.overall, dim);
  }
  return report;
}

}  // namespace cnet
