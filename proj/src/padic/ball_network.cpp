#include "clusternet/padic/ball_network.hpp"

#include <algorithm>
#include <numeric>

#include "clusternet/dendrogram.hpp"
#include "clusternet/errors.hpp"
#include "clusternet/metric.hpp"
#include "clusternet/padic/norm.hpp"

namespace cnet::padic {

std::vector<std::vector<std::size_t>> all_orderings(std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BallNetworkResult ball_network(Int p, std::size_t d, const std::vector<Rational>& q,
                               const std::vector<SquareMatrix>& frames,
                               const std::vector<std::vector<std::size_t>>& orderings, int window,
                               int precision) {
  const Context ctx(p, precision);
  if (q.size() != d) throw PreconditionError("q must have d entries");
  if (frames.empty() || orderings.empty()) throw PreconditionError("no metrics requested");
  if (window < 1) throw PreconditionError("window must be at least 1");

  Int side = 1;
  for (int i = 0; i < window; ++i) side *= p;
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= static_cast<std::size_t>(side);
  if (count > 729) {
    throw PreconditionError("window holds " + std::to_string(count) + " points; the limit is 729");
  }

  const int width = static_cast<int>(std::to_string(side - 1).size());
  std::vector<std::vector<Int>> points(count, std::vector<Int>(d));
  std::vector<std::string> labels(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = d; i-- > 0;) {
      points[idx][i] = static_cast<Int>(rest % static_cast<std::size_t>(side));
      rest /= static_cast<std::size_t>(side);
    }
    for (std::size_t i = 0; i < d; ++i) {
      auto digits = std::to_string(points[idx][i]);
      digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
      labels[idx] += (i ? "." : "") + digits;
    }
  }

  std::vector<Dendrogram> dendros;
  std::vector<std::string> ids;
  for (std::size_t f = 0; f < frames.size(); ++f) {
    for (const auto& order : orderings) {
      if (order.size() != d) throw PreconditionError("ordering of the wrong length");
      std::vector<Rational> w(d);
      std::string id = "f" + std::to_string(f) + ":";
      for (std::size_t i = 0; i < d; ++i) {
        if (order[i] >= d) throw PreconditionError("ordering is not a permutation");
        w[i] = q[order[i]];
        id += std::to_string(order[i]);
      }
      const NormSpec norm(ctx, frames[f], w);
      std::vector<Rational> entries(count * count);
      std::vector<Int> diff(d);
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
          for (std::size_t i = 0; i < d; ++i) diff[i] = points[a][i] - points[b][i];
          entries[a * count + b] = entries[b * count + a] = norm_eval(norm, diff);
        }
      }
      dendros.push_back(build_dendrogram(DistanceMatrix(labels, std::move(entries))));
      ids.push_back(std::move(id));
    }
  }

  BallNetworkResult result{merge_dendrograms(dendros, ids), {}};
  for (std::size_t a = 0; a < dendros.size(); ++a) {
    for (std::size_t b = a + 1; b < dendros.size(); ++b) {
      const auto& ca = dendros[a].clusters();
      const auto& cb = dendros[b].clusters();
      const bool same_shape =
          ca.size() == cb.size() &&
          std::equal(ca.begin(), ca.end(), cb.begin(),
                     [](const Cluster& x, const Cluster& y) { return x.members == y.members; });
      if (same_shape) {
        result.diagnostics.push_back("metrics " + ids[a] + " and " + ids[b] +
                                     " give the same clusters on this window");
      }
    }
  }
  return result;
}

}  // namespace cnet::padic
