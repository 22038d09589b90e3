#include <omp.h>

#include <algorithm>
#include <limits>

#include "clusternet/metric.hpp"

namespace cnet::kernels {

RankedMatrix rank_encode(const DistanceMatrix& d) {
  RankedMatrix out;
  out.n = d.size();
  out.levels = d.entries();
  std::sort(out.levels.begin(), out.levels.end());
  out.levels.erase(std::unique(out.levels.begin(), out.levels.end()), out.levels.end());
  out.ranks.reserve(d.entries().size());
  for (const auto& v : d.entries()) {
    auto it = std::lower_bound(out.levels.begin(), out.levels.end(), v);
    out.ranks.push_back(static_cast<std::uint32_t>(it - out.levels.begin()));
  }
  return out;
}

std::vector<std::uint32_t> bottleneck_mst(std::span<const std::uint32_t> ranks, std::size_t n) {
  std::vector<std::uint32_t> out(n * n, 0);
  if (n <= 1) return out;

  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  const auto sn = static_cast<std::ptrdiff_t>(n);

  // Prim over the dense graph. parent[v] and best[v] describe the cheapest
  // edge from v into the growing tree.
  std::vector<char> in_tree(n, 0);
  std::vector<std::uint32_t> best(n, kInf);
  std::vector<std::size_t> parent(n, 0);
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adj(n);
  best[0] = 0;

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    std::uint32_t pick_w = kInf;
#pragma omp parallel
    {
      std::size_t local = n;
      std::uint32_t local_w = kInf;
#pragma omp for nowait
      for (std::ptrdiff_t v = 0; v < sn; ++v) {
        if (!in_tree[v] && (best[v] < local_w || (best[v] == local_w && static_cast<std::size_t>(v) < local))) {
          local = static_cast<std::size_t>(v);
          local_w = best[v];
        }
      }
#pragma omp critical
      if (local_w < pick_w || (local_w == pick_w && local < pick)) {
        pick = local;
        pick_w = local_w;
      }
    }
    in_tree[pick] = 1;
    if (step > 0) {
      adj[pick].emplace_back(parent[pick], pick_w);
      adj[parent[pick]].emplace_back(pick, pick_w);
    }
    const auto* row = ranks.data() + pick * n;
#pragma omp parallel for
    for (std::ptrdiff_t v = 0; v < sn; ++v) {
      if (!in_tree[v] && row[v] < best[v]) {
        best[v] = row[v];
        parent[v] = pick;
      }
    }
  }

  // Largest edge on the unique tree path, one walk per source.
#pragma omp parallel
  {
    std::vector<std::size_t> stack;
    std::vector<char> seen(n);
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t s = 0; s < sn; ++s) {
      std::fill(seen.begin(), seen.end(), 0);
      auto* dist = out.data() + static_cast<std::size_t>(s) * n;
      stack.assign(1, static_cast<std::size_t>(s));
      seen[s] = 1;
      dist[s] = 0;
      while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj[u]) {
          if (seen[v]) continue;
          seen[v] = 1;
          dist[v] = std::max(dist[u], w);
          stack.push_back(v);
        }
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> bottleneck_closure_serial(std::span<const std::uint32_t> ranks,
                                                     std::size_t n) {
  std::vector<std::uint32_t> u(ranks.begin(), ranks.end());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto ik = u[i * n + k];
      for (std::size_t j = 0; j < n; ++j) {
        const auto via = std::max(ik, u[k * n + j]);
        if (via < u[i * n + j]) u[i * n + j] = via;
      }
    }
  }
  return u;
}

}  // namespace cnet::kernels
