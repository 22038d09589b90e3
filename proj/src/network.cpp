#include "clusternet/network.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "clusternet/errors.hpp"

namespace cnet {

bool NetworkVertex::in(std::size_t metric) const {
  return std::binary_search(metrics.begin(), metrics.end(), metric);
}

std::size_t ClusterNetwork::metric_index(std::string_view id) const {
  for (std::size_t k = 0; k < metric_ids_.size(); ++k) {
    if (metric_ids_[k] == id) return k;
  }
  throw LookupError("unknown metric id '" + std::string(id) + "'");
}

std::optional<std::size_t> ClusterNetwork::find(const MemberSet& members) const {
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), members,
      [](const NetworkVertex& v, const MemberSet& m) { return CanonicalOrder{}(v.members, m); });
  if (it == vertices_.end() || it->members != members) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

MetricSubset ClusterNetwork::resolve(std::span<const std::string> ids) const {
  if (ids.empty()) throw PreconditionError("empty metric subfamily");
  MetricSubset out;
  for (const auto& id : ids) out.push_back(metric_index(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MetricSubset ClusterNetwork::all_metrics() const {
  MetricSubset out(metric_ids_.size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

ClusterNetwork merge_dendrograms(std::span<const Dendrogram> dendros, std::vector<std::string> ids) {
  if (dendros.empty()) throw StructuralError("no dendrograms to merge");
  if (dendros.size() != ids.size()) {
    throw StructuralError(std::to_string(dendros.size()) + " dendrograms but " +
                          std::to_string(ids.size()) + " metric ids");
  }
  for (const auto& d : dendros) {
    if (d.labels() != dendros.front().labels()) {
      throw StructuralError("dendrograms are over different label sets");
    }
  }
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids[a] < ids[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (ids[order[k]] == ids[order[k - 1]]) {
      throw StructuralError("duplicate metric id '" + ids[order[k]] + "'");
    }
  }

  ClusterNetwork net;
  net.labels_ = dendros.front().labels();
  for (auto k : order) net.metric_ids_.push_back(ids[k]);

  std::map<MemberSet, NetworkVertex, CanonicalOrder> vertices;
  for (std::size_t m = 0; m < order.size(); ++m) {
    for (const auto& c : dendros[order[m]].clusters()) {
      auto [it, inserted] = vertices.try_emplace(c.members);
      it->second.members = c.members;
      it->second.metrics.push_back(m);
      it->second.radius.emplace(m, c.radius);
    }
  }
  for (auto& [members, v] : vertices) net.vertices_.push_back(std::move(v));

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> edges;
  for (std::size_t m = 0; m < order.size(); ++m) {
    const auto& d = dendros[order[m]];
    for (const auto& [child, parent] : d.edges()) {
      const auto vc = *net.find(d.clusters()[child].members);
      const auto vp = *net.find(d.clusters()[parent].members);
      edges[{vc, vp}].push_back(m);
    }
  }
  for (auto& [key, metrics] : edges) net.edges_.push_back({key.first, key.second, std::move(metrics)});
  return net;
}

Dendrogram restrict_to_metric(const ClusterNetwork& net, std::size_t metric) {
  if (metric >= net.metric_ids().size()) throw LookupError("metric index out of range");
  std::vector<Cluster> clusters;
  std::vector<std::size_t> local(net.vertices().size(), 0);
  for (std::size_t v = 0; v < net.vertices().size(); ++v) {
    const auto& vertex = net.vertices()[v];
    if (!vertex.in(metric)) continue;
    local[v] = clusters.size();
    clusters.push_back({vertex.members, vertex.radius.at(metric)});
  }
  std::vector<Dendrogram::Edge> edges;
  for (const auto& e : net.edges()) {
    if (std::binary_search(e.metrics.begin(), e.metrics.end(), metric)) {
      edges.emplace_back(local[e.child], local[e.parent]);
    }
  }
  return Dendrogram(net.labels(), std::move(clusters), std::move(edges));
}

bool is_r_ball(const ClusterNetwork& net, std::size_t vertex, const MetricSubset& r) {
  if (r.empty()) throw PreconditionError("empty metric subfamily");
  for (auto m : r) {
    if (m >= net.metric_ids().size()) throw LookupError("metric index out of range");
  }
  const auto& v = net.vertices().at(vertex);
  return std::all_of(r.begin(), r.end(), [&](std::size_t m) { return v.in(m); });
}

Superball minimal_common_superball(const ClusterNetwork& net, std::size_t vertex,
                                   const MetricSubset& r) {
  if (!is_r_ball(net, vertex, r)) {
    throw PreconditionError("vertex " + std::to_string(vertex) + " is not an r-ball");
  }
  const auto& inner = net.vertices()[vertex].members;
  std::vector<std::size_t> above;
  for (std::size_t v = 0; v < net.vertices().size(); ++v) {
    if (strictly_contains(net.vertices()[v].members, inner) && is_r_ball(net, v, r)) {
      above.push_back(v);
    }
  }
  std::vector<std::size_t> minimal;
  for (auto a : above) {
    const bool has_smaller = std::any_of(above.begin(), above.end(), [&](std::size_t b) {
      return strictly_contains(net.vertices()[a].members, net.vertices()[b].members);
    });
    if (!has_smaller) minimal.push_back(a);
  }
  Superball out;
  if (minimal.size() == 1) {
    out.status = Superball::Status::found;
    out.vertex = minimal.front();
  } else if (minimal.size() > 1) {
    out.status = Superball::Status::ambiguous;
    out.candidates = std::move(minimal);
  }
  return out;
}

std::vector<std::vector<std::size_t>> undirected_cycles(const ClusterNetwork& net) {
  const std::size_t n = net.vertices().size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : net.edges()) {
    adj[e.child].push_back(e.parent);
    adj[e.parent].push_back(e.child);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // BFS spanning forest; every non-tree edge closes one fundamental cycle.
  std::vector<std::size_t> parent(n, n), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::set<std::pair<std::size_t, std::size_t>> tree_edges;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        tree_edges.insert({std::min(u, v), std::max(u, v)});
        q.push(v);
      }
    }
  }

  std::vector<std::vector<std::size_t>> cycles;
  for (const auto& e : net.edges()) {
    const auto a = std::min(e.child, e.parent);
    const auto b = std::max(e.child, e.parent);
    if (tree_edges.count({a, b})) continue;
    std::vector<std::size_t> left{a}, right{b};
    auto x = a, y = b;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        x = parent[x];
        left.push_back(x);
      } else {
        y = parent[y];
        right.push_back(y);
      }
    }
    // left ends at the meeting vertex; right ends there too.
    right.pop_back();
    std::vector<std::size_t> cycle = left;
    cycle.insert(cycle.end(), right.rbegin(), right.rend());

    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace cnet
