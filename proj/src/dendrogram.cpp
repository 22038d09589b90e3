#include "clusternet/dendrogram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "clusternet/detail/union_find.hpp"
#include "clusternet/errors.hpp"

namespace cnet {

Dendrogram::Dendrogram(std::vector<std::string> labels, std::vector<Cluster> clusters,
                       std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (clusters.empty()) throw InvariantError("dendrogram without clusters");

  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return CanonicalOrder{}(clusters[a].members, clusters[b].members);
  });
  std::vector<std::size_t> remap(clusters.size());
  clusters_.reserve(clusters.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    clusters_.push_back(std::move(clusters[order[k]]));
  }
  for (std::size_t k = 0; k < clusters_.size(); ++k) {
    const auto& c = clusters_[k];
    if (c.members.size() != n || c.members.none()) {
      throw InvariantError("cluster with empty or mis-sized member set");
    }
    if (k > 0 && c.members == clusters_[k - 1].members) {
      throw InvariantError("duplicate cluster " + member_names(c.members, labels_));
    }
  }
  if (!clusters_.back().members.all()) throw InvariantError("root does not contain every point");

  for (auto& [child, parent] : edges) {
    child = remap.at(child);
    parent = remap.at(parent);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);

  parent_.assign(clusters_.size(), std::nullopt);
  for (const auto& [child, parent] : edges_) {
    if (parent_[child]) throw InvariantError("cluster with two parents");
    const auto& inner = clusters_[child].members;
    const auto& outer = clusters_[parent].members;
    if (!strictly_contains(outer, inner)) throw InvariantError("edge does not strictly nest");
    for (const auto& mid : clusters_) {
      if (strictly_contains(outer, mid.members) && strictly_contains(mid.members, inner)) {
        throw InvariantError("edge skips an intermediate cluster");
      }
    }
    parent_[child] = parent;
  }
  for (std::size_t k = 0; k + 1 < clusters_.size(); ++k) {
    if (!parent_[k]) throw InvariantError("non-root cluster without parent");
  }
  if (parent_.back()) throw InvariantError("root has a parent");

  MemberSet covered(n);
  for (auto leaf : leaves()) {
    if (covered.intersects(clusters_[leaf].members)) throw InvariantError("overlapping leaves");
    covered |= clusters_[leaf].members;
  }
  if (!covered.all()) throw InvariantError("leaves do not cover the point set");
}

std::optional<std::size_t> Dendrogram::parent(std::size_t cluster) const {
  return parent_.at(cluster);
}

std::optional<std::size_t> Dendrogram::find(const MemberSet& members) const {
  auto it = std::lower_bound(
      clusters_.begin(), clusters_.end(), members,
      [](const Cluster& c, const MemberSet& m) { return CanonicalOrder{}(c.members, m); });
  if (it == clusters_.end() || it->members != members) return std::nullopt;
  return static_cast<std::size_t>(it - clusters_.begin());
}

std::vector<std::size_t> Dendrogram::leaves() const {
  std::vector<char> has_child(clusters_.size(), 0);
  for (const auto& e : edges_) has_child[e.second] = 1;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < clusters_.size(); ++k) {
    if (!has_child[k]) out.push_back(k);
  }
  return out;
}

Dendrogram build_dendrogram(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n == 0) throw StructuralError("empty point set");

  // Kruskal over the dissimilarity graph; all edges of one weight are
  // applied together so simultaneous merges yield a single parent.
  struct WeightedEdge {
    const Rational* w;
    std::size_t i, j;
  };
  std::vector<WeightedEdge> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({&d(i, j), i, j});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) { return *a.w < *b.w; });

  detail::UnionFind uf(n);
  std::vector<Cluster> clusters;
  std::vector<Dendrogram::Edge> edges;
  std::vector<std::size_t> cluster_of_root(n, 0);

  std::size_t pos = 0;
  // Zero-weight edges collapse points into leaves.
  while (pos < pairs.size() && *pairs[pos].w == 0) {
    uf.unite(pairs[pos].i, pairs[pos].j);
    ++pos;
  }
  {
    std::map<std::size_t, MemberSet> leaves;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = leaves.try_emplace(uf.find(i), MemberSet(n));
      it->second.set(i);
    }
    for (auto& [root, members] : leaves) {
      cluster_of_root[root] = clusters.size();
      clusters.push_back({std::move(members), Rational(0)});
    }
  }

  while (pos < pairs.size()) {
    const Rational& level = *pairs[pos].w;
    std::vector<std::size_t> touched;
    std::size_t end = pos;
    while (end < pairs.size() && *pairs[end].w == level) {
      touched.push_back(uf.find(pairs[end].i));
      touched.push_back(uf.find(pairs[end].j));
      ++end;
    }
    for (std::size_t k = pos; k < end; ++k) uf.unite(pairs[k].i, pairs[k].j);
    pos = end;

    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (auto old_root : touched) groups[uf.find(old_root)].push_back(cluster_of_root[old_root]);

    for (auto& [new_root, children] : groups) {
      if (children.size() < 2) continue;
      MemberSet members(n);
      for (auto c : children) members |= clusters[c].members;
      const std::size_t id = clusters.size();
      clusters.push_back({std::move(members), level});
      for (auto c : children) edges.emplace_back(c, id);
      cluster_of_root[new_root] = id;
    }
  }

  return Dendrogram(d.labels(), std::move(clusters), std::move(edges));
}

const Cluster& sup_cluster(const Dendrogram& dendro, std::string_view a, std::string_view b) {
  const auto& labels = dendro.labels();
  auto index = [&](std::string_view l) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) throw LookupError("unknown label '" + std::string(l) + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  const auto ia = index(a);
  const auto ib = index(b);
  for (const auto& c : dendro.clusters()) {
    if (c.members.test(ia) && c.members.test(ib)) return c;
  }
  throw InvariantError("no cluster contains both points");
}

Partition clusters_at(const Dendrogram& dendro, const Rational& eps) {
  if (eps < 0) throw PreconditionError("negative cut height");
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<char> taken(dendro.clusters().size(), 0);
  for (auto leaf : dendro.leaves()) {
    std::size_t top = leaf;
    while (auto up = dendro.parent(top)) {
      if (dendro.clusters()[*up].radius > eps) break;
      top = *up;
    }
    if (taken[top]) continue;
    taken[top] = 1;
    blocks.push_back(members_of(dendro.clusters()[top].members));
  }
  return Partition::canonical(std::move(blocks));
}

}  // namespace cnet
