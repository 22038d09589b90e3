#include "clusternet/metric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "clusternet/detail/union_find.hpp"
#include "clusternet/errors.hpp"

namespace cnet {
namespace {

std::string cell(const std::vector<std::string>& labels, std::size_t i, std::size_t j) {
  return "(" + labels[i] + ", " + labels[j] + ")";
}

}  // namespace

Partition Partition::canonical(std::vector<std::vector<std::size_t>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); }),
               blocks.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition{std::move(blocks)};
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<Rational> entries) {
  const std::size_t n = labels.size();
  if (entries.size() != n * n) {
    throw StructuralError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                          std::to_string(n) + "x" + std::to_string(n));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw StructuralError("empty label");
    if (!seen.insert(l).second) throw StructuralError("duplicate label '" + l + "'");
  }
  for (auto& v : entries) v.canonicalize();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i * n + i] != 0) {
      throw StructuralError("nonzero diagonal entry " + cell(labels, i, i) + " = " +
                            to_string(entries[i * n + i]));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = entries[i * n + j];
      if (v < 0) {
        throw StructuralError("negative entry " + cell(labels, i, j) + " = " + to_string(v));
      }
      if (j > i && v != entries[j * n + i]) {
        throw StructuralError("asymmetric entry " + cell(labels, i, j) + " = " + to_string(v) +
                              " but " + cell(labels, j, i) + " = " + to_string(entries[j * n + i]));
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  labels_.reserve(n);
  entries_.reserve(n * n);
  for (auto i : order) labels_.push_back(std::move(labels[i]));
  for (auto i : order) {
    for (auto j : order) entries_.push_back(entries[i * n + j]);
  }
}

DistanceMatrix DistanceMatrix::from_rows(std::vector<std::string> labels,
                                         const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = labels.size();
  if (rows.size() != n) {
    throw StructuralError("matrix has " + std::to_string(rows.size()) + " rows for " +
                          std::to_string(n) + " labels");
  }
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw StructuralError("row '" + labels[i] + "' has " + std::to_string(rows[i].size()) +
                            " values, expected " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return DistanceMatrix(std::move(labels), std::move(entries));
}

std::size_t DistanceMatrix::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw LookupError("unknown label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

UltrametricMatrix::UltrametricMatrix(DistanceMatrix matrix) : matrix_(std::move(matrix)) {
  const auto& d = matrix_;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d(i, k) > std::max(d(i, j), d(j, k))) {
          throw StructuralError("strong triangle inequality fails for " + d.labels()[i] + ", " +
                                d.labels()[j] + ", " + d.labels()[k]);
        }
      }
    }
  }
}

MetricReport validate(const DistanceMatrix& d) {
  MetricReport report;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (d(i, k) > d(i, j) + d(j, k)) {
          report.is_metric = false;
          report.is_ultrametric = false;
          report.violations.push_back({i, j, k, TripleViolation::Kind::triangle});
        } else if (d(i, k) > std::max(d(i, j), d(j, k))) {
          report.is_ultrametric = false;
          report.violations.push_back({i, j, k, TripleViolation::Kind::strong_triangle});
        }
      }
    }
  }
  return report;
}

Partition epsilon_components(const DistanceMatrix& d, const Rational& eps) {
  const std::size_t n = d.size();
  detail::UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d(i, j) <= eps) uf.unite(i, j);
    }
  }
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[uf.find(i)].push_back(i);
  return Partition::canonical(std::move(blocks));
}

namespace {

DistanceMatrix decode(const DistanceMatrix& d, const kernels::RankedMatrix& ranked,
                      const std::vector<std::uint32_t>& closure) {
  std::vector<Rational> entries;
  entries.reserve(closure.size());
  for (auto r : closure) entries.push_back(ranked.levels[r]);
  return DistanceMatrix(d.labels(), std::move(entries));
}

}  // namespace

UltrametricMatrix chain_distance(const DistanceMatrix& d) {
  const auto ranked = kernels::rank_encode(d);
  const auto closure = kernels::bottleneck_mst(ranked.ranks, ranked.n);
  return UltrametricMatrix(decode(d, ranked, closure), UltrametricMatrix::Trusted{});
}

UltrametricMatrix chain_distance_reference(const DistanceMatrix& d) {
  const auto ranked = kernels::rank_encode(d);
  const auto closure = kernels::bottleneck_closure_serial(ranked.ranks, ranked.n);
  return UltrametricMatrix(decode(d, ranked, closure), UltrametricMatrix::Trusted{});
}

Partition zero_quotient(const UltrametricMatrix& u) {
  return epsilon_components(u.matrix(), Rational(0));
}

UltrametricMatrix induced_on_blocks(const UltrametricMatrix& u, const Partition& blocks) {
  const std::size_t m = blocks.blocks.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& b : blocks.blocks) {
    std::string name;
    for (auto i : b) {
      if (!name.empty()) name += '+';
      name += u.labels()[i];
    }
    labels.push_back(std::move(name));
  }
  std::vector<Rational> entries(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) {
        for (auto i : blocks.blocks[a]) {
          for (auto j : blocks.blocks[a]) {
            if (u(i, j) != 0) {
              throw PreconditionError("block '" + labels[a] + "' is not a zero-distance class");
            }
          }
        }
        continue;
      }
      entries[a * m + b] = u(blocks.blocks[a].front(), blocks.blocks[b].front());
    }
  }
  return UltrametricMatrix(DistanceMatrix(std::move(labels), std::move(entries)),
                           UltrametricMatrix::Trusted{});
}

}  // namespace cnet
