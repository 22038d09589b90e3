#include "clusternet/phylo.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "clusternet/dendrogram.hpp"
#include "clusternet/errors.hpp"
#include "clusternet/serialize.hpp"

namespace cnet::phylo {
namespace {

std::string weights_text(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ", ";
    s += to_string(w[k]);
  }
  return s + ")";
}

std::vector<MemberSet> shape_of(const Dendrogram& d) {
  std::vector<MemberSet> out;
  for (const auto& c : d.clusters()) out.push_back(c.members);
  return out;
}

}  // namespace

MarkerSet::MarkerSet(std::vector<Marker> markers) : markers_(std::move(markers)) {
  if (markers_.empty()) throw StructuralError("marker set is empty");
  std::set<std::string> ids;
  for (const auto& m : markers_) {
    if (!ids.insert(m.id).second) throw StructuralError("duplicate marker id '" + m.id + "'");
    if (m.distances.labels() != markers_.front().distances.labels()) {
      throw StructuralError("marker '" + m.id + "' has a different taxon set");
    }
  }
}

void check_weights(const WeightVector& w, std::size_t markers) {
  if (w.size() != markers) {
    throw StructuralError("weight vector " + weights_text(w) + " has " + std::to_string(w.size()) +
                          " entries for " + std::to_string(markers) + " markers");
  }
  bool any = false;
  for (const auto& x : w) {
    if (x < 0) throw StructuralError("negative weight in " + weights_text(w));
    any = any || x > 0;
  }
  if (!any) throw StructuralError("weight vector " + weights_text(w) + " is all zero");
}

WeightVector normalized(const WeightVector& w) {
  Rational total = 0;
  for (const auto& x : w) total += x;
  WeightVector out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(Rational(x / total));
  return out;
}

SweepGrid SweepGrid::explicit_list(std::vector<WeightVector> weights, std::size_t markers) {
  if (weights.empty()) throw StructuralError("sweep grid is empty");
  SweepGrid grid;
  std::set<WeightVector> seen;
  for (auto& w : weights) {
    check_weights(w, markers);
    if (seen.insert(normalized(w)).second) grid.weights_.push_back(std::move(w));
  }
  return grid;
}

SweepGrid SweepGrid::simplex(std::size_t resolution, std::size_t markers) {
  if (resolution == 0) throw StructuralError("simplex grid resolution must be positive");
  if (markers == 0) throw StructuralError("no markers");
  std::vector<WeightVector> all;
  std::vector<std::size_t> counts(markers, 0);
  // Compositions of `resolution` into `markers` parts, lexicographically descending.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == markers) {
      counts[pos] = left;
      WeightVector w;
      for (auto c : counts) w.emplace_back(static_cast<unsigned long>(c), static_cast<unsigned long>(resolution));
      for (auto& x : w) x.canonicalize();
      all.push_back(std::move(w));
      return;
    }
    for (std::size_t c = left + 1; c-- > 0;) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, resolution);
  return explicit_list(std::move(all), markers);
}

DistanceMatrix combine(const MarkerSet& markers, const WeightVector& w) {
  check_weights(w, markers.size());
  const auto& first = markers.markers().front().distances;
  std::vector<Rational> entries(first.entries().size());
  for (std::size_t j = 0; j < markers.size(); ++j) {
    if (w[j] == 0) continue;
    const auto& d = markers.markers()[j].distances.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += w[j] * d[k];
  }
  return DistanceMatrix(first.labels(), std::move(entries));
}

SweepResult sweep(const MarkerSet& markers, const SweepGrid& grid) {
  const auto& ws = grid.weights();
  if (ws.empty()) throw StructuralError("sweep grid is empty");

  std::vector<Dendrogram> built(ws.size());
  std::vector<std::string> errors(ws.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(ws.size()); ++k) {
    try {
      built[k] = build_dendrogram(combine(markers, ws[k]));
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw StructuralError(e);
  }

  SweepResult result;
  std::vector<Dendrogram> kept;
  std::vector<std::vector<MemberSet>> shapes;
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    auto shape = shape_of(built[k]);
    auto it = std::find(shapes.begin(), shapes.end(), shape);
    if (it != shapes.end()) {
      result.sources[static_cast<std::size_t>(it - shapes.begin())].second.push_back(ws[k]);
      continue;
    }
    shapes.push_back(std::move(shape));
    ids.push_back("w" + std::to_string(kept.size()));
    result.sources.push_back({ids.back(), {ws[k]}});
    kept.push_back(std::move(built[k]));
  }
  result.network = merge_dendrograms(kept, ids);
  return result;
}

MarkerSet read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open manifest '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("manifest '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("markers") || !doc["markers"].is_array()) {
    throw StructuralError("manifest needs a 'markers' array");
  }
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<MarkerSet::Marker> markers;
  for (const auto& m : doc["markers"]) {
    if (!m.is_object() || !m.contains("id") || !m.contains("path") || !m["id"].is_string() ||
        !m["path"].is_string()) {
      throw StructuralError("each marker needs string 'id' and 'path'");
    }
    const auto file = base / m["path"].get<std::string>();
    markers.push_back({m["id"].get<std::string>(), read_matrix_csv_file(file.string())});
  }
  return MarkerSet(std::move(markers));
}

SweepGrid read_sweep_spec(const nlohmann::json& spec, std::size_t markers) {
  if (!spec.is_object() || !spec.contains("grid") || !spec["grid"].is_object()) {
    throw StructuralError("sweep spec needs a 'grid' object");
  }
  const auto& grid = spec["grid"];
  const auto type = grid.value("type", std::string());
  if (type == "simplex") {
    if (!grid.contains("resolution") || !grid["resolution"].is_number_unsigned()) {
      throw StructuralError("simplex grid needs a positive integer 'resolution'");
    }
    return SweepGrid::simplex(grid["resolution"].get<std::size_t>(), markers);
  }
  if (type == "explicit") {
    if (!grid.contains("weights") || !grid["weights"].is_array()) {
      throw StructuralError("explicit grid needs a 'weights' array");
    }
    std::vector<WeightVector> weights;
    for (const auto& row : grid["weights"]) {
      if (!row.is_array()) throw StructuralError("each weight vector must be an array");
      WeightVector w;
      for (const auto& x : row) {
        if (x.is_string()) {
          w.push_back(parse_rational(x.get<std::string>()));
        } else if (x.is_number_integer()) {
          w.emplace_back(x.get<long>());
        } else if (x.is_number()) {
          // Decimal literal as written, never through binary floating point.
          w.push_back(parse_rational(x.dump()));
        } else {
          throw StructuralError("weights must be numbers or rational strings");
        }
      }
      weights.push_back(std::move(w));
    }
    return SweepGrid::explicit_list(std::move(weights), markers);
  }
  throw StructuralError("unknown grid type '" + type + "'");
}

}  // namespace cnet::phylo
