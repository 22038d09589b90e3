#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"

#include "clusternet/complex.hpp"
#include "clusternet/metric.hpp"
#include "clusternet/network.hpp"

namespace cnet {

/// CSV distance matrix: header `label,L1,...,Ln`, then one row per label in
/// header order. Values are decimal or p/q literals. Throws StructuralError
/// with the offending row/cell.
DistanceMatrix read_matrix_csv(std::istream& in);
DistanceMatrix read_matrix_csv_file(const std::string& path);
void write_matrix_csv(std::ostream& out, const DistanceMatrix& d);

nlohmann::json to_json(const ClusterNetwork& net);

/// One DOT node per vertex; one DOT edge per (edge, metric), styled by
/// metric position.
std::string to_dot(const ClusterNetwork& net);

nlohmann::json to_json(const CompatibilityReport& report, const ClusterNetwork& net);
nlohmann::json to_json(const SimplicialComplex& complex, const ClusterNetwork& net);
nlohmann::json to_json(const DimensionReport& report, const ClusterNetwork& net);

/// 1-skeleton of the complex over the network's vertices.
std::string to_dot(const SimplicialComplex& complex, const ClusterNetwork& net);

}  // namespace cnet
