#include <array>
#include <sstream>

#include "clusternet/serialize.hpp"

namespace cnet {
namespace {

using nlohmann::json;

json names(const MemberSet& set, const std::vector<std::string>& labels) {
  json out = json::array();
  for (auto i : members_of(set)) out.push_back(labels[i]);
  return out;
}

json metric_names(const std::vector<std::size_t>& metrics, const ClusterNetwork& net) {
  json out = json::array();
  for (auto m : metrics) out.push_back(net.metric_ids()[m]);
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

constexpr std::array<const char*, 4> kStyles = {"solid", "dashed", "dotted", "bold"};
constexpr std::array<const char*, 6> kColors = {"black", "red", "blue", "darkgreen", "orange", "purple"};

std::string metric_style(std::size_t m) {
  return std::string("style=") + kStyles[m % kStyles.size()] + ", color=" +
         kColors[m % kColors.size()];
}

}  // namespace

json to_json(const ClusterNetwork& net) {
  json vertices = json::array();
  for (std::size_t v = 0; v < net.vertices().size(); ++v) {
    const auto& vertex = net.vertices()[v];
    json radii = json::object();
    for (const auto& [m, r] : vertex.radius) radii[net.metric_ids()[m]] = to_string(r);
    vertices.push_back({{"id", v},
                        {"members", names(vertex.members, net.labels())},
                        {"metrics", metric_names(vertex.metrics, net)},
                        {"radii", radii}});
  }
  json edges = json::array();
  for (const auto& e : net.edges()) {
    edges.push_back({{"child", e.child}, {"parent", e.parent}, {"metrics", metric_names(e.metrics, net)}});
  }
  return {{"labels", net.labels()}, {"vertices", vertices}, {"edges", edges}};
}

std::string to_dot(const ClusterNetwork& net) {
  std::ostringstream out;
  out << "digraph cluster_network {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < net.vertices().size(); ++v) {
    out << "  v" << v << " [label=" << quoted(member_names(net.vertices()[v].members, net.labels()))
        << "];\n";
  }
  for (const auto& e : net.edges()) {
    for (auto m : e.metrics) {
      out << "  v" << e.child << " -> v" << e.parent << " [" << metric_style(m)
          << ", label=" << quoted(net.metric_ids()[m]) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

json to_json(const CompatibilityReport& report, const ClusterNetwork& net) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"balls", {v.first, v.second}}, {"intersection", names(v.intersection, net.labels())}});
  }
  return {{"compatible", report.compatible}, {"violations", violations}};
}

json to_json(const SimplicialComplex& complex, const ClusterNetwork& net) {
  json simplices = json::array();
  for (const auto& s : complex.simplices) {
    simplices.push_back({{"vertices", s.vertices},
                         {"metric", net.metric_ids()[s.witness_metric]},
                         {"anchor", {s.anchor.first, s.anchor.second}}});
  }
  return {{"subfamily", metric_names(complex.subfamily, net)},
          {"simplices", simplices},
          {"max_dimension", complex.max_dimension()},
          {"ambiguous", complex.ambiguous}};
}

json to_json(const DimensionReport& report, const ClusterNetwork& net) {
  json pairs = json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({{"lower", p.lower}, {"upper", p.upper}, {"dimension", p.dimension}});
  }
  return {{"subfamily", metric_names(report.subfamily, net)},
          {"overall", report.overall},
          {"pairs", pairs},
          {"ambiguous", report.ambiguous}};
}

std::string to_dot(const SimplicialComplex& complex, const ClusterNetwork& net) {
  std::ostringstream out;
  out << "graph skeleton {\n  node [shape=box];\n";
  std::vector<char> used(net.vertices().size(), 0);
  for (const auto& s : complex.simplices) {
    for (auto v : s.vertices) used[v] = 1;
  }
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) continue;
    out << "  v" << v << " [label=" << quoted(member_names(net.vertices()[v].members, net.labels()))
        << "];\n";
  }
  for (const auto& s : complex.simplices) {
    if (s.vertices.size() != 2) continue;
    out << "  v" << s.vertices[0] << " -- v" << s.vertices[1] << " ["
        << metric_style(s.witness_metric) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cnet
