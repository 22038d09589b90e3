// Command-line front end: clustering, networks, complexes and the p-adic
// verification report. JSON goes to stdout (or --out); errors go to stderr
// as a JSON object and select the exit code.

#include <omp.h>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clusternet/complex.hpp"
#include "clusternet/dendrogram.hpp"
#include "clusternet/errors.hpp"
#include "clusternet/network.hpp"
#include "clusternet/padic/building.hpp"
#include "clusternet/padic/report_io.hpp"
#include "clusternet/phylo.hpp"
#include "clusternet/serialize.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kInput = 2, kInternal = 3 };

struct Options {
  std::string format = "json";
  std::string out;
  std::string meta;
  std::vector<std::string> inputs;
  std::string ids;
  std::string r;
  long p = 2;
  std::size_t d = 2;
  std::string q;
  int precision = 8;
  std::optional<int> window;
  std::string manifest;
  std::string spec;
};

// Payload plus the format it is in.
struct Output {
  std::string text;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw cnet::StructuralError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw cnet::StructuralError("empty list");
  return out;
}

cnet::DistanceMatrix load_matrix(const std::string& path) {
  if (path == "-") {
    try {
      return cnet::read_matrix_csv(std::cin);
    } catch (const cnet::StructuralError& e) {
      throw cnet::StructuralError(std::string("<stdin>: ") + e.what());
    }
  }
  return cnet::read_matrix_csv_file(path);
}

std::string metric_id_for(const std::string& path) {
  return path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
}

cnet::ClusterNetwork load_network(const Options& opt) {
  if (opt.inputs.empty()) throw cnet::StructuralError("no input matrices");
  std::vector<std::string> ids;
  if (!opt.ids.empty()) {
    ids = split_list(opt.ids);
    if (ids.size() != opt.inputs.size()) {
      throw cnet::StructuralError(std::to_string(ids.size()) + " ids for " +
                                  std::to_string(opt.inputs.size()) + " inputs");
    }
  } else {
    for (const auto& path : opt.inputs) ids.push_back(metric_id_for(path));
  }
  std::size_t stdin_uses = 0;
  for (const auto& path : opt.inputs) stdin_uses += path == "-";
  if (stdin_uses > 1) throw cnet::StructuralError("stdin ('-') can be read only once");

  std::vector<cnet::DistanceMatrix> matrices;
  for (const auto& path : opt.inputs) matrices.push_back(load_matrix(path));
  std::vector<cnet::Dendrogram> dendros(matrices.size());
  const long long n = static_cast<long long>(matrices.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    dendros[static_cast<std::size_t>(i)] = cnet::build_dendrogram(matrices[static_cast<std::size_t>(i)]);
  }
  return cnet::merge_dendrograms(dendros, ids);
}

cnet::MetricSubset subfamily(const cnet::ClusterNetwork& net, const Options& opt) {
  if (opt.r.empty()) return net.all_metrics();
  const auto ids = split_list(opt.r);
  return net.resolve(ids);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json compatibility_block(const cnet::ClusterNetwork& net, json& payload) {
  const auto report = cnet::check_compatibility(net);
  if (!report.compatible) {
    payload["warnings"] = json::array(
        {"metric family is not compatible: " + std::to_string(report.violations.size()) +
         " intersection(s) of balls are not balls of any metric"});
  }
  return cnet::to_json(report, net);
}

Output run_cluster(const Options& opt) {
  if (opt.inputs.size() != 1) throw cnet::StructuralError("cluster takes exactly one matrix");
  const auto net = load_network(opt);
  return {opt.format == "dot" ? cnet::to_dot(net) : dump(cnet::to_json(net))};
}

Output run_network(const Options& opt) {
  const auto net = load_network(opt);
  return {opt.format == "dot" ? cnet::to_dot(net) : dump(cnet::to_json(net))};
}

Output run_complex(const Options& opt) {
  const auto net = load_network(opt);
  const auto r = subfamily(net, opt);
  const auto complex = cnet::build_complex(net, r);
  if (opt.format == "dot") return {cnet::to_dot(complex, net)};
  json payload = cnet::to_json(complex, net);
  payload["dimension"] = cnet::to_json(cnet::network_dimension(net, r), net);
  payload["compatibility"] = compatibility_block(net, payload);
  return {dump(payload)};
}

Output run_dimension(const Options& opt) {
  if (opt.format == "dot") throw cnet::PreconditionError("dimension has no DOT output");
  const auto net = load_network(opt);
  json payload = cnet::to_json(cnet::network_dimension(net, subfamily(net, opt)), net);
  payload["compatibility"] = compatibility_block(net, payload);
  return {dump(payload)};
}

Output run_padic(const Options& opt) {
  if (opt.format == "dot") throw cnet::PreconditionError("padic-verify has no DOT output");
  std::vector<cnet::Rational> q;
  for (const auto& item : split_list(opt.q)) q.push_back(cnet::parse_rational(item));
  const auto report = cnet::padic::verify_correspondence(opt.p, opt.d, q, opt.precision, opt.window);
  return {dump(cnet::padic::to_json(report))};
}

Output run_phylo(const Options& opt) {
  const auto markers = cnet::phylo::read_manifest(opt.manifest);
  std::ifstream in(opt.spec);
  if (!in) throw cnet::StructuralError("cannot open sweep spec '" + opt.spec + "'");
  json spec;
  try {
    in >> spec;
  } catch (const json::exception& e) {
    throw cnet::StructuralError("sweep spec '" + opt.spec + "' is not valid JSON: " + e.what());
  }
  const auto grid = cnet::phylo::read_sweep_spec(spec, markers.size());
  const auto result = cnet::phylo::sweep(markers, grid);
  if (opt.format == "dot") return {cnet::to_dot(result.network)};

  json payload = cnet::to_json(result.network);
  json sources = json::array();
  for (const auto& [id, weights] : result.sources) {
    json ws = json::array();
    for (const auto& w : weights) {
      json row = json::array();
      for (const auto& x : w) row.push_back(cnet::to_string(x));
      ws.push_back(row);
    }
    sources.push_back({{"metric", id}, {"weights", ws}});
  }
  payload["sources"] = sources;
  return {dump(payload)};
}

void write_output(const Options& opt, const Output& output) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << output.text;
    std::cout.flush();
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw cnet::StructuralError("cannot write '" + opt.out + "'");
  out << output.text;
}

void write_meta(const Options& opt, const std::string& command, double elapsed_ms, int status) {
  if (opt.meta.empty()) return;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream stamp;
  stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  const json meta{{"tool", "clusternet"},      {"version", kVersion},
                  {"subcommand", command},     {"timestamp", stamp.str()},
                  {"elapsed_ms", elapsed_ms},  {"threads", omp_get_max_threads()},
                  {"exit_code", status}};
  std::ofstream out(opt.meta);
  if (out) out << meta.dump(2) << "\n";
}

int report_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump()
            << "\n";
  return code;
}

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "Output file (default stdout)");
  cmd->add_option("--emit-meta", opt.meta, "Write run metadata (timestamp, timing) to this file");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Chain-distance clustering, cluster networks and p-adic ball complexes"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* cluster = app.add_subcommand("cluster", "Dendrogram of one distance matrix");
  cluster->add_option("matrix", opt.inputs, "CSV matrix, or - for stdin")->required();
  add_format(cluster, opt);

  auto* network = app.add_subcommand("network", "Cluster network of several matrices");
  network->add_option("matrices", opt.inputs, "CSV matrices (ids default to file stems)")->required();
  network->add_option("--ids", opt.ids, "Comma-separated metric ids, one per matrix");
  add_format(network, opt);

  auto* complex = app.add_subcommand("complex", "Simplicial complex of a cluster network");
  complex->add_option("matrices", opt.inputs, "CSV matrices")->required();
  complex->add_option("--ids", opt.ids, "Comma-separated metric ids, one per matrix");
  complex->add_option("--r", opt.r, "Comma-separated subfamily of metric ids (default: all)");
  add_format(complex, opt);

  auto* dimension = app.add_subcommand("dimension", "r-dimension of a cluster network");
  dimension->add_option("matrices", opt.inputs, "CSV matrices")->required();
  dimension->add_option("--ids", opt.ids, "Comma-separated metric ids, one per matrix");
  dimension->add_option("--r", opt.r, "Comma-separated subfamily of metric ids (default: all)");
  add_format(dimension, opt);

  auto* padic = app.add_subcommand("padic-verify", "Check the norm / maximal-chain correspondence");
  padic->add_option("--p", opt.p, "Prime")->required();
  padic->add_option("--d", opt.d, "Dimension")->required();
  padic->add_option("--q", opt.q, "Weights, e.g. 3/5,4/5")->required();
  padic->add_option("--precision", opt.precision, "p-adic digits kept")->capture_default_str();
  padic->add_option("--window", opt.window, "Also check norm axioms on (Z/p^m)^d");
  add_format(padic, opt);

  auto* phylo = app.add_subcommand("phylo-sweep", "Network of weighted marker combinations");
  phylo->add_option("manifest", opt.manifest, "Marker manifest JSON")->required();
  phylo->add_option("spec", opt.spec, "Sweep spec JSON")->required();
  add_format(phylo, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kInput);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  int status = kOk;
  try {
    Output output;
    if (command == "cluster") output = run_cluster(opt);
    else if (command == "network") output = run_network(opt);
    else if (command == "complex") output = run_complex(opt);
    else if (command == "dimension") output = run_dimension(opt);
    else if (command == "padic-verify") output = run_padic(opt);
    else output = run_phylo(opt);
    write_output(opt, output);
  } catch (const cnet::StructuralError& e) {
    status = report_error("structural", e.what(), kInput);
  } catch (const cnet::LookupError& e) {
    status = report_error("lookup", e.what(), kInput);
  } catch (const cnet::AmbiguityError& e) {
    status = report_error("ambiguity", e.what(), kInput);
  } catch (const cnet::PreconditionError& e) {
    status = report_error("precondition", e.what(), kInput);
  } catch (const cnet::PrecisionError& e) {
    status = report_error("precision", e.what(), kInput);
  } catch (const cnet::InvariantError& e) {
    status = report_error("invariant", e.what(), kInternal);
  } catch (const std::exception& e) {
    status = report_error("internal", e.what(), kInternal);
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  write_meta(opt, command, elapsed, status);
  return status;
}
