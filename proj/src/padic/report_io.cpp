#include "clusternet/padic/report_io.hpp"

namespace cnet::padic {

nlohmann::json to_json(const LatticeChain& chain) {
  auto out = nlohmann::json::array();
  for (const auto& l : chain.lattices) out.push_back(l.to_json());
  return out;
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json out{{"window", report.window},
                     {"points", report.points},
                     {"pairs", report.pairs},
                     {"nondegenerate", report.nondegenerate},
                     {"linear", report.linear},
                     {"strong_triangle", report.strong_triangle},
                     {"passed", report.passed()}};
  if (report.witness) {
    out["witness"] = {{"axiom", report.witness->axiom},
                      {"x", report.witness->x},
                      {"y", report.witness->y}};
  }
  return out;
}

nlohmann::json to_json(const CorrespondenceReport& report) {
  auto q = nlohmann::json::array();
  for (const auto& v : report.q) q.push_back(cnet::to_string(v));

  auto chains = nlohmann::json::array();
  for (const auto& c : report.chains) {
    nlohmann::json entry{{"index", c.index},
                         {"passed", c.passed()},
                         {"round_trip", c.round_trip},
                         {"lattices", to_json(c.chain)},
                         {"basis", c.basis},
                         {"decomposition",
                          {{"memberships", c.decomposition.memberships},
                           {"direct_sum", c.decomposition.decomposition},
                           {"det_valuation", c.decomposition.det_valuation},
                           {"expected_det_valuation", c.decomposition.expected_valuation},
                           {"failures", c.decomposition.failures}}}};
    if (c.recovered && !c.round_trip) entry["recovered"] = to_json(*c.recovered);
    if (c.axioms) entry["axioms"] = to_json(*c.axioms);
    if (!c.error.empty()) entry["error"] = c.error;
    chains.push_back(std::move(entry));
  }

  auto collisions = nlohmann::json::array();
  for (const auto& [a, b] : report.collisions) collisions.push_back({a, b});

  nlohmann::json out{
      {"parameters",
       {{"p", report.p}, {"d", report.d}, {"q", q}, {"precision", report.precision}}},
      {"generic", report.generic},
      {"counts",
       {{"strictly_between", report.strictly_between},
        {"expected_strictly_between", report.expected_strictly_between},
        {"maximal_chains", report.chain_count},
        {"complete_flags", report.flag_count}}},
      {"identity_chain_length", report.identity_chain_length},
      {"round_trips", {{"passed", report.round_trips_passed}, {"total", report.chains.size()}}},
      {"distinct_ball_chains", report.distinct_ball_chains},
      {"collisions", collisions},
      {"chains", chains},
      {"scope",
       "local: lattices between pZ_p^d and Z_p^d only; surjectivity onto the whole building is not "
       "checked"},
      {"passed", report.passed}};
  if (report.axioms_window) out["axioms_window"] = *report.axioms_window;
  return out;
}

}  // namespace cnet::padic
