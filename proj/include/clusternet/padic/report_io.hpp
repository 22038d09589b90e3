#pragma once

#include "json.hpp"

#include "clusternet/padic/axioms.hpp"
#include "clusternet/padic/building.hpp"

namespace cnet::padic {

nlohmann::json to_json(const LatticeChain& chain);
nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const CorrespondenceReport& report);

}  // namespace cnet::padic
