#pragma once

#include "efluct/freeness.hpp"
#include "efluct/gamma_poly.hpp"
#include "efluct/n_expansion.hpp"
#include "efluct/pairing.hpp"
#include "efluct/sampler.hpp"
#include "efluct/spoke_arc.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace efluct {

using json = nlohmann::ordered_json;

json to_json(const GammaPoly& p);
GammaPoly gamma_poly_from_json(const json& j);
json to_json(const NExpansion& e);
json to_json(const Pairing& pi); // 1-based pairs
json to_json(const SpokeArcConfig& cfg);
json to_json(const CovEstimate& est);
json to_json(const ClusterWord& cw);
ClusterWord cluster_word_from_json(const json& j);
json to_json(const FreenessResult& r);
json to_json(const FreenessReport& r);

// Freeness grid file: [{inner: [[color, "word"], ...], outer: [...], channel}].
std::vector<FreenessCase> freeness_grid_from_json(const json& j);

struct RunManifest {
    std::string command;
    json params = json::object();
    std::uint64_t seed = 0;
    std::string version = EFLUCT_VERSION;
    std::string timestamp;
};

std::string utc_timestamp();
json to_json(const RunManifest& m);

} // namespace efluct
