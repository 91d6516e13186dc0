#pragma once

#include <string>

#include "json.hpp"

#include "fitring/modpres.hpp"

namespace fitring {

using json = nlohmann::json;

// Presentation <-> JSON:
// { "p": ..., "d": ..., "Nprec": ..., "t": ..., "e": ...,
//   "h": [..optional..],
//   "relations": [ column... ] }
// column = t-array of elements; element = p-array of coefficients;
// coefficient = d-array of integers in [0, p^Nprec).
json presentation_to_json(const Presentation& P);
Presentation presentation_from_json(const json& j);

json report_to_json(const ModuleReport& r);
ModuleReport report_from_json(const json& j); // flags recomputed for consistency

json value_set_to_json(const std::vector<GroupRingElem>& vs);
std::vector<GroupRingElem> value_set_from_json(const Cfg& cfg, const json& j);

} // namespace fitring
