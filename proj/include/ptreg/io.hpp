#pragma once

#include <string>

#include <json.hpp>

#include "ptreg/campaign.hpp"

namespace ptreg {

using json = nlohmann::json;

// Configuration: { "n": int, "points": [[rational-string,...],...], "label": string }
json to_json(const Configuration& g);
Configuration config_from_json(const json& j);

// Hypersurface: { "n": int, "k": int, "coeffs": [rational-string,...] } in
// graded-lex monomial order.
json to_json(const Hypersurface& v);
Hypersurface hypersurface_from_json(const json& j);

// Curve: { "n": int, "frame": [[rational-string,...],...], "params": [...] }
json to_json(const RationalNormalCurve& c);

json to_json(const GeneratorSpec& s);
GeneratorSpec generator_spec_from_json(const json& j);

json to_json(const TheoremVerdict& v);  // canonical: no timings

json to_json(const CampaignReport& r);
std::string report_to_csv(const CampaignReport& r);

CampaignPlan plan_from_json(const json& j);
std::string plan_hash(const CampaignPlan& plan);

json invariants_json(const Configuration& g, std::size_t rho_budget);

// File helpers; throw std::runtime_error with the offending path/field.
json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump_canonical(const json& j);  // 2-space indent, sorted keys, trailing \n

}  // namespace ptreg
