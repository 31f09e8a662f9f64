#include "ptreg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ptreg {

namespace {

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw std::runtime_error(std::string("missing or non-string field '") + field + "'");
  return j[field].get<std::string>();
}

long long require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw std::runtime_error(std::string("missing or non-integer field '") + field + "'");
  return j[field].get<long long>();
}

}  // namespace

json to_json(const Configuration& g) {
  json points = json::array();
  for (const auto& p : g.points) points.push_back(p.to_strings());
  return json{{"n", g.ambient_dim}, {"points", points}, {"label", g.label}};
}

Configuration config_from_json(const json& j) {
  const long long n = require_int(j, "n");
  if (n < 1) throw std::runtime_error("field 'n' must be >= 1");
  if (!j.contains("points") || !j["points"].is_array())
    throw std::runtime_error("missing or non-array field 'points'");
  std::vector<ProjPoint> pts;
  for (const auto& arr : j["points"]) {
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n + 1))
      throw std::runtime_error("field 'points': each point needs n+1 coordinates");
    std::vector<std::string> coords;
    for (const auto& c : arr) {
      if (!c.is_string())
        throw std::runtime_error("field 'points': coordinates must be rational strings");
      coords.push_back(c.get<std::string>());
    }
    try {
      pts.push_back(ProjPoint::from_strings(coords));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("field 'points': ") + e.what());
    }
  }
  std::string label = j.contains("label") ? require_string(j, "label") : "";
  try {
    return Configuration::make(static_cast<std::size_t>(n), std::move(pts), std::move(label));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("field 'points': ") + e.what());
  }
}

json to_json(const Hypersurface& v) {
  json coeffs = json::array();
  for (const Int& c : v.coeffs) coeffs.push_back(c.get_str());
  return json{{"n", v.ambient_dim}, {"k", v.degree}, {"coeffs", coeffs}};
}

Hypersurface hypersurface_from_json(const json& j) {
  const long long n = require_int(j, "n");
  const long long k = require_int(j, "k");
  if (n < 1) throw std::runtime_error("field 'n' must be >= 1");
  if (k < 1) throw std::runtime_error("field 'k' must be >= 1");
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::runtime_error("missing or non-array field 'coeffs'");
  std::vector<Rat> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::runtime_error("field 'coeffs': entries must be rational strings");
    coeffs.push_back(rat_from_string(c.get<std::string>()));
  }
  try {
    return Hypersurface::make(static_cast<std::size_t>(n), static_cast<unsigned>(k), coeffs);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("field 'coeffs': ") + e.what());
  }
}

json to_json(const RationalNormalCurve& c) {
  json frame = json::array();
  for (std::size_t i = 0; i < c.to_frame.mat.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.to_frame.mat.cols; ++j)
      row.push_back(c.to_frame.mat.at(i, j).get_str());
    frame.push_back(row);
  }
  json params = json::array();
  for (const Rat& a : c.params) params.push_back(rat_to_string(a));
  return json{{"n", c.ambient_dim}, {"frame", frame}, {"params", params}};
}

json to_json(const GeneratorSpec& s) {
  json j{{"kind", to_string(s.kind)},
         {"n", s.n},
         {"d", s.d},
         {"seed", s.seed},
         {"coord_bound", s.coord_bound}};
  if (s.kind == GeneratorKind::rnc_plus_outliers) j["outliers"] = s.outliers;
  if (s.kind == GeneratorKind::clustered_subspace) {
    j["cluster_dim"] = s.cluster_dim;
    j["cluster_size"] = s.cluster_size;
  }
  return j;
}

GeneratorSpec generator_spec_from_json(const json& j) {
  GeneratorSpec s;
  s.kind = generator_kind_from_string(require_string(j, "kind"));
  s.n = static_cast<std::size_t>(require_int(j, "n"));
  s.d = static_cast<std::size_t>(require_int(j, "d"));
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("coord_bound")) s.coord_bound = require_int(j, "coord_bound");
  if (j.contains("outliers")) s.outliers = static_cast<std::size_t>(require_int(j, "outliers"));
  if (j.contains("cluster_dim"))
    s.cluster_dim = static_cast<std::size_t>(require_int(j, "cluster_dim"));
  if (j.contains("cluster_size"))
    s.cluster_size = static_cast<std::size_t>(require_int(j, "cluster_size"));
  validate(s);
  return s;
}

namespace {

const char* status_name(ConclusionStatus s) {
  switch (s) {
    case ConclusionStatus::Holds: return "holds";
    case ConclusionStatus::Fails: return "fails";
    case ConclusionStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace

json to_json(const TheoremVerdict& v) {
  json hyps = json::array();
  for (const auto& h : v.hypotheses)
    hyps.push_back(json{{"name", h.name}, {"satisfied", h.satisfied}, {"detail", h.detail}});
  json cons = json::array();
  for (const auto& c : v.conclusions)
    cons.push_back(json{{"name", c.name}, {"status", status_name(c.status)},
                        {"witness", c.witness}});
  return json{{"theorem", v.theorem_id},
              {"hypotheses", hyps},
              {"conclusions", cons},
              {"applicable", v.applicable},
              {"counterexample", v.counterexample}};
}

json to_json(const CampaignReport& r) {
  json instances = json::array();
  for (const auto& ir : r.instances) {
    json verdicts = json::array();
    for (const auto& v : ir.verdicts) verdicts.push_back(to_json(v));
    json inst{{"spec", to_json(ir.spec)}, {"seed", ir.seed}, {"verdicts", verdicts}};
    if (!ir.generator_error.empty()) inst["generator_error"] = ir.generator_error;
    if (ir.counterexample_config) inst["configuration"] = to_json(*ir.counterexample_config);
    instances.push_back(inst);
  }
  json summary = json::object();
  for (const auto& [id, row] : r.summary)
    summary[id] = json{{"applicable", row.applicable},
                       {"passed", row.passed},
                       {"not_applicable", row.not_applicable},
                       {"inconclusive", row.inconclusive}};
  json out{{"plan_hash", r.plan_hash}, {"instances", instances}, {"summary", summary}};
  if (r.aborted) {
    out["aborted"] = true;
    out["abort_reason"] = r.abort_reason;
  }
  return out;
}

std::string report_to_csv(const CampaignReport& r) {
  std::ostringstream os;
  os << "instance,kind,n,d,seed,theorem,applicable,passed,counterexample\n";
  for (std::size_t i = 0; i < r.instances.size(); ++i) {
    const auto& ir = r.instances[i];
    for (const auto& v : ir.verdicts) {
      const bool passed =
          v.applicable && !v.counterexample &&
          std::all_of(v.conclusions.begin(), v.conclusions.end(),
                      [](const ConclusionCheck& c) { return c.status == ConclusionStatus::Holds; });
      os << i << ',' << to_string(ir.spec.kind) << ',' << ir.spec.n << ',' << ir.spec.d << ','
         << ir.seed << ',' << v.theorem_id << ',' << (v.applicable ? 1 : 0) << ','
         << (passed ? 1 : 0) << ',' << (v.counterexample ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

CampaignPlan plan_from_json(const json& j) {
  CampaignPlan plan;
  if (j.contains("seed")) plan.base_seed = j["seed"].get<std::uint64_t>();
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty())
    throw std::runtime_error("plan: missing or empty field 'entries'");
  for (const auto& e : j["entries"]) {
    PlanEntry entry;
    if (!e.contains("spec")) throw std::runtime_error("plan entry: missing field 'spec'");
    entry.spec = generator_spec_from_json(e["spec"]);
    if (!e.contains("theorems") || !e["theorems"].is_array() || e["theorems"].empty())
      throw std::runtime_error("plan entry: missing or empty field 'theorems'");
    for (const auto& t : e["theorems"]) {
      if (!t.is_string() || !known_theorem_id(t.get<std::string>()))
        throw std::runtime_error("plan entry: unknown theorem id");
      entry.theorems.push_back(t.get<std::string>());
    }
    if (e.contains("count")) {
      const long long c = e["count"].get<long long>();
      if (c < 1) throw std::runtime_error("plan entry: field 'count' must be >= 1");
      entry.count = static_cast<std::size_t>(c);
    }
    plan.entries.push_back(std::move(entry));
  }
  return plan;
}

std::string plan_hash(const CampaignPlan& plan) {
  json entries = json::array();
  for (const auto& e : plan.entries) {
    json t = json::array();
    for (const auto& id : e.theorems) t.push_back(id);
    entries.push_back(json{{"spec", to_json(e.spec)}, {"theorems", t}, {"count", e.count}});
  }
  const std::string blob =
      json{{"seed", plan.base_seed}, {"entries", entries}}.dump();
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (unsigned char c : blob) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json invariants_json(const Configuration& g, std::size_t rho_budget) {
  json out;
  out["n"] = g.ambient_dim;
  out["d"] = g.degree();
  if (g.degree() == 0) return out;
  out["span_dim"] = span_dim(g.points);
  out["is_lgp"] = is_lgp(g);
  if (g.degree() >= 2) {
    const SecantReport sec = t_invariant(g);
    out["t"] = sec.t;
    if (sec.witness) out["t_witness"] = *sec.witness;
  }
  const HilbertProfile profile = hilbert_profile(g);
  out["reg"] = profile.reg;
  out["hilbert"] = profile.values;
  out["h1"] = profile.h1;
  if (g.degree() >= g.ambient_dim + 3) {
    try {
      const RhoReport r = rho(g, rho_budget);
      out["rho"] = json{{"value", r.rho},
                        {"incidence", r.incidence},
                        {"complete", r.complete},
                        {"curves_examined", r.curves_examined},
                        {"subsets_enumerated", r.subsets_enumerated}};
      if (!r.complete) out["rho"]["note"] = "budget exceeded; value is a lower bound";
    } catch (const std::invalid_argument& e) {
      out["rho"] = json{{"error", e.what()}};
    }
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ptreg
