#include <CLI11.hpp>

#include <iostream>

#include "ptreg/io.hpp"

namespace {

using ptreg::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotApplicable = 2;
constexpr int kExitCounterexample = 3;

void emit(const json& j, const std::string& out_path) {
  const std::string text = ptreg::dump_canonical(j);
  if (out_path.empty())
    std::cout << text;
  else
    ptreg::write_text_file(out_path, text);
}

int run_invariants(const std::string& in, const std::string& out, std::size_t budget) {
  const ptreg::Configuration g = ptreg::config_from_json(ptreg::load_json_file(in));
  const json j = ptreg::invariants_json(g, budget);
  std::cout << "d=" << j["d"] << " n=" << j["n"];
  if (j.contains("span_dim")) std::cout << " span=" << j["span_dim"];
  if (j.contains("is_lgp")) std::cout << " lgp=" << j["is_lgp"];
  if (j.contains("t")) std::cout << " t=" << j["t"];
  if (j.contains("reg")) std::cout << " reg=" << j["reg"];
  if (j.contains("rho") && j["rho"].contains("value"))
    std::cout << " rho" << (j["rho"]["complete"].get<bool>() ? "=" : ">=")
              << j["rho"]["value"];
  std::cout << "\n";
  if (!out.empty()) emit(j, out);
  return kExitOk;
}

int run_generate(const ptreg::GeneratorSpec& spec, const std::string& out) {
  const ptreg::Configuration g = ptreg::generate(spec);
  emit(ptreg::to_json(g), out);
  std::cout << "generated " << g.degree() << " points in P^" << g.ambient_dim << "\n";
  return kExitOk;
}

int run_verify(const std::string& theorem, const std::string& in, const std::string& out,
               std::size_t budget) {
  const ptreg::Configuration g = ptreg::config_from_json(ptreg::load_json_file(in));
  ptreg::VerifyOptions opt;
  opt.rho_budget = budget;
  ptreg::TheoremVerdict v;
  if (theorem == "section5") {
    const auto [base, extra] = ptreg::section5_split(g, budget);
    v = ptreg::verify_section5(base, extra, opt);
  } else {
    ptreg::GeneratedInstance inst;
    inst.config = g;
    v = ptreg::verify_by_id(theorem, inst, opt);
  }
  if (!out.empty()) emit(ptreg::to_json(v), out);
  std::cout << "theorem " << v.theorem_id << ": "
            << (v.counterexample          ? "COUNTEREXAMPLE"
                : !v.applicable           ? "not applicable"
                                          : "checked")
            << " (" << v.elapsed_ms << " ms)\n";
  for (const auto& h : v.hypotheses)
    std::cout << "  hypothesis " << h.name << ": " << (h.satisfied ? "yes" : "no")
              << (h.detail.empty() ? "" : "  [" + h.detail + "]") << "\n";
  for (const auto& c : v.conclusions) {
    const char* s = c.status == ptreg::ConclusionStatus::Holds    ? "holds"
                    : c.status == ptreg::ConclusionStatus::Fails ? "FAILS"
                                                                 : "inconclusive";
    std::cout << "  conclusion " << c.name << ": " << s
              << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
  }
  if (v.counterexample) return kExitCounterexample;
  if (!v.applicable) return kExitNotApplicable;
  return kExitOk;
}

int run_campaign_cmd(const std::string& plan_path, std::uint64_t seed, bool seed_set,
                     const std::string& out, const std::string& format, std::size_t budget) {
  ptreg::CampaignPlan plan = ptreg::plan_from_json(ptreg::load_json_file(plan_path));
  if (seed_set) plan.base_seed = seed;
  ptreg::VerifyOptions opt;
  opt.rho_budget = budget;
  ptreg::CampaignReport report = ptreg::run_campaign(plan, opt);
  report.plan_hash = ptreg::plan_hash(plan);
  if (!out.empty()) {
    if (format == "csv")
      ptreg::write_text_file(out, ptreg::report_to_csv(report));
    else
      ptreg::write_text_file(out, ptreg::dump_canonical(ptreg::to_json(report)));
  }
  for (const auto& [id, row] : report.summary)
    std::cout << id << ": applicable=" << row.applicable << " passed=" << row.passed
              << " not_applicable=" << row.not_applicable
              << " inconclusive=" << row.inconclusive << "\n";
  if (report.aborted) {
    std::cout << "ABORTED: " << report.abort_reason << "\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of finite point configurations in projective space"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "json", theorem, kind = "on_rnc", plan_path;
  std::size_t n = 2, d = 5, outliers = 1, cluster_dim = 1, cluster_size = 4;
  long long coord_bound = 1'000'000;
  std::uint64_t seed = 0;
  std::size_t rho_budget = 500'000;
  std::string prefilter = "on";
  bool seed_set = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--rho-budget", rho_budget, "max subsets enumerated per curve scan");
    cmd->add_option("--modp-prefilter", prefilter, "on|off")
        ->check(CLI::IsMember({"on", "off"}));
  };

  CLI::App* inv = app.add_subcommand("invariants", "invariants of a configuration file");
  inv->add_option("--in", in_path, "configuration JSON")->required();
  inv->add_option("--out", out_path, "write invariants JSON here");
  add_common(inv);

  CLI::App* gen = app.add_subcommand("generate", "write a generated configuration");
  gen->add_option("--kind", kind, "on_rnc|rnc_plus_outliers|lgp_random|clustered_subspace");
  gen->add_option("--n", n, "ambient dimension");
  gen->add_option("--d", d, "number of points");
  gen->add_option("--outliers", outliers, "off-curve points (rnc_plus_outliers)");
  gen->add_option("--cluster-dim", cluster_dim, "cluster plane dimension");
  gen->add_option("--cluster-size", cluster_size, "points in the cluster");
  gen->add_option("--coord-bound", coord_bound, "coordinate magnitude bound");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output configuration JSON")->required();
  add_common(gen);

  CLI::App* ver = app.add_subcommand("verify", "run one theorem verifier on a file");
  ver->add_option("--theorem", theorem, "bound|main1|main2|corollary|section5")
      ->required()
      ->check(CLI::IsMember({"bound", "main1", "main2", "corollary", "section5"}));
  ver->add_option("--in", in_path, "configuration JSON")->required();
  ver->add_option("--out", out_path, "write verdict JSON here");
  add_common(ver);

  CLI::App* camp = app.add_subcommand("campaign", "run a verification plan");
  camp->add_option("--plan", plan_path, "plan JSON")->required();
  camp->add_option("--seed", seed, "base seed override")->each([&](const std::string&) {
    seed_set = true;
  });
  camp->add_option("--out", out_path, "report path");
  camp->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(camp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  ptreg::set_modp_prefilter(prefilter == "on");

  try {
    if (inv->parsed()) return run_invariants(in_path, out_path, rho_budget);
    if (gen->parsed()) {
      ptreg::GeneratorSpec spec;
      spec.kind = ptreg::generator_kind_from_string(kind);
      spec.n = n;
      spec.d = d;
      spec.outliers = outliers;
      spec.cluster_dim = cluster_dim;
      spec.cluster_size = cluster_size;
      spec.seed = seed;
      spec.coord_bound = coord_bound;
      return run_generate(spec, out_path);
    }
    if (ver->parsed()) return run_verify(theorem, in_path, out_path, rho_budget);
    if (camp->parsed())
      return run_campaign_cmd(plan_path, seed, seed_set, out_path, format, rho_budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
