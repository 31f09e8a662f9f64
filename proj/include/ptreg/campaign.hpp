#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptreg/rnc.hpp"

namespace ptreg {

// ----- exact hypothesis arithmetic (ceilings over the integers) -----

// ceil((d-n-1)/t) + 2: the secant upper bound for the regularity.
long long reg_secant_bound(long long d, long long n, long long t);
// ceil((d-n-1)/(t+1)) + 3: lower edge of the uniqueness window.
long long reg_window_low(long long d, long long n, long long t);
// ceil((d-1)/n) + 1: regularity of d points on a degree-n rational normal
// curve, and the maximal regularity of any LGP configuration.
long long on_curve_reg(long long d, long long n);
// 4n^2 + 6n + 1
long long main2_min_degree(long long n);
// ceil((d-1)(2n+2)/(2n^2+3n)) + 3
long long main2_reg_threshold(long long d, long long n);
// strict lower edge for the composed statement: ceil((d-1)(2t+2)/(2t^2+3t)) + 2
long long main3_window_low(long long d, long long t);
// d = nq + r + 2 with 0 <= r <= n-1; returns (q, r)
std::pair<long long, long long> qr_split(long long d, long long n);
// degree needed so that a extra points cannot move the regularity
long long union_degree_threshold(long long n, long long extra);
// (2n+2)(D-1)/(2n+3) + 2n+1 <= incidence, in cleared-denominator form
bool curve_section_gate(long long n, long long total_degree, long long incidence);

struct Section5Arithmetic {
  bool degree_large_enough = false;
  long long max_extra = 0;   // largest |A| the threshold allows
  long long reg_value = 0;   // on-curve regularity at this degree
};
Section5Arithmetic section5_arithmetic(long long n, long long d);

// ----- generators -----

enum class GeneratorKind { on_rnc, rnc_plus_outliers, lgp_random, clustered_subspace };

std::string to_string(GeneratorKind k);
GeneratorKind generator_kind_from_string(const std::string& s);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::on_rnc;
  std::size_t n = 2;
  std::size_t d = 1;
  std::size_t outliers = 0;      // rnc_plus_outliers
  std::size_t cluster_dim = 0;   // clustered_subspace
  std::size_t cluster_size = 0;  // clustered_subspace
  std::uint64_t seed = 0;
  long long coord_bound = 1'000'000;  // numerators drawn from [-B, B], denominator 1
};

void validate(const GeneratorSpec& spec);

struct GeneratedInstance {
  Configuration config;
  std::optional<RationalNormalCurve> curve;  // known supporting curve, if any
  std::vector<std::size_t> on_curve;
  std::vector<std::size_t> outliers;
};

// Deterministic for a fixed spec (seed included). Throws std::runtime_error
// when the rejection budget (10^4 resamples) is exhausted.
GeneratedInstance generate_instance(const GeneratorSpec& spec);
Configuration generate(const GeneratorSpec& spec);

// ----- verdicts -----

struct HypothesisCheck {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

enum class ConclusionStatus { Holds, Fails, Inconclusive };

struct ConclusionCheck {
  std::string name;
  ConclusionStatus status = ConclusionStatus::Inconclusive;
  std::string witness;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<ConclusionCheck> conclusions;  // empty when not applicable
  bool applicable = false;
  bool counterexample = false;  // applicable and some conclusion fails
  double elapsed_ms = 0.0;      // excluded from canonical report output
};

struct VerifyOptions {
  std::size_t rho_budget = 500'000;
};

TheoremVerdict verify_regularity_bound(const Configuration& g, const VerifyOptions& opt = {});
TheoremVerdict verify_main1(const Configuration& g, const VerifyOptions& opt = {});
TheoremVerdict verify_main2(const Configuration& g, const VerifyOptions& opt = {});
TheoremVerdict verify_corollary(const Configuration& g, const VerifyOptions& opt = {});
TheoremVerdict verify_section5(const Configuration& on_curve, const Configuration& extra,
                               const VerifyOptions& opt = {});
TheoremVerdict verify_section5(const GeneratedInstance& inst, const VerifyOptions& opt = {});
// Composition: unique reg-preserving t-plane, then the unique curve inside it.
TheoremVerdict verify_main3(const Configuration& g, const VerifyOptions& opt = {});

// Splits an arbitrary configuration into (largest on-curve part, rest) via a
// budgeted curve scan; used to drive the section5 verifier from a bare file.
std::pair<Configuration, Configuration> section5_split(const Configuration& g,
                                                       std::size_t budget = 500'000);

TheoremVerdict verify_by_id(const std::string& id, const GeneratedInstance& inst,
                            const VerifyOptions& opt = {});
bool known_theorem_id(const std::string& id);

// ----- campaign runner -----

struct PlanEntry {
  GeneratorSpec spec;
  std::vector<std::string> theorems;
  std::size_t count = 1;  // instances with derived seeds
};

struct CampaignPlan {
  std::uint64_t base_seed = 0;
  std::vector<PlanEntry> entries;
};

struct InstanceReport {
  GeneratorSpec spec;          // with the effective instance seed
  std::uint64_t seed = 0;
  std::string generator_error; // nonempty when generation failed
  std::vector<TheoremVerdict> verdicts;
  std::optional<Configuration> counterexample_config;  // full dump on abort
};

struct SummaryRow {
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t not_applicable = 0;
  std::size_t inconclusive = 0;
};

struct CampaignReport {
  std::string plan_hash;
  std::vector<InstanceReport> instances;
  std::map<std::string, SummaryRow> summary;
  bool aborted = false;
  std::string abort_reason;
};

// Sequential, deterministic; aborts at the first counterexample with the
// offending instance kept in the report.
CampaignReport run_campaign(const CampaignPlan& plan, const VerifyOptions& opt = {});

}  // namespace ptreg
