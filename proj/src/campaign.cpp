#include "ptreg/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

namespace ptreg {

// ----- hypothesis arithmetic -----

long long reg_secant_bound(long long d, long long n, long long t) {
  return ceil_div(d - n - 1, t) + 2;
}

long long reg_window_low(long long d, long long n, long long t) {
  return ceil_div(d - n - 1, t + 1) + 3;
}

long long on_curve_reg(long long d, long long n) { return ceil_div(d - 1, n) + 1; }

long long main2_min_degree(long long n) { return 4 * n * n + 6 * n + 1; }

long long main2_reg_threshold(long long d, long long n) {
  return ceil_div((d - 1) * (2 * n + 2), 2 * n * n + 3 * n) + 3;
}

long long main3_window_low(long long d, long long t) {
  return ceil_div((d - 1) * (2 * t + 2), 2 * t * t + 3 * t) + 2;
}

std::pair<long long, long long> qr_split(long long d, long long n) {
  if (d < 2) throw std::invalid_argument("qr_split needs d >= 2");
  const long long r = (d - 2) % n;
  return {(d - 2 - r) / n, r};
}

long long union_degree_threshold(long long n, long long extra) {
  return main2_min_degree(n) + 2 * (n + 1) * extra;
}

bool curve_section_gate(long long n, long long total_degree, long long incidence) {
  return (2 * n + 2) * (total_degree - 1) + (2 * n + 1) * (2 * n + 3) <=
         (2 * n + 3) * incidence;
}

Section5Arithmetic section5_arithmetic(long long n, long long d) {
  Section5Arithmetic out;
  out.degree_large_enough = d >= main2_min_degree(n);
  out.max_extra =
      out.degree_large_enough ? (d - main2_min_degree(n)) / (2 * (n + 1)) : 0;
  out.reg_value = on_curve_reg(d, n);
  return out;
}

// ----- generators -----

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::on_rnc: return "on_rnc";
    case GeneratorKind::rnc_plus_outliers: return "rnc_plus_outliers";
    case GeneratorKind::lgp_random: return "lgp_random";
    case GeneratorKind::clustered_subspace: return "clustered_subspace";
  }
  throw std::logic_error("unknown generator kind");
}

GeneratorKind generator_kind_from_string(const std::string& s) {
  if (s == "on_rnc") return GeneratorKind::on_rnc;
  if (s == "rnc_plus_outliers") return GeneratorKind::rnc_plus_outliers;
  if (s == "lgp_random") return GeneratorKind::lgp_random;
  if (s == "clustered_subspace") return GeneratorKind::clustered_subspace;
  throw std::invalid_argument("unknown generator kind: '" + s + "'");
}

void validate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  if (spec.d < 1) throw std::invalid_argument("generator: d must be >= 1");
  if (spec.coord_bound < 1) throw std::invalid_argument("generator: coord_bound must be >= 1");
  switch (spec.kind) {
    case GeneratorKind::on_rnc:
      if (2 * spec.coord_bound + 1 < static_cast<long long>(spec.d))
        throw std::invalid_argument("generator: coord_bound too small for d distinct parameters");
      break;
    case GeneratorKind::rnc_plus_outliers:
      if (spec.outliers < 1) throw std::invalid_argument("generator: outliers must be >= 1");
      if (spec.d < spec.outliers + spec.n + 3)
        throw std::invalid_argument("generator: need d - outliers >= n+3 points on the curve");
      break;
    case GeneratorKind::lgp_random:
      break;
    case GeneratorKind::clustered_subspace:
      if (spec.cluster_dim < 1 || spec.cluster_dim + 1 > spec.n)
        throw std::invalid_argument("generator: cluster_dim must be in [1, n-1]");
      if (spec.cluster_size < spec.cluster_dim + 2)
        throw std::invalid_argument("generator: cluster_size must be >= cluster_dim + 2");
      if (spec.d < spec.cluster_size + (spec.n - spec.cluster_dim))
        throw std::invalid_argument("generator: too few points off the cluster to span");
      break;
  }
}

namespace {

constexpr std::size_t kRejectionBudget = 10'000;

struct RejectionBudget {
  std::size_t left = kRejectionBudget;
  void spend() {
    if (left-- == 0) throw std::runtime_error("generator rejection budget exhausted");
  }
};

// Appending cand keeps all subsets of size <= cap+1 independent, given the
// existing points already satisfy this. A dependent small subset through cand
// extends to a dependent one of the checked size, so one size suffices.
bool extension_keeps_position(const std::vector<ProjPoint>& pts, const ProjPoint& cand,
                              std::size_t cap) {
  const std::size_t take = std::min(pts.size(), cap);
  if (take == 0) return true;
  const std::uint32_t p = modulus_at(0);
  const bool use_modp = modp_prefilter_enabled();
  bool ok = true;
  std::vector<std::size_t> idx(take);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t depth) {
    if (depth == take) {
      std::vector<std::vector<Int>> rows;
      rows.reserve(take + 1);
      for (std::size_t i : idx) rows.push_back(pts[i].coords);
      rows.push_back(cand.coords);
      IntMatrix m = IntMatrix::from_rows(rows);
      if (use_modp && rank_mod(m, p) == take + 1) return true;
      if (rank(m) == take + 1) return true;
      ok = false;
      return false;
    }
    for (std::size_t j = start; j < pts.size(); ++j) {
      if (pts.size() - j < take - depth) break;
      idx[depth] = j;
      if (!rec(j + 1, depth + 1)) return false;
    }
    return true;
  };
  rec(0, 0);
  return ok;
}

std::vector<long long> distinct_parameters(SplitMix64& rng, RejectionBudget& budget,
                                           std::size_t count, long long bound) {
  std::vector<long long> out;
  std::set<long long> seen;
  while (out.size() < count) {
    const long long v = rng.in_range(-bound, bound);
    if (!seen.insert(v).second) {
      budget.spend();
      continue;
    }
    out.push_back(v);
  }
  return out;
}

ProjPoint random_point(SplitMix64& rng, RejectionBudget& budget, std::size_t n,
                       long long bound) {
  while (true) {
    std::vector<Int> v(n + 1);
    bool nonzero = false;
    for (auto& x : v) {
      const long long c = rng.in_range(-bound, bound);
      x = Int(static_cast<long>(c));
      if (c != 0) nonzero = true;
    }
    if (nonzero) return ProjPoint::from_ints(std::move(v));
    budget.spend();
  }
}

GeneratedInstance make_on_rnc(const GeneratorSpec& spec, SplitMix64& rng,
                              RejectionBudget& budget) {
  GeneratedInstance inst;
  const auto params = distinct_parameters(rng, budget, spec.d, spec.coord_bound);
  std::vector<ProjPoint> pts;
  pts.reserve(spec.d);
  for (long long t : params)
    pts.push_back(standard_curve_point(spec.n, Rat(static_cast<long>(t))));
  inst.config = Configuration::make(spec.n, std::move(pts));
  for (std::size_t i = 0; i < spec.d; ++i) inst.on_curve.push_back(i);
  if (spec.d >= spec.n + 3)
    inst.curve = rnc_through(std::span<const ProjPoint>(inst.config.points.data(), spec.n + 3));
  return inst;
}

GeneratedInstance make_rnc_plus_outliers(const GeneratorSpec& spec, SplitMix64& rng,
                                         RejectionBudget& budget) {
  GeneratedInstance inst;
  const std::size_t on = spec.d - spec.outliers;
  const auto params = distinct_parameters(rng, budget, on, spec.coord_bound);
  std::vector<ProjPoint> pts;
  pts.reserve(spec.d);
  for (long long t : params)
    pts.push_back(standard_curve_point(spec.n, Rat(static_cast<long>(t))));
  while (pts.size() < spec.d) {
    ProjPoint cand = random_point(rng, budget, spec.n, spec.coord_bound);
    if (on_standard_curve(cand) ||
        std::find(pts.begin(), pts.end(), cand) != pts.end() ||
        !extension_keeps_position(pts, cand, spec.n)) {
      budget.spend();
      continue;
    }
    pts.push_back(std::move(cand));
  }
  inst.config = Configuration::make(spec.n, std::move(pts));
  for (std::size_t i = 0; i < on; ++i) inst.on_curve.push_back(i);
  for (std::size_t i = on; i < spec.d; ++i) inst.outliers.push_back(i);
  inst.curve = rnc_through(std::span<const ProjPoint>(inst.config.points.data(), spec.n + 3));
  return inst;
}

GeneratedInstance make_lgp_random(const GeneratorSpec& spec, SplitMix64& rng,
                                  RejectionBudget& budget) {
  GeneratedInstance inst;
  std::vector<ProjPoint> pts;
  while (pts.size() < spec.d) {
    ProjPoint cand = random_point(rng, budget, spec.n, spec.coord_bound);
    if (std::find(pts.begin(), pts.end(), cand) != pts.end() ||
        !extension_keeps_position(pts, cand, spec.n)) {
      budget.spend();
      continue;
    }
    pts.push_back(std::move(cand));
  }
  inst.config = Configuration::make(spec.n, std::move(pts));
  return inst;
}

GeneratedInstance make_clustered(const GeneratorSpec& spec, SplitMix64& rng,
                                 RejectionBudget& budget) {
  const std::size_t n = spec.n;
  const std::size_t t0 = spec.cluster_dim;
  while (true) {
    // random (t0)-plane from t0+1 independent points
    std::vector<ProjPoint> basis;
    while (basis.size() < t0 + 1) {
      ProjPoint cand = random_point(rng, budget, n, spec.coord_bound);
      std::vector<ProjPoint> probe = basis;
      probe.push_back(cand);
      if (!points_independent(probe)) {
        budget.spend();
        continue;
      }
      basis.push_back(std::move(cand));
    }
    LinearSubspace plane{n, basis};
    // cluster on a rational normal curve of the plane: its regularity is the
    // on-curve formula inside the plane, which is what window instances need
    const auto params = distinct_parameters(rng, budget, spec.cluster_size, spec.coord_bound);
    std::vector<ProjPoint> pts;
    bool bad_cluster = false;
    for (long long u : params) {
      std::vector<Int> coords(n + 1, Int(0));
      Int power = 1;
      for (std::size_t j = 0; j <= t0; ++j) {
        for (std::size_t i = 0; i <= n; ++i) coords[i] += power * basis[j].coords[i];
        power *= Int(static_cast<long>(u));
      }
      bool nonzero = false;
      for (const Int& x : coords)
        if (x != 0) nonzero = true;
      if (!nonzero) {
        bad_cluster = true;
        break;
      }
      ProjPoint cand = ProjPoint::from_ints(std::move(coords));
      if (std::find(pts.begin(), pts.end(), cand) != pts.end()) {
        bad_cluster = true;
        break;
      }
      pts.push_back(std::move(cand));
    }
    if (bad_cluster) {
      budget.spend();
      continue;
    }
    while (pts.size() < spec.d) {
      ProjPoint cand = random_point(rng, budget, n, spec.coord_bound);
      if (std::find(pts.begin(), pts.end(), cand) != pts.end() ||
          subspace_contains(plane, cand) ||
          !extension_keeps_position(pts, cand, t0)) {
        budget.spend();
        continue;
      }
      pts.push_back(std::move(cand));
    }
    if (span_dim(pts) != n) {
      budget.spend();
      continue;
    }
    GeneratedInstance inst;
    inst.config = Configuration::make(n, std::move(pts));
    if (t_invariant(inst.config).t != t0) {
      budget.spend();
      continue;
    }
    return inst;
  }
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
  validate(spec);
  SplitMix64 rng(mix_seed(spec.seed, 0x67656e ^ static_cast<std::uint64_t>(spec.kind)));
  RejectionBudget budget;
  switch (spec.kind) {
    case GeneratorKind::on_rnc: return make_on_rnc(spec, rng, budget);
    case GeneratorKind::rnc_plus_outliers: return make_rnc_plus_outliers(spec, rng, budget);
    case GeneratorKind::lgp_random: return make_lgp_random(spec, rng, budget);
    case GeneratorKind::clustered_subspace: return make_clustered(spec, rng, budget);
  }
  throw std::logic_error("unknown generator kind");
}

Configuration generate(const GeneratorSpec& spec) { return generate_instance(spec).config; }

// ----- verdict plumbing -----

namespace {

struct VerdictBuilder {
  TheoremVerdict v;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit VerdictBuilder(std::string id) { v.theorem_id = std::move(id); }

  bool hyp(const std::string& name, bool ok, const std::string& detail = "") {
    v.hypotheses.push_back({name, ok, detail});
    return ok;
  }
  void conclude(const std::string& name, ConclusionStatus st, const std::string& witness) {
    v.conclusions.push_back({name, st, witness});
  }
  void conclude(const std::string& name, bool holds, const std::string& witness) {
    conclude(name, holds ? ConclusionStatus::Holds : ConclusionStatus::Fails, witness);
  }
  TheoremVerdict finish() {
    v.applicable = std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                               [](const HypothesisCheck& h) { return h.satisfied; });
    if (!v.applicable) v.conclusions.clear();
    v.counterexample =
        v.applicable && std::any_of(v.conclusions.begin(), v.conclusions.end(),
                                    [](const ConclusionCheck& c) {
                                      return c.status == ConclusionStatus::Fails;
                                    });
    v.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return v;
  }
};

std::string ll(long long x) { return std::to_string(x); }

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i)
    s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "]";
}

}  // namespace

TheoremVerdict verify_regularity_bound(const Configuration& g, const VerifyOptions&) {
  VerdictBuilder b("bound");
  const long long n = static_cast<long long>(g.ambient_dim);
  const long long d = static_cast<long long>(g.degree());
  bool ok = b.hyp("degree at least n+3", d >= n + 3, "d=" + ll(d) + ", n=" + ll(n));
  ok = b.hyp("nondegenerate", d > 0 && span_dim(g.points) == g.ambient_dim) && ok;
  if (!ok) return b.finish();
  const SecantReport sec = t_invariant(g);
  const long long t = static_cast<long long>(sec.t);
  const long long reg = static_cast<long long>(regularity(g));
  const long long bound = reg_secant_bound(d, n, t);
  b.conclude("regularity within the secant bound", reg <= bound,
             "reg=" + ll(reg) + ", bound=" + ll(bound) + ", t=" + ll(t));
  if (sec.t == g.ambient_dim) {
    const auto curve = containing_curve(g);
    if (curve)
      b.conclude("on-curve regularity formula", reg == on_curve_reg(d, n),
                 "reg=" + ll(reg) + ", formula=" + ll(on_curve_reg(d, n)));
  }
  return b.finish();
}

TheoremVerdict verify_main1(const Configuration& g, const VerifyOptions&) {
  VerdictBuilder b("main1");
  const long long n = static_cast<long long>(g.ambient_dim);
  const long long d = static_cast<long long>(g.degree());
  bool ok = b.hyp("at least two points", d >= 2, "d=" + ll(d));
  ok = ok && b.hyp("nondegenerate", span_dim(g.points) == g.ambient_dim);
  if (!ok) return b.finish();
  const SecantReport sec = t_invariant(g);
  const long long t = static_cast<long long>(sec.t);
  ok = b.hyp("secant dimension below the ambient dimension", t <= n - 1, "t=" + ll(t));
  if (!ok) return b.finish();
  const long long reg = static_cast<long long>(regularity(g));
  const long long lo = reg_window_low(d, n, t);
  const long long hi = reg_secant_bound(d, n, t);
  ok = b.hyp("regularity inside the uniqueness window", lo <= reg && reg <= hi,
             "reg=" + ll(reg) + ", window=[" + ll(lo) + "," + ll(hi) + "]");
  if (!ok) return b.finish();
  const auto witnesses = find_reg_preserving_subspaces(g, sec.t);
  b.conclude("unique regularity-preserving subspace", witnesses.size() == 1,
             "witnesses=" + ll(static_cast<long long>(witnesses.size())));
  if (!witnesses.empty()) {
    const auto& w = witnesses.front();
    b.conclude("section nondegenerate in the subspace", w.nondegenerate_in_subspace,
               "section=" + index_list(w.section_indices));
    b.conclude("section in linearly general position in the subspace", w.lgp_in_subspace,
               "section=" + index_list(w.section_indices));
    b.conclude("section preserves the regularity",
               w.section_reg == static_cast<std::size_t>(reg),
               "section_reg=" + ll(static_cast<long long>(w.section_reg)));
  } else {
    b.conclude("section nondegenerate in the subspace", false, "no witness");
    b.conclude("section in linearly general position in the subspace", false, "no witness");
    b.conclude("section preserves the regularity", false, "no witness");
  }
  return b.finish();
}

TheoremVerdict verify_main2(const Configuration& g, const VerifyOptions& opt) {
  VerdictBuilder b("main2");
  const long long n = static_cast<long long>(g.ambient_dim);
  const long long d = static_cast<long long>(g.degree());
  bool ok = b.hyp("ambient dimension at least 2", n >= 2, "n=" + ll(n));
  ok = ok && b.hyp("degree threshold", d >= main2_min_degree(n),
                   "d=" + ll(d) + ", needed=" + ll(main2_min_degree(n)));
  ok = ok && b.hyp("enumeration supported", d <= 64, "d=" + ll(d));
  ok = ok && b.hyp("linearly general position", is_lgp(g));
  if (!ok) return b.finish();
  const long long reg = static_cast<long long>(regularity(g));
  const long long threshold = main2_reg_threshold(d, n);
  ok = b.hyp("regularity above the incidence threshold", reg >= threshold,
             "reg=" + ll(reg) + ", threshold=" + ll(threshold));
  if (!ok) return b.finish();

  const RegCurveScan scan = find_reg_preserving_rnc(g, opt.rho_budget);
  const long long m = on_curve_reg(d, n) - reg;
  const long long cut = d - (m + 1) * n;
  const long long rho_lb = static_cast<long long>(scan.rho);
  if (scan.complete || rho_lb > cut)
    b.conclude("incidence exceeds d-(m+1)n", rho_lb > cut,
               "rho=" + ll(rho_lb) + ", cut=" + ll(cut) + ", m=" + ll(m));
  else
    b.conclude("incidence exceeds d-(m+1)n", ConclusionStatus::Inconclusive,
               "budget exceeded, certified rho>=" + ll(rho_lb));
  if (scan.complete)
    b.conclude("unique regularity-preserving curve", scan.witnesses.size() == 1,
               "witnesses=" + ll(static_cast<long long>(scan.witnesses.size())));
  else if (scan.witnesses.size() >= 2)
    b.conclude("unique regularity-preserving curve", false,
               "two distinct witnesses found under budget");
  else
    b.conclude("unique regularity-preserving curve", ConclusionStatus::Inconclusive,
               "budget exceeded");
  if (scan.complete && scan.witnesses.size() == 1)
    b.conclude("the curve attains the maximal incidence",
               scan.witnesses.front().incidence.size() == scan.rho,
               "curve incidence=" + ll(static_cast<long long>(scan.witnesses.front().incidence.size())) +
                   ", rho=" + ll(rho_lb));
  else
    b.conclude("the curve attains the maximal incidence",
               scan.complete ? ConclusionStatus::Fails : ConclusionStatus::Inconclusive,
               scan.complete ? "no unique curve" : "budget exceeded");
  return b.finish();
}

TheoremVerdict verify_corollary(const Configuration& g, const VerifyOptions& opt) {
  VerdictBuilder b("corollary");
  const long long n = static_cast<long long>(g.ambient_dim);
  const long long d = static_cast<long long>(g.degree());
  bool ok = b.hyp("ambient dimension at least 2", n >= 2, "n=" + ll(n));
  ok = ok && b.hyp("degree threshold", d >= main2_min_degree(n),
                   "d=" + ll(d) + ", needed=" + ll(main2_min_degree(n)));
  ok = ok && b.hyp("enumeration supported", d <= 64, "d=" + ll(d));
  ok = ok && b.hyp("linearly general position", is_lgp(g));
  if (!ok) return b.finish();
  const auto [q, r] = qr_split(d, n);
  const long long reg = static_cast<long long>(regularity(g));
  const bool maximal = reg == q + 2;

  RhoReport report;
  bool have_rho = true;
  try {
    report = rho(g, opt.rho_budget);
  } catch (const std::invalid_argument&) {
    have_rho = false;
  }
  const long long rho_lb = have_rho ? static_cast<long long>(report.rho) : 0;
  const bool exact = have_rho && report.complete;
  const std::string detail = "reg=" + ll(reg) + ", maximal=" + ll(q + 2) + ", rho" +
                             (exact ? "=" : ">=") + ll(rho_lb) + ", d-r=" + ll(d - r);
  if (maximal) {
    if (rho_lb >= d - r)
      b.conclude("maximal regularity forces large curve incidence", true, detail);
    else if (exact)
      b.conclude("maximal regularity forces large curve incidence", false, detail);
    else
      b.conclude("maximal regularity forces large curve incidence",
                 ConclusionStatus::Inconclusive, detail + " (budget exceeded)");
  } else {
    if (exact)
      b.conclude("submaximal regularity forces small curve incidence", rho_lb < d - r, detail);
    else if (rho_lb >= d - r)
      b.conclude("submaximal regularity forces small curve incidence", false, detail);
    else
      b.conclude("submaximal regularity forces small curve incidence",
                 ConclusionStatus::Inconclusive, detail + " (budget exceeded)");
  }
  if (r == 0 && maximal) {
    const auto curve = containing_curve(g);
    b.conclude("r=0 with maximal regularity lies on a curve", curve.has_value(),
               curve ? "configuration contained in the witness curve" : "no containing curve");
  }
  return b.finish();
}

TheoremVerdict verify_section5(const Configuration& on_curve, const Configuration& extra,
                               const VerifyOptions&) {
  VerdictBuilder b("section5");
  const long long n = static_cast<long long>(on_curve.ambient_dim);
  const long long d = static_cast<long long>(on_curve.degree());
  const long long a = static_cast<long long>(extra.degree());
  bool ok = b.hyp("matching ambient spaces",
                  extra.degree() == 0 || extra.ambient_dim == on_curve.ambient_dim);
  const auto curve = ok ? containing_curve(on_curve) : std::nullopt;
  ok = b.hyp("base lies on a rational normal curve", curve.has_value(),
             "d=" + ll(d)) && ok;
  bool disjoint = true;
  if (curve)
    for (const auto& p : extra.points)
      if (curve_contains(*curve, p).contains) disjoint = false;
  ok = b.hyp("extra points avoid the curve", disjoint) && ok;
  Configuration uni;
  bool lgp_ok = false;
  if (ok) {
    uni = config_union(on_curve, extra);
    lgp_ok = is_lgp(uni) && uni.degree() == on_curve.degree() + extra.degree();
  }
  ok = b.hyp("union in linearly general position", lgp_ok) && ok;
  const bool gate51 = d >= union_degree_threshold(n, a);
  const long long D = d + a;
  const bool gate52 = D >= main2_min_degree(n) && curve_section_gate(n, D, d);
  const bool gate53 = D >= main2_min_degree(n);
  ok = b.hyp("some degree threshold met", gate51 || gate52 || gate53,
             "d=" + ll(d) + ", extra=" + ll(a)) && ok;
  if (!ok) return b.finish();

  const long long reg_base = static_cast<long long>(regularity(on_curve));
  const long long reg_union = static_cast<long long>(regularity(uni));
  if (gate51)
    b.conclude("added points leave the regularity unchanged",
               reg_union == reg_base && reg_base == on_curve_reg(d, n),
               "reg=" + ll(reg_base) + ", union reg=" + ll(reg_union) + ", formula=" +
                   ll(on_curve_reg(d, n)));
  if (gate52)
    b.conclude("large curve section preserves the union regularity", reg_base == reg_union,
               "section reg=" + ll(reg_base) + ", union reg=" + ll(reg_union));
  if (gate53) {
    const auto [q, r] = qr_split(D, n);
    const long long h1v = static_cast<long long>(h1(uni, static_cast<unsigned>(q)));
    b.conclude("h1 at the critical degree within bound", h1v <= r + 1,
               "h1(" + ll(q) + ")=" + ll(h1v) + ", r+1=" + ll(r + 1));
    const bool on_a_curve = containing_curve(uni).has_value();
    b.conclude("h1 equality exactly on a curve", (h1v == r + 1) == on_a_curve,
               "h1=" + ll(h1v) + ", r+1=" + ll(r + 1) + ", on_curve=" +
                   (on_a_curve ? "yes" : "no"));
  }
  return b.finish();
}

TheoremVerdict verify_section5(const GeneratedInstance& inst, const VerifyOptions& opt) {
  if (inst.curve) {
    Configuration base = inst.config.subset(inst.on_curve);
    Configuration extra = inst.config.subset(inst.outliers);
    return verify_section5(base, extra, opt);
  }
  Configuration empty;
  empty.ambient_dim = inst.config.ambient_dim;
  return verify_section5(inst.config, empty, opt);
}

std::pair<Configuration, Configuration> section5_split(const Configuration& g,
                                                       std::size_t budget) {
  Configuration empty;
  empty.ambient_dim = g.ambient_dim;
  try {
    const RhoReport report = rho(g, budget);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0, k = 0; i < g.degree(); ++i) {
      if (k < report.incidence.size() && report.incidence[k] == i)
        ++k;
      else
        rest.push_back(i);
    }
    return {g.subset(report.incidence), g.subset(rest)};
  } catch (const std::invalid_argument&) {
    return {g, empty};
  }
}

TheoremVerdict verify_main3(const Configuration& g, const VerifyOptions& opt) {
  VerdictBuilder b("main3");
  const long long n = static_cast<long long>(g.ambient_dim);
  const long long d = static_cast<long long>(g.degree());
  bool ok = b.hyp("at least two points", d >= 2, "d=" + ll(d));
  ok = ok && b.hyp("nondegenerate", span_dim(g.points) == g.ambient_dim);
  if (!ok) return b.finish();
  const SecantReport sec = t_invariant(g);
  const long long t = static_cast<long long>(sec.t);
  const long long reg = static_cast<long long>(regularity(g));
  const long long lo = main3_window_low(d, t);
  const long long hi = reg_secant_bound(d, n, t);
  ok = b.hyp("regularity inside the strict window", lo < reg && reg <= hi,
             "reg=" + ll(reg) + ", window=(" + ll(lo) + "," + ll(hi) + "]");
  if (!ok) return b.finish();

  if (sec.t == g.ambient_dim) {
    const RegCurveScan scan = find_reg_preserving_rnc(g, opt.rho_budget);
    b.conclude("unique regularity-preserving subspace", true, "the ambient space");
    if (scan.complete)
      b.conclude("unique regularity-preserving curve inside it", scan.witnesses.size() == 1,
                 "witnesses=" + ll(static_cast<long long>(scan.witnesses.size())));
    else
      b.conclude("unique regularity-preserving curve inside it",
                 scan.witnesses.size() >= 2 ? ConclusionStatus::Fails
                                            : ConclusionStatus::Inconclusive,
                 "budget exceeded");
    return b.finish();
  }

  const auto witnesses = find_reg_preserving_subspaces(g, sec.t);
  b.conclude("unique regularity-preserving subspace", witnesses.size() == 1,
             "witnesses=" + ll(static_cast<long long>(witnesses.size())));
  if (witnesses.size() != 1) {
    b.conclude("unique regularity-preserving curve inside it", false, "no unique subspace");
    return b.finish();
  }
  const auto& w = witnesses.front();
  if (sec.t == 1) {
    b.conclude("unique regularity-preserving curve inside it",
               w.section_reg == static_cast<std::size_t>(reg),
               "the subspace is a line and is its own curve");
    return b.finish();
  }
  const Configuration restricted = section_in_subspace(w.subspace, w.section);
  const RegCurveScan scan = find_reg_preserving_rnc(restricted, opt.rho_budget);
  if (scan.complete)
    b.conclude("unique regularity-preserving curve inside it",
               scan.witnesses.size() == 1 &&
                   scan.witnesses.front().section_reg == static_cast<std::size_t>(reg),
               "witnesses=" + ll(static_cast<long long>(scan.witnesses.size())));
  else
    b.conclude("unique regularity-preserving curve inside it",
               scan.witnesses.size() >= 2 ? ConclusionStatus::Fails
                                          : ConclusionStatus::Inconclusive,
               "budget exceeded");
  return b.finish();
}

bool known_theorem_id(const std::string& id) {
  return id == "bound" || id == "main1" || id == "main2" || id == "corollary" ||
         id == "section5" || id == "main3";
}

TheoremVerdict verify_by_id(const std::string& id, const GeneratedInstance& inst,
                            const VerifyOptions& opt) {
  if (id == "bound") return verify_regularity_bound(inst.config, opt);
  if (id == "main1") return verify_main1(inst.config, opt);
  if (id == "main2") return verify_main2(inst.config, opt);
  if (id == "corollary") return verify_corollary(inst.config, opt);
  if (id == "section5") return verify_section5(inst, opt);
  if (id == "main3") return verify_main3(inst.config, opt);
  throw std::invalid_argument("unknown theorem id: '" + id + "'");
}

CampaignReport run_campaign(const CampaignPlan& plan, const VerifyOptions& opt) {
  if (plan.entries.empty()) throw std::invalid_argument("plan: entries must be nonempty");
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const PlanEntry& e = plan.entries[i];
    if (e.theorems.empty())
      throw std::invalid_argument("plan entry " + std::to_string(i) + ": empty theorem list");
    for (const auto& id : e.theorems)
      if (!known_theorem_id(id))
        throw std::invalid_argument("plan entry " + std::to_string(i) +
                                    ": unknown theorem id '" + id + "'");
    if (e.count < 1)
      throw std::invalid_argument("plan entry " + std::to_string(i) + ": count must be >= 1");
    validate(e.spec);
  }

  CampaignReport report;
  for (std::size_t ei = 0; ei < plan.entries.size() && !report.aborted; ++ei) {
    const PlanEntry& entry = plan.entries[ei];
    for (std::size_t rep = 0; rep < entry.count && !report.aborted; ++rep) {
      InstanceReport ir;
      ir.spec = entry.spec;
      ir.spec.seed = mix_seed(plan.base_seed, entry.spec.seed, (ei << 20) | rep);
      ir.seed = ir.spec.seed;
      try {
        const GeneratedInstance inst = generate_instance(ir.spec);
        for (const auto& id : entry.theorems) {
          TheoremVerdict v = verify_by_id(id, inst, opt);
          SummaryRow& row = report.summary[id];
          if (!v.applicable)
            ++row.not_applicable;
          else {
            ++row.applicable;
            if (v.counterexample) {
              report.aborted = true;
              report.abort_reason = "counterexample: theorem " + id + ", entry " +
                                    std::to_string(ei) + ", instance " + std::to_string(rep) +
                                    ", seed " + std::to_string(ir.seed);
              ir.counterexample_config = inst.config;
            } else if (std::any_of(v.conclusions.begin(), v.conclusions.end(),
                                   [](const ConclusionCheck& c) {
                                     return c.status == ConclusionStatus::Inconclusive;
                                   }))
              ++row.inconclusive;
            else
              ++row.passed;
          }
          ir.verdicts.push_back(std::move(v));
          if (report.aborted) break;
        }
      } catch (const std::runtime_error& e) {
        ir.generator_error = e.what();
      }
      report.instances.push_back(std::move(ir));
    }
  }
  return report;
}

}  // namespace ptreg
