#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ptreg/rnc.hpp"

using namespace ptreg;

namespace {

ProjPoint pt(const std::vector<long>& v) {
  std::vector<Int> coords;
  for (long x : v) coords.emplace_back(x);
  return ProjPoint::from_ints(std::move(coords));
}

Configuration curve_config(std::size_t n, const std::vector<long>& params) {
  std::vector<ProjPoint> pts;
  for (long t : params) pts.push_back(standard_curve_point(n, Rat(t)));
  return Configuration::make(n, std::move(pts));
}

std::vector<long> range_params(long count) {
  std::vector<long> v(count);
  for (long i = 0; i < count; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("interpolation through the standard frame plus (1:2:3)") {
  std::vector<ProjPoint> pts{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}),
                             pt({1, 1, 1}), pt({1, 2, 3})};
  RationalNormalCurve c = rnc_through(pts);
  REQUIRE(c.params.size() == 3);
  CHECK(c.params[0] == Rat(-1));
  CHECK(c.params[1] == Rat(-1, 2));
  CHECK(c.params[2] == Rat(-1, 3));
  // oracle: substitute the parametrization at (1:0)
  CHECK(curve_point(c, 1, 0) == pt({1, 2, 3}));
  CHECK(curve_point(c, 0, 1) == pt({1, 1, 1}));
  for (const auto& p : pts) CHECK(curve_contains(c, p).contains);
}

TEST_CASE("samples from the standard curve are recovered") {
  Configuration g = curve_config(3, {0, 1, 2, 3, 4, 5, -1, -2});
  std::vector<ProjPoint> six(g.points.begin(), g.points.begin() + 6);
  RationalNormalCurve c = rnc_through(six);
  for (const auto& p : g.points) CHECK(curve_contains(c, p).contains);
  // fresh samples not used in construction
  CHECK(curve_contains(c, standard_curve_point(3, Rat(7))).contains);
  CHECK(curve_contains(c, standard_curve_point(3, Rat(-5, 3))).contains);
  CHECK(!curve_contains(c, pt({1, 1, 0, 0})).contains);
}

TEST_CASE("interpolation is order independent on incidence sets") {
  Configuration g = curve_config(2, {0, 1, 2, 3, 4, 5, 6});
  std::vector<ProjPoint> pts(g.points.begin(), g.points.begin() + 5);
  const auto inc = incidence_set(rnc_through(pts), g);
  std::vector<ProjPoint> shuffled{pts[3], pts[0], pts[4], pts[2], pts[1]};
  CHECK(incidence_set(rnc_through(shuffled), g) == inc);
  CHECK(inc.size() == 7);
}

TEST_CASE("non-lgp inputs are rejected") {
  std::vector<ProjPoint> bad{pt({1, 0, 0}), pt({1, 1, 0}), pt({1, 2, 0}),
                             pt({0, 0, 1}), pt({1, 2, 3})};
  CHECK_THROWS_AS(rnc_through(bad), std::invalid_argument);
}

TEST_CASE("membership against the implicit conic") {
  std::vector<ProjPoint> pts{pt({1, 0, 0}), pt({1, 1, 1}), pt({1, 2, 4}),
                             pt({1, 3, 9}), pt({1, -1, 1})};
  RationalNormalCurve c = rnc_through(pts);
  // oracle: x0*x2 - x1^2 vanishes exactly on the standard conic
  std::vector<ProjPoint> probes{pt({1, 1, 0}), pt({1, 5, 25}), pt({0, 0, 1}),
                                pt({2, 3, 7}), pt({4, 6, 9})};
  for (const auto& p : probes) {
    const bool implicit = p.coords[0] * p.coords[2] == p.coords[1] * p.coords[1];
    CHECK(curve_contains(c, p).contains == implicit);
  }
}

TEST_CASE("rho when all points sit on one conic") {
  Configuration g = curve_config(2, range_params(7));
  RhoReport r = rho(g);
  CHECK(r.rho == 7);
  CHECK(r.complete);
  CHECK(r.incidence.size() == 7);
  CHECK(r.curves_examined == 1);
}

TEST_CASE("rho with one outlier enumerates every subset") {
  std::vector<ProjPoint> pts;
  for (long t = 0; t < 5; ++t) pts.push_back(pt({1, t, t * t}));
  pts.push_back(pt({1, 1, 0}));
  Configuration g = Configuration::make(2, pts);
  RhoReport r = rho(g);
  CHECK(r.complete);
  CHECK(r.rho == 5);
  CHECK(r.incidence == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(r.subsets_enumerated == 6);  // C(6,5)

  // oracle: any (n+3)-subset avoiding the outlier returns the conic itself
  for (const auto& p : g.subset(r.incidence).points)
    CHECK(curve_contains(r.curve, p).contains);
}

TEST_CASE("distinct curves share at most n+2 configuration points") {
  // two conics; (1:0:0) lies on both, so the second catches 7 points
  std::vector<ProjPoint> pts;
  for (long t = 0; t < 6; ++t) pts.push_back(pt({1, t, t * t}));
  for (long t = 1; t < 7; ++t) pts.push_back(pt({1, t, 2 * t * t}));
  Configuration g = Configuration::make(2, pts);
  RhoReport r = rho(g);
  CHECK(r.complete);
  CHECK(r.rho == 7);
  CHECK(r.incidence == std::vector<std::size_t>{0, 6, 7, 8, 9, 10, 11});
  // the winner re-verifies through the parametric route
  for (std::size_t i : r.incidence) CHECK(curve_contains(r.curve, g.points[i]).contains);
  // pairwise intersections of incidence sets stay small: rebuild both conics
  Configuration first = g.subset({0, 1, 2, 3, 4, 5});
  Configuration second = g.subset({6, 7, 8, 9, 10, 11});
  auto inc1 = incidence_set(rnc_through({first.points.begin(), first.points.begin() + 5}), g);
  auto inc2 = incidence_set(rnc_through({second.points.begin(), second.points.begin() + 5}), g);
  std::vector<std::size_t> common;
  std::set_intersection(inc1.begin(), inc1.end(), inc2.begin(), inc2.end(),
                        std::back_inserter(common));
  CHECK(common.size() <= 4);  // n + 2
}

TEST_CASE("rho is at least n+3 on lgp configurations") {
  SplitMix64 rng(77);
  for (int iter = 0; iter < 4; ++iter) {
    std::vector<ProjPoint> pts;
    while (pts.size() < 7) {
      std::vector<Int> c(3);
      for (auto& x : c) x = Int(static_cast<long>(rng.in_range(-40, 40)));
      bool zero = true;
      for (const auto& x : c)
        if (x != 0) zero = false;
      if (zero) continue;
      ProjPoint p = ProjPoint::from_ints(std::move(c));
      if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
      pts.push_back(std::move(p));
      if (smallest_dependent_subset(pts, 3)) pts.pop_back();
    }
    Configuration g = Configuration::make(2, pts);
    RhoReport r = rho(g);
    CHECK(r.complete);
    CHECK(r.rho >= 5);
    CHECK(r.rho <= g.degree());
  }
}

TEST_CASE("budget cuts report incompleteness") {
  Configuration g = curve_config(2, range_params(12));
  RhoReport r = rho(g, 3);
  CHECK(!r.complete);
  CHECK(r.subsets_enumerated == 3);
  CHECK(r.rho == 12);  // first subset already finds the full conic
}

TEST_CASE("reg-preserving curve on a fully contained configuration") {
  Configuration g = curve_config(2, range_params(30));
  RegCurveScan scan = find_reg_preserving_rnc(g);
  CHECK(scan.complete);
  CHECK(scan.reg == 16);
  REQUIRE(scan.witnesses.size() == 1);
  CHECK(scan.witnesses[0].incidence.size() == 30);
  CHECK(scan.rho == 30);
}

TEST_CASE("localization is immediate on curve-contained configurations") {
  Configuration g = curve_config(2, range_params(8));
  LocalizeResult r = rnc_localize(g);
  CHECK(r.success);
  CHECK(r.steps.empty());
  CHECK(r.chain.size() == 1);
  CHECK(r.final_incidence.size() == 8);
}

TEST_CASE("localization peels an outlier with a quadric") {
  std::vector<ProjPoint> pts;
  for (long t = 0; t < 12; ++t) pts.push_back(pt({1, t, t * t}));
  pts.push_back(pt({1, 1, 0}));
  Configuration g = Configuration::make(2, pts);
  REQUIRE(is_lgp(g));
  // the first 5-subset spans the conic, which misses the outlier: one cut
  LocalizeResult r = rnc_localize(g);
  REQUIRE(r.success);
  CHECK(r.chain.size() == 2);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].reg_after == r.reg_initial);
  CHECK(r.final_incidence.size() == 12);
  CHECK(std::find(r.final_incidence.begin(), r.final_incidence.end(), 12) ==
        r.final_incidence.end());
}

TEST_CASE("localization under the incidence hypotheses stays within the step bound") {
  // 35 conic samples plus one outlier: reg 18 meets the threshold
  // ceil(35*6/14)+3 = 18, and m = 19 - 18 = 1 caps the chain at mn+n-1 = 3
  std::vector<ProjPoint> pts;
  for (long t = 0; t < 35; ++t) pts.push_back(pt({1, t, t * t}));
  pts.push_back(pt({1, 1, 0}));
  Configuration g = Configuration::make(2, pts);
  const long long reg = static_cast<long long>(regularity(g));
  REQUIRE(reg == 18);
  REQUIRE(reg >= ceil_div(35 * 6, 14) + 3);
  LocalizeResult r = rnc_localize(g);
  REQUIRE(r.success);
  const long long m = ceil_div(35, 2) + 1 - reg;
  CHECK(static_cast<long long>(r.steps.size()) <= m * 2 + 2 - 1);
  for (const auto& step : r.steps) CHECK(step.reg_after == r.reg_initial);
  CHECK(r.final_incidence.size() == 35);
}

TEST_CASE("localization reports failure honestly when no quadric can cut") {
  // with exactly 2n+1 points the only candidate quadric contains everything
  std::vector<ProjPoint> pts;
  pts.push_back(pt({1, 0, 0, 0}));
  pts.push_back(pt({0, 1, 0, 0}));
  pts.push_back(pt({0, 0, 1, 0}));
  pts.push_back(pt({0, 0, 0, 1}));
  pts.push_back(pt({1, 1, 1, 1}));
  pts.push_back(pt({1, 2, 4, 8}));
  pts.push_back(pt({1, 3, 9, 27}));
  Configuration g = Configuration::make(3, pts);
  REQUIRE(is_lgp(g));
  REQUIRE(!containing_curve(g).has_value());
  LocalizeResult r = rnc_localize(g);
  REQUIRE(!r.success);
  CHECK(r.failure_reason == "no admissible quadric");
}

TEST_CASE("curve invariants are stable under coordinate changes") {
  SplitMix64 rng(404);
  std::vector<ProjPoint> base;
  for (long t = 0; t < 8; ++t) base.push_back(pt({1, t, t * t}));
  base.push_back(pt({1, 1, 0}));
  Configuration g = Configuration::make(2, base);
  const std::size_t reg = regularity(g);
  const RhoReport before = rho(g);
  for (int iter = 0; iter < 3; ++iter) {
    ExactMatrix m(3, 3);
    do {
      for (auto& x : m.entries) x = Rat(static_cast<long>(rng.in_range(-9, 9)));
    } while (det(m) == 0);
    ProjTransform tr = ProjTransform::from_exact(m);
    std::vector<ProjPoint> moved;
    for (const auto& p : g.points) moved.push_back(apply(tr, p));
    Configuration h = Configuration::make(2, moved);
    CHECK(regularity(h) == reg);
    CHECK(t_invariant(h).t == t_invariant(g).t);
    RhoReport after = rho(h);
    CHECK(after.rho == before.rho);
    CHECK(after.incidence == before.incidence);
  }
}

TEST_CASE("parametrization samples lie on their own curve") {
  // cubic samples pushed through a fixed coordinate change keep LGP
  ExactMatrix m(4, 4);
  const std::vector<long> entries{1, 2, 0, 1, 0, 1, 3, 0, 2, 0, 1, 1, 1, 1, 0, 2};
  for (std::size_t i = 0; i < 16; ++i) m.entries[i] = Rat(entries[i]);
  REQUIRE(det(m) != 0);
  ProjTransform tr = ProjTransform::from_exact(m);
  std::vector<ProjPoint> pts;
  for (long t = 0; t < 6; ++t) pts.push_back(apply(tr, standard_curve_point(3, Rat(t))));
  RationalNormalCurve c = rnc_through(pts);
  SplitMix64 rng(13);
  for (int iter = 0; iter < 8; ++iter) {
    Rat t(static_cast<long>(rng.in_range(-50, 50)), static_cast<long>(rng.in_range(1, 9)));
    t.canonicalize();
    CHECK(curve_contains(c, curve_point(c, 1, t)).contains);
  }
  CHECK(curve_contains(c, curve_point(c, 0, 1)).contains);
  CHECK(curve_contains(c, curve_point(c, 1, 0)).contains);
}

TEST_CASE("standard curve membership predicate") {
  CHECK(on_standard_curve(standard_curve_point(3, Rat(5, 7))));
  CHECK(on_standard_curve(pt({0, 0, 0, 1})));
  CHECK(!on_standard_curve(pt({1, 0, 0, 1})));
  CHECK(!on_standard_curve(pt({1, 1, 0, 0})));
}
