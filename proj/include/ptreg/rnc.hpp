#pragma once

#include <optional>
#include <vector>

#include "ptreg/secant.hpp"

namespace ptreg {

// Degree-n rational normal curve of P^n, stored by the coordinate change to a
// standard frame plus the parameter values a_0..a_n. In frame coordinates the
// parametrization is x_i(s:t) = prod_{j != i} (t - a_j s): it passes through
// e_i at (1:a_i) and through (1:...:1) at (0:1).
struct RationalNormalCurve {
  std::size_t ambient_dim = 0;
  ProjTransform to_frame;
  ProjTransform from_frame;  // cached inverse
  std::vector<Rat> params;   // pairwise distinct
};

// Parametrization point; (s, t) must not both be zero.
ProjPoint curve_point(const RationalNormalCurve& c, const Rat& s, const Rat& t);

struct CurveContainment {
  bool contains = false;
  std::optional<std::pair<Rat, Rat>> parameter;
};

CurveContainment curve_contains(const RationalNormalCurve& c, const ProjPoint& p);

// The unique curve through n+3 points in linearly general position. The last
// input sits at parameter (1:0), the frame at the standard spots, which fixes
// the Moebius gauge and makes params = -1/q_i canonical.
// Throws std::invalid_argument when the points are not in LGP.
RationalNormalCurve rnc_through(std::span<const ProjPoint> pts);

// Indices of the configuration points lying on the curve, ascending.
std::vector<std::size_t> incidence_set(const RationalNormalCurve& c,
                                       const Configuration& g);

// Membership in the standard curve (1:t:...:t^n): rank-1 catalecticant test.
bool on_standard_curve(const ProjPoint& p);
ProjPoint standard_curve_point(std::size_t n, const Rat& t);

struct RhoReport {
  std::size_t rho = 0;
  RationalNormalCurve curve;
  std::vector<std::size_t> incidence;
  std::size_t curves_examined = 0;     // distinct curves (by incidence set)
  std::size_t subsets_enumerated = 0;
  bool complete = false;               // false when the budget cut the scan off
};

// Maximum curve incidence by enumeration of (n+3)-subsets in linearly general
// position, deduplicated by incidence set. Exact when complete: any curve
// meeting >= n+3 points of Gamma is recovered from any n+3 of them. When the
// budget stops the scan the result is a certified lower bound only.
RhoReport rho(const Configuration& g, std::size_t budget = 500'000);

struct RegPreservingCurve {
  RationalNormalCurve curve;
  std::vector<std::size_t> incidence;
  std::size_t section_reg = 0;
};

struct RegCurveScan {
  std::vector<RegPreservingCurve> witnesses;  // section reg equals reg(Gamma)
  std::size_t reg = 0;
  std::size_t rho = 0;
  std::vector<std::size_t> rho_incidence;
  std::size_t curves_examined = 0;
  std::size_t subsets_enumerated = 0;
  bool complete = false;
};

// All deduplicated curves whose section preserves reg(Gamma), from the same
// enumeration as rho. Sections smaller than reg(Gamma) cannot preserve it
// (reg of s points is at most s) and are pruned without a profile.
RegCurveScan find_reg_preserving_rnc(const Configuration& g, std::size_t budget = 500'000);

// The curve containing all of Gamma, when one exists and d >= n+3.
std::optional<RationalNormalCurve> containing_curve(const Configuration& g);

struct LocalizeStep {
  std::vector<std::size_t> quadric_support;   // the 2n+1 interpolated indices
  Hypersurface quadric;
  std::vector<std::size_t> kept;              // indices into Gamma after the cut
  std::size_t reg_after = 0;
};

struct LocalizeResult {
  bool success = false;
  std::string failure_reason;
  std::size_t reg_initial = 0;
  std::vector<std::vector<std::size_t>> chain;  // index sets, Gamma first
  std::vector<LocalizeStep> steps;
  std::optional<RationalNormalCurve> curve;
  std::vector<std::size_t> final_incidence;
};

struct LocalizeOptions {
  std::size_t subset_budget = 200'000;  // quadric-support candidates per step
};

// Quadric residuation loop: stop when the remaining subset lies on a rational
// normal curve; otherwise cut by the first admissible quadric through 2n+1 of
// its points that misses at least one of them. Failure (no quadric, budget,
// regularity drop) is reported, never guessed around.
LocalizeResult rnc_localize(const Configuration& g, const LocalizeOptions& opt = {});

}  // namespace ptreg
