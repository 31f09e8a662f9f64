#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptreg/monomial.hpp"

namespace ptreg {

// A reduced finite subscheme of P^n: distinct points, degree = point count.
// The empty configuration (degree 0) is a legal value: it arises as one side
// of a hypersurface split. Its Hilbert function is 0, its regularity 0, and it
// is m-normal for every m.
struct Configuration {
  std::size_t ambient_dim = 0;  // n >= 1
  std::vector<ProjPoint> points;
  std::string label;

  static Configuration make(std::size_t n, std::vector<ProjPoint> pts,
                            std::string label = "");
  std::size_t degree() const { return points.size(); }
  Configuration subset(const std::vector<std::size_t>& indices) const;
};

Configuration config_union(const Configuration& a, const Configuration& b);

// Hypersurface of degree k >= 1, coefficients over the graded-lex monomial
// basis, stored as the canonical primitive integer vector (hypersurfaces are
// defined up to scale).
struct Hypersurface {
  std::size_t ambient_dim = 0;
  unsigned degree = 1;
  std::vector<Int> coeffs;  // length C(n+k, k), not all zero, primitive

  static Hypersurface make(std::size_t n, unsigned k, const std::vector<Rat>& coeffs);
  static Hypersurface from_ints(std::size_t n, unsigned k, std::vector<Int> coeffs);
};

Int evaluate(const Hypersurface& v, const ProjPoint& p);
bool vanishes_at(const Hypersurface& v, const ProjPoint& p);

struct HilbertProfile {
  std::size_t degree = 0;
  std::vector<std::size_t> values;  // h(0), ..., h(reg-1); h(reg-1) = degree
  std::size_t reg = 0;
  std::vector<std::size_t> h1;      // degree - h(m), same index range
};

// Evaluation matrix of all degree-m monomials at the points (degree x C(n+m,m)).
IntMatrix evaluation_matrix(const Configuration& g, unsigned m);

// h_Gamma(m): rank of the evaluation matrix = dim of the image of the degree-m
// restriction map.
std::size_t hilbert_function(const Configuration& g, unsigned m);

// reg = 1 + the least m with h(m) = degree. For reduced finite schemes only
// H^1 obstructs, so p-regularity is (p-1)-normality; h is nondecreasing and
// stabilizes at the degree no later than m = degree - 1.
std::size_t regularity(const Configuration& g);

HilbertProfile hilbert_profile(const Configuration& g);

// h^1 of the twisted ideal sheaf: degree - h(m). Zero for m >= reg - 1.
std::size_t h1(const Configuration& g, unsigned m);

bool is_m_normal(const Configuration& g, unsigned m);

// (points on V, points off V); sizes sum to the degree.
std::pair<Configuration, Configuration> split_by_hypersurface(const Configuration& g,
                                                              const Hypersurface& v);

// A degree-k hypersurface through all of S that, when `avoid` is given, does
// not vanish on at least one point of avoid. Deterministic scan: kernel basis
// first, then sums of basis pairs; nullopt when nothing qualifies.
std::optional<Hypersurface> hypersurface_through(const Configuration& s, unsigned k,
                                                 const Configuration* avoid = nullptr);

// True unless (Gamma cap V) m-normal and (Gamma:V) (m-k)-normal while Gamma
// itself fails m-normality; a false return is a counterexample to the Horace
// implication. Requires m >= deg V.
bool horace_check(const Configuration& g, const Hypersurface& v, unsigned m);

}  // namespace ptreg
