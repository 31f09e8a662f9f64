#include "ptreg/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptreg {

Configuration Configuration::make(std::size_t n, std::vector<ProjPoint> pts,
                                  std::string label) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  for (const auto& p : pts)
    if (p.ambient_dim() != n)
      throw std::invalid_argument("point/configuration dimension mismatch");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("configuration points must be distinct");
  Configuration g;
  g.ambient_dim = n;
  g.points = std::move(pts);
  g.label = std::move(label);
  return g;
}

Configuration Configuration::subset(const std::vector<std::size_t>& indices) const {
  std::vector<ProjPoint> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(points.at(i));
  Configuration g;
  g.ambient_dim = ambient_dim;
  g.points = std::move(pts);
  return g;
}

Configuration config_union(const Configuration& a, const Configuration& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("union of configurations in different spaces");
  std::vector<ProjPoint> pts = a.points;
  for (const auto& p : b.points)
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  return Configuration::make(a.ambient_dim, std::move(pts));
}

Hypersurface Hypersurface::make(std::size_t n, unsigned k, const std::vector<Rat>& coeffs) {
  return from_ints(n, k, to_primitive_ints(coeffs));
}

Hypersurface Hypersurface::from_ints(std::size_t n, unsigned k, std::vector<Int> coeffs) {
  if (k < 1) throw std::invalid_argument("hypersurface degree must be >= 1");
  if (coeffs.size() != monomial_count(n, k))
    throw std::invalid_argument("coefficient vector has wrong length");
  normalize_primitive(coeffs);
  bool nonzero = false;
  for (const Int& c : coeffs)
    if (c != 0) {
      nonzero = true;
      break;
    }
  if (!nonzero) throw std::invalid_argument("hypersurface coefficients all zero");
  Hypersurface v;
  v.ambient_dim = n;
  v.degree = k;
  v.coeffs = std::move(coeffs);
  return v;
}

Int evaluate(const Hypersurface& v, const ProjPoint& p) {
  if (p.ambient_dim() != v.ambient_dim)
    throw std::invalid_argument("hypersurface/point dimension mismatch");
  const std::vector<Int> mono = monomial_values(p, v.degree);
  Int acc = 0, tmp;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (v.coeffs[i] == 0) continue;
    mpz_mul(tmp.get_mpz_t(), v.coeffs[i].get_mpz_t(), mono[i].get_mpz_t());
    acc += tmp;
  }
  return acc;
}

bool vanishes_at(const Hypersurface& v, const ProjPoint& p) { return evaluate(v, p) == 0; }

IntMatrix evaluation_matrix(const Configuration& g, unsigned m) {
  IntMatrix out(g.degree(), monomial_count(g.ambient_dim, m));
  for (std::size_t i = 0; i < g.degree(); ++i) {
    std::vector<Int> row = monomial_values(g.points[i], m);
    for (std::size_t j = 0; j < out.cols; ++j) out.at(i, j) = std::move(row[j]);
  }
  return out;
}

std::size_t hilbert_function(const Configuration& g, unsigned m) {
  if (g.degree() == 0) return 0;
  return rank(evaluation_matrix(g, m));
}

namespace {

// Smallest m with C(n+m, m) >= d; h cannot reach d earlier.
unsigned first_candidate_degree(std::size_t n, std::size_t d) {
  unsigned m = 0;
  while (monomial_count(n, m) < d) ++m;
  return m;
}

}  // namespace

std::size_t regularity(const Configuration& g) {
  const std::size_t d = g.degree();
  if (d == 0) return 0;
  if (d == 1) return 1;
  const unsigned lo = first_candidate_degree(g.ambient_dim, d);
  const unsigned cap = static_cast<unsigned>(d - 1);  // h(d-1) = d always
  // march up, then binary-search the stabilization point
  unsigned lower = lo;  // h unknown below; first possible m
  if (hilbert_function(g, lower) == d) return lower + 1;
  unsigned step = 1;
  unsigned hi = lower;
  while (true) {
    hi = std::min(cap, hi + step);
    step *= 2;
    if (hilbert_function(g, hi) == d) break;
    lower = hi;
    if (hi == cap)
      throw std::logic_error("Hilbert function failed to stabilize at the degree");
  }
  // invariant: h(lower) < d, h(hi) = d
  while (hi - lower > 1) {
    const unsigned mid = lower + (hi - lower) / 2;
    if (hilbert_function(g, mid) == d)
      hi = mid;
    else
      lower = mid;
  }
  return hi + 1;
}

HilbertProfile hilbert_profile(const Configuration& g) {
  HilbertProfile p;
  p.degree = g.degree();
  p.reg = regularity(g);
  p.values.reserve(p.reg);
  for (unsigned m = 0; m < p.reg; ++m) p.values.push_back(hilbert_function(g, m));
  for (std::size_t v : p.values) p.h1.push_back(p.degree - v);
  return p;
}

std::size_t h1(const Configuration& g, unsigned m) {
  return g.degree() - hilbert_function(g, m);
}

bool is_m_normal(const Configuration& g, unsigned m) {
  return hilbert_function(g, m) == g.degree();
}

std::pair<Configuration, Configuration> split_by_hypersurface(const Configuration& g,
                                                              const Hypersurface& v) {
  if (g.ambient_dim != v.ambient_dim)
    throw std::invalid_argument("configuration/hypersurface dimension mismatch");
  Configuration on, off;
  on.ambient_dim = off.ambient_dim = g.ambient_dim;
  for (const auto& p : g.points)
    (vanishes_at(v, p) ? on : off).points.push_back(p);
  return {std::move(on), std::move(off)};
}

std::optional<Hypersurface> hypersurface_through(const Configuration& s, unsigned k,
                                                 const Configuration* avoid) {
  const std::size_t n = s.ambient_dim;
  ExactMatrix em = to_exact(evaluation_matrix(s, k));
  const std::vector<std::vector<Rat>> kernel = nullspace(em);
  if (kernel.empty()) return std::nullopt;
  auto build = [&](const std::vector<Rat>& v) { return Hypersurface::make(n, k, v); };
  if (avoid == nullptr || avoid->degree() == 0) return build(kernel.front());
  auto misses_some = [&](const Hypersurface& h) {
    for (const auto& p : avoid->points)
      if (!vanishes_at(h, p)) return true;
    return false;
  };
  for (const auto& v : kernel) {
    Hypersurface h = build(v);
    if (misses_some(h)) return h;
  }
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = i + 1; j < kernel.size(); ++j) {
      std::vector<Rat> sum(kernel[i]);
      for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += kernel[j][t];
      Hypersurface h = build(sum);
      if (misses_some(h)) return h;
    }
  return std::nullopt;
}

bool horace_check(const Configuration& g, const Hypersurface& v, unsigned m) {
  if (m < v.degree) throw std::invalid_argument("horace check needs m >= deg V");
  const auto [on, off] = split_by_hypersurface(g, v);
  const bool section_normal = is_m_normal(on, m);
  const bool residual_normal = is_m_normal(off, m - v.degree);
  if (!(section_normal && residual_normal)) return true;  // implication vacuous
  return is_m_normal(g, m);
}

}  // namespace ptreg
