#include "ptreg/rnc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace ptreg {

namespace {

// ascending k-combinations of [0, d); callback returns false to stop
void for_each_combination(std::size_t d, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > d) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == d - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t pack_indices(const std::vector<std::size_t>& idx) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    key |= static_cast<std::uint64_t>(idx[i] + 1) << (7 * i);
  return key;
}

std::uint64_t mask_of(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (std::size_t i : idx) m |= 1ULL << i;
  return m;
}

}  // namespace

ProjPoint curve_point(const RationalNormalCurve& c, const Rat& s, const Rat& t) {
  if (s == 0 && t == 0) throw std::invalid_argument("curve parameter (0,0)");
  const std::size_t n = c.ambient_dim;
  std::vector<Rat> x(n + 1, Rat(1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) x[i] *= t - c.params[j] * s;
  return apply(c.from_frame, ProjPoint::from_rationals(x));
}

CurveContainment curve_contains(const RationalNormalCurve& c, const ProjPoint& p) {
  if (p.ambient_dim() != c.ambient_dim)
    throw std::invalid_argument("curve/point dimension mismatch");
  const std::size_t n = c.ambient_dim;
  const ProjPoint y = apply(c.to_frame, p);
  bool has_zero = false, all_equal = true;
  for (std::size_t i = 0; i <= n; ++i) {
    if (y.coords[i] == 0) has_zero = true;
    if (y.coords[i] != y.coords[0]) all_equal = false;
  }
  if (has_zero) {
    // on the curve iff y is a coordinate point, hit at (1 : a_i)
    for (std::size_t i = 0; i <= n; ++i) {
      if (y.coords[i] == 0) continue;
      if (y == coordinate_point(n, i)) return {true, {{Rat(1), c.params[i]}}};
      break;
    }
    return {false, std::nullopt};
  }
  if (all_equal) return {true, {{Rat(0), Rat(1)}}};
  std::size_t j = 1;
  while (y.coords[j] == y.coords[0]) ++j;
  const Rat yi(y.coords[0]), yj(y.coords[j]);
  const Rat t = (yi * c.params[0] - yj * c.params[j]) / (yi - yj);
  // verify x(1:t) proportional to y against reference index 0
  std::vector<Rat> x(n + 1, Rat(1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t m = 0; m <= n; ++m)
      if (m != i) x[i] *= t - c.params[m];
  for (std::size_t i = 0; i <= n; ++i)
    if (x[i] * Rat(y.coords[0]) != x[0] * Rat(y.coords[i])) return {false, std::nullopt};
  return {true, {{Rat(1), t}}};
}

RationalNormalCurve rnc_through(std::span<const ProjPoint> pts) {
  if (pts.empty()) throw std::invalid_argument("empty point list");
  const std::size_t n = pts.front().ambient_dim();
  if (pts.size() != n + 3)
    throw std::invalid_argument("curve interpolation needs exactly n+3 points");
  std::vector<ProjPoint> v(pts.begin(), pts.end());
  if (smallest_dependent_subset(v, n + 1))
    throw std::invalid_argument("curve interpolation needs points in linearly general position");
  RationalNormalCurve c;
  c.ambient_dim = n;
  c.to_frame = standard_frame_map(std::span<const ProjPoint>(v.data(), n + 2));
  c.from_frame = c.to_frame.inverse();
  const ProjPoint q = apply(c.to_frame, v[n + 2]);
  c.params.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (q.coords[i] == 0)
      throw std::invalid_argument("curve interpolation needs points in linearly general position");
    c.params[i] = Rat(-1) / Rat(q.coords[i]);
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (c.params[i] == c.params[j])
        throw std::invalid_argument("curve interpolation needs points in linearly general position");
  return c;
}

std::vector<std::size_t> incidence_set(const RationalNormalCurve& c,
                                       const Configuration& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (curve_contains(c, g.points[i]).contains) out.push_back(i);
  return out;
}

bool on_standard_curve(const ProjPoint& p) {
  const std::size_t n = p.ambient_dim();
  for (std::size_t i = 0; i + 1 <= n - 1; ++i)
    for (std::size_t j = i + 1; j <= n - 1; ++j)
      if (p.coords[i] * p.coords[j + 1] != p.coords[i + 1] * p.coords[j]) return false;
  return true;
}

ProjPoint standard_curve_point(std::size_t n, const Rat& t) {
  std::vector<Rat> v(n + 1);
  v[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) v[i] = v[i - 1] * t;
  return ProjPoint::from_rationals(v);
}

namespace {

struct CurveEnumeration {
  std::size_t subsets_enumerated = 0;
  std::size_t distinct_curves = 0;
  bool complete = false;
  std::vector<std::size_t> best_incidence;
  std::vector<std::vector<std::size_t>> kept;  // incidence sets >= keep_threshold
};

// Table of dependent (n+1)-subsets; the modular basis certifies independence
// and every suspected dependence is confirmed exactly.
std::unordered_set<std::uint64_t> dependent_table(const Configuration& g) {
  const std::size_t n = g.ambient_dim;
  const std::size_t d = g.degree();
  std::unordered_set<std::uint64_t> bad;
  const bool use_modp = modp_prefilter_enabled();
  const std::uint32_t p = modulus_at(0);
  std::vector<std::vector<std::uint32_t>> rows_p;
  if (use_modp) {
    rows_p.reserve(d);
    for (const auto& q : g.points) rows_p.push_back(modp::reduce_row_mod(q.coords, p));
  }
  for_each_combination(d, n + 1, [&](const std::vector<std::size_t>& idx) {
    bool independent = false;
    if (use_modp) {
      modp::Basis basis;
      basis.p = p;
      independent = true;
      for (std::size_t i : idx)
        if (!modp::try_extend(basis, rows_p[i])) {
          independent = false;
          break;
        }
    }
    if (!independent) {
      std::vector<std::vector<Int>> rows;
      for (std::size_t i : idx) rows.push_back(g.points[i].coords);
      if (rank_exact(IntMatrix::from_rows(rows)) < idx.size()) bad.insert(pack_indices(idx));
    }
    return true;
  });
  return bad;
}

CurveEnumeration enumerate_curves(const Configuration& g, std::size_t budget,
                                  std::size_t keep_threshold) {
  const std::size_t n = g.ambient_dim;
  const std::size_t d = g.degree();
  if (d < n + 3) throw std::invalid_argument("curve enumeration needs at least n+3 points");
  if (d > 64) throw std::invalid_argument("curve enumeration supports at most 64 points");

  const std::unordered_set<std::uint64_t> bad = dependent_table(g);
  auto subset_lgp = [&](const std::vector<std::size_t>& idx) {
    if (bad.empty()) return true;
    bool ok = true;
    for_each_combination(idx.size(), n + 1, [&](const std::vector<std::size_t>& pos) {
      std::vector<std::size_t> sub(pos.size());
      for (std::size_t i = 0; i < pos.size(); ++i) sub[i] = idx[pos[i]];
      if (bad.count(pack_indices(sub))) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  };

  // degree-2 monomial rows for the n=2 implicit-conic fast path
  std::vector<std::vector<Int>> mono2;
  if (n == 2) {
    mono2.reserve(d);
    for (const auto& q : g.points) mono2.push_back(monomial_values(q, 2));
  }
  auto conic_incidence = [&](const std::vector<std::size_t>& idx) {
    ExactMatrix em(n + 3, 6);
    for (std::size_t i = 0; i < n + 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) em.at(i, j) = Rat(mono2[idx[i]][j]);
    const auto kernel = nullspace(em);
    if (kernel.size() != 1) return std::vector<std::size_t>{};  // not LGP; filtered earlier
    const std::vector<Int> conic = to_primitive_ints(kernel.front());
    std::vector<std::size_t> inc;
    Int acc, tmp;
    for (std::size_t i = 0; i < d; ++i) {
      acc = 0;
      for (std::size_t j = 0; j < 6; ++j) {
        if (conic[j] == 0) continue;
        mpz_mul(tmp.get_mpz_t(), conic[j].get_mpz_t(), mono2[i][j].get_mpz_t());
        acc += tmp;
      }
      if (acc == 0) inc.push_back(i);
    }
    return inc;
  };

  CurveEnumeration out;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> big_masks;
  bool stopped = false;

  for_each_combination(d, n + 3, [&](const std::vector<std::size_t>& idx) {
    if (out.subsets_enumerated == budget) {
      stopped = true;
      return false;
    }
    ++out.subsets_enumerated;
    const std::uint64_t sub_mask = mask_of(idx);
    for (std::uint64_t b : big_masks)
      if ((sub_mask & b) == sub_mask) return true;  // same curve as a recorded one
    if (!subset_lgp(idx)) return true;
    std::vector<std::size_t> inc;
    if (n == 2) {
      inc = conic_incidence(idx);
      if (inc.empty()) return true;
    } else {
      std::vector<ProjPoint> pts;
      pts.reserve(idx.size());
      for (std::size_t i : idx) pts.push_back(g.points[i]);
      inc = incidence_set(rnc_through(pts), g);
    }
    const std::uint64_t inc_mask = mask_of(inc);
    if (!seen.insert(inc_mask).second) return true;
    ++out.distinct_curves;
    if (inc.size() > out.best_incidence.size()) out.best_incidence = inc;
    if (inc.size() >= n + 4) big_masks.push_back(inc_mask);
    if (inc.size() >= keep_threshold) out.kept.push_back(std::move(inc));
    return true;
  });
  out.complete = !stopped;
  return out;
}

RationalNormalCurve curve_from_incidence(const Configuration& g,
                                         const std::vector<std::size_t>& inc) {
  const std::size_t n = g.ambient_dim;
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < n + 3; ++i) pts.push_back(g.points[inc[i]]);
  return rnc_through(pts);
}

}  // namespace

RhoReport rho(const Configuration& g, std::size_t budget) {
  CurveEnumeration e = enumerate_curves(g, budget, std::size_t(-1));
  if (e.best_incidence.empty())
    throw std::invalid_argument(
        e.complete ? "no (n+3)-subset in linearly general position"
                   : "no linearly general (n+3)-subset found within the budget");
  RhoReport r;
  r.rho = e.best_incidence.size();
  r.incidence = e.best_incidence;
  r.curve = curve_from_incidence(g, r.incidence);
  r.curves_examined = e.distinct_curves;
  r.subsets_enumerated = e.subsets_enumerated;
  r.complete = e.complete;
  return r;
}

RegCurveScan find_reg_preserving_rnc(const Configuration& g, std::size_t budget) {
  RegCurveScan scan;
  scan.reg = regularity(g);
  const std::size_t keep = std::max(g.ambient_dim + 3, scan.reg);
  CurveEnumeration e = enumerate_curves(g, budget, keep);
  scan.rho = e.best_incidence.size();
  scan.rho_incidence = e.best_incidence;
  scan.curves_examined = e.distinct_curves;
  scan.subsets_enumerated = e.subsets_enumerated;
  scan.complete = e.complete;
  std::sort(e.kept.begin(), e.kept.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  for (const auto& inc : e.kept) {
    Configuration sec = g.subset(inc);
    const std::size_t r = regularity(sec);
    if (r != scan.reg) continue;
    RegPreservingCurve w;
    w.curve = curve_from_incidence(g, inc);
    w.incidence = inc;
    w.section_reg = r;
    scan.witnesses.push_back(std::move(w));
  }
  return scan;
}

std::optional<RationalNormalCurve> containing_curve(const Configuration& g) {
  const std::size_t n = g.ambient_dim;
  if (g.degree() < n + 3) return std::nullopt;
  std::vector<ProjPoint> pts(g.points.begin(), g.points.begin() + (n + 3));
  if (smallest_dependent_subset(pts, n + 1)) return std::nullopt;
  RationalNormalCurve c = rnc_through(pts);
  for (const auto& p : g.points)
    if (!curve_contains(c, p).contains) return std::nullopt;
  return c;
}

LocalizeResult rnc_localize(const Configuration& g, const LocalizeOptions& opt) {
  const std::size_t n = g.ambient_dim;
  const std::size_t d = g.degree();
  LocalizeResult res;
  if (d < 2 * n + 1) throw std::invalid_argument("localization needs at least 2n+1 points");
  if (!is_lgp(g))
    throw std::invalid_argument("localization needs linearly general position");
  res.reg_initial = regularity(g);

  std::vector<std::size_t> live(d);
  for (std::size_t i = 0; i < d; ++i) live[i] = i;
  res.chain.push_back(live);

  while (true) {
    Configuration x = g.subset(live);
    if (live.size() >= n + 3) {
      std::vector<ProjPoint> head(x.points.begin(), x.points.begin() + (n + 3));
      RationalNormalCurve c = rnc_through(head);
      bool all_on = true;
      for (const auto& p : x.points)
        if (!curve_contains(c, p).contains) {
          all_on = false;
          break;
        }
      if (all_on) {
        res.success = true;
        res.curve = std::move(c);
        res.final_incidence = live;
        return res;
      }
    } else {
      res.failure_reason = "fewer than n+3 points remain";
      return res;
    }
    if (live.size() < 2 * n + 1) {
      res.failure_reason = "fewer than 2n+1 points remain";
      return res;
    }
    // first 2n+1 of the survivors admitting a quadric that misses some survivor
    std::optional<Hypersurface> quadric;
    std::vector<std::size_t> support;
    std::size_t tried = 0;
    for_each_combination(live.size(), 2 * n + 1, [&](const std::vector<std::size_t>& pos) {
      if (++tried > opt.subset_budget) return false;
      std::vector<std::size_t> idx(pos.size());
      for (std::size_t i = 0; i < pos.size(); ++i) idx[i] = live[pos[i]];
      auto q = hypersurface_through(g.subset(idx), 2, &x);
      if (q) {
        quadric = std::move(q);
        support = idx;
        return false;
      }
      return true;
    });
    if (!quadric) {
      res.failure_reason = tried > opt.subset_budget ? "quadric search budget exhausted"
                                                     : "no admissible quadric";
      return res;
    }
    std::vector<std::size_t> next;
    for (std::size_t i : live)
      if (vanishes_at(*quadric, g.points[i])) next.push_back(i);
    LocalizeStep step;
    step.quadric_support = support;
    step.quadric = *quadric;
    step.kept = next;
    step.reg_after = regularity(g.subset(next));
    res.chain.push_back(next);
    res.steps.push_back(std::move(step));
    live = std::move(next);
    if (res.steps.back().reg_after != res.reg_initial) {
      res.failure_reason = "regularity dropped during residuation";
      return res;
    }
  }
}

}  // namespace ptreg
