#include "ptreg/secant.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptreg {

namespace {

struct UnluckyPrime {};

std::size_t exact_rank_of(const std::vector<ProjPoint>& pts,
                          const std::vector<std::size_t>& idx) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(idx.size());
  for (std::size_t i : idx) rows.push_back(pts[i].coords);
  return rank_exact(IntMatrix::from_rows(rows));
}

bool exactly_dependent(const std::vector<ProjPoint>& pts,
                       const std::vector<std::size_t>& idx) {
  return exact_rank_of(pts, idx) < idx.size();
}

// DFS over index tuples of the given size whose proper prefixes are
// independent (guaranteed: smaller sizes were scanned first). The modular
// basis certifies independence; any modular dependence is reverified exactly,
// and a disagreement restarts the scan with the next prime.
class ModularScan {
 public:
  ModularScan(const std::vector<ProjPoint>& pts, std::uint32_t p) : pts_(pts), p_(p) {
    rows_.reserve(pts.size());
    for (const auto& q : pts) rows_.push_back(modp::reduce_row_mod(q.coords, p));
  }

  std::optional<std::vector<std::size_t>> find(std::size_t size) {
    chosen_.clear();
    modp::Basis basis;
    basis.p = p_;
    return dfs(basis, 0, size);
  }

 private:
  std::optional<std::vector<std::size_t>> dfs(const modp::Basis& basis,
                                              std::size_t start, std::size_t size) {
    const std::size_t depth = chosen_.size();
    for (std::size_t j = start; j < pts_.size(); ++j) {
      if (pts_.size() - j < size - depth) break;
      modp::Basis next = basis;
      const bool independent_mod_p = modp::try_extend(next, rows_[j]);
      chosen_.push_back(j);
      if (depth + 1 == size) {
        if (!independent_mod_p) {
          if (exactly_dependent(pts_, chosen_)) return chosen_;
          chosen_.pop_back();
          throw UnluckyPrime{};
        }
        chosen_.pop_back();
        continue;
      }
      if (!independent_mod_p) {
        if (exactly_dependent(pts_, chosen_))
          throw std::logic_error("dependent subset missed at a smaller size");
        chosen_.pop_back();
        throw UnluckyPrime{};
      }
      auto found = dfs(next, j + 1, size);
      if (found) return found;
      chosen_.pop_back();
    }
    return std::nullopt;
  }

  const std::vector<ProjPoint>& pts_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> chosen_;
};

// Pure exact fallback; used when the prefilter is off or primes keep failing.
std::optional<std::vector<std::size_t>> exact_scan(const std::vector<ProjPoint>& pts,
                                                   std::size_t size) {
  std::vector<std::size_t> chosen;
  std::function<std::optional<std::vector<std::size_t>>(std::size_t)> dfs =
      [&](std::size_t start) -> std::optional<std::vector<std::size_t>> {
    const std::size_t depth = chosen.size();
    for (std::size_t j = start; j < pts.size(); ++j) {
      if (pts.size() - j < size - depth) break;
      chosen.push_back(j);
      const bool dependent = exactly_dependent(pts, chosen);
      if (depth + 1 == size) {
        if (dependent) return chosen;
        chosen.pop_back();
        continue;
      }
      if (!dependent) {
        auto found = dfs(j + 1);
        if (found) return found;
      }
      chosen.pop_back();
    }
    return std::nullopt;
  };
  return dfs(0);
}

}  // namespace

std::optional<std::vector<std::size_t>> smallest_dependent_subset(
    const std::vector<ProjPoint>& pts, std::size_t max_size) {
  for (std::size_t size = 3; size <= std::min(max_size, pts.size()); ++size) {
    if (modp_prefilter_enabled()) {
      bool done = false;
      for (std::size_t attempt = 0; attempt < 6 && !done; ++attempt) {
        try {
          ModularScan scan(pts, modulus_at(attempt));
          auto found = scan.find(size);
          if (found) return found;
          done = true;
        } catch (const UnluckyPrime&) {
        }
      }
      if (done) continue;
    }
    auto found = exact_scan(pts, size);
    if (found) return found;
  }
  return std::nullopt;
}

SecantReport t_invariant(const Configuration& g) {
  if (g.degree() < 2)
    throw std::invalid_argument("t-invariant needs a configuration spanning a line");
  const std::size_t n = g.ambient_dim;
  auto dep = smallest_dependent_subset(g.points, std::min(g.degree(), n + 1));
  if (!dep) return SecantReport{n, std::nullopt};
  return SecantReport{dep->size() - 2, std::move(dep)};
}

bool is_lgp(const Configuration& g) {
  if (g.degree() == 0) return true;
  return !smallest_dependent_subset(g.points, std::min(g.degree(), g.ambient_dim + 1));
}

UniformPositionResult is_uniform_position(const Configuration& g, std::size_t cap) {
  UniformPositionResult out;
  const std::size_t d = g.degree();
  if (d == 0) {
    out.status = Tristate::Yes;
    return out;
  }
  // C(d, floor(d/2)) proxy for the subset workload
  if (d > 62) return out;
  {
    unsigned long long c = 1;
    bool over = false;
    for (std::size_t i = 1; i <= d / 2; ++i) {
      c = c * (d - d / 2 + i) / i;
      if (c > cap) {
        over = true;
        break;
      }
    }
    if (over) return out;
  }
  const std::size_t reg = regularity(g);
  std::vector<std::size_t> hvals(reg);
  for (unsigned m = 0; m < reg; ++m) hvals[m] = hilbert_function(g, m);
  const std::uint32_t p = modulus_at(0);
  const std::uint64_t full = 1ULL << d;
  for (std::uint64_t mask = 1; mask + 1 < full; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (1ULL << i)) idx.push_back(i);
    if (idx.size() <= 2) continue;  // h_Y is forced for one or two points
    Configuration y = g.subset(idx);
    for (unsigned l = 1; l < reg; ++l) {
      const std::size_t target = std::min<std::size_t>(idx.size(), hvals[l]);
      // h_Y <= target always; a full modular rank certifies equality
      IntMatrix em = evaluation_matrix(y, l);
      std::size_t hy = modp_prefilter_enabled() ? rank_mod(em, p) : 0;
      if (hy < target) hy = rank(em);
      if (hy < target) {
        out.status = Tristate::No;
        out.violation = {idx, l};
        return out;
      }
      if (hy >= idx.size()) break;  // stabilized at |Y|; larger l stays equal
    }
  }
  out.status = Tristate::Yes;
  return out;
}

std::vector<SubspaceWitness> find_reg_preserving_subspaces(const Configuration& g,
                                                           std::size_t t) {
  const std::size_t n = g.ambient_dim;
  if (t < 1 || t + 1 > n)
    throw std::invalid_argument("subspace dimension out of range [1, n-1]");
  const std::size_t d = g.degree();
  const std::size_t reg_g = regularity(g);
  const std::uint32_t p = modulus_at(0);

  std::vector<SubspaceWitness> out;
  std::vector<std::vector<std::size_t>> seen_sections;

  std::vector<std::size_t> pick;
  auto member = [&](const std::vector<std::size_t>& span_idx, std::size_t j) {
    std::vector<std::size_t> idx = span_idx;
    idx.push_back(j);
    std::vector<std::vector<Int>> rows;
    for (std::size_t i : idx) rows.push_back(g.points[i].coords);
    IntMatrix m = IntMatrix::from_rows(rows);
    if (modp_prefilter_enabled() && rank_mod(m, p) == t + 2) return false;
    return rank(m) == t + 1;
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (pick.size() == t + 1) {
      if (exact_rank_of(g.points, pick) != t + 1) return;
      std::vector<std::size_t> section;
      for (std::size_t j = 0; j < d; ++j) {
        if (std::binary_search(pick.begin(), pick.end(), j)) {
          section.push_back(j);
          continue;
        }
        if (member(pick, j)) section.push_back(j);
      }
      if (std::find(seen_sections.begin(), seen_sections.end(), section) !=
          seen_sections.end())
        return;
      seen_sections.push_back(section);
      if (section.size() < reg_g) return;  // reg of s points is at most s
      Configuration sec = g.subset(section);
      const std::size_t sec_reg = regularity(sec);
      if (sec_reg != reg_g) return;
      SubspaceWitness w;
      w.subspace.ambient_dim = n;
      for (std::size_t i : pick) w.subspace.basis.push_back(g.points[i]);
      w.section = std::move(sec);
      w.section_indices = section;
      w.section_reg = sec_reg;
      w.nondegenerate_in_subspace = span_dim(w.section.points) == t;
      w.lgp_in_subspace =
          !smallest_dependent_subset(w.section.points,
                                     std::min(w.section.points.size(), t + 1));
      out.push_back(std::move(w));
      return;
    }
    for (std::size_t j = start; j < d; ++j) {
      if (d - j < t + 1 - pick.size()) break;
      pick.push_back(j);
      dfs(j + 1);
      pick.pop_back();
    }
  };
  dfs(0);

  std::sort(out.begin(), out.end(), [](const SubspaceWitness& a, const SubspaceWitness& b) {
    if (a.section_indices.size() != b.section_indices.size())
      return a.section_indices.size() > b.section_indices.size();
    return a.section_indices < b.section_indices;
  });
  return out;
}

Configuration section_in_subspace(const LinearSubspace& s, const Configuration& section) {
  std::vector<ProjPoint> pts;
  pts.reserve(section.degree());
  for (const auto& q : section.points) pts.push_back(subspace_coordinates(s, q));
  return Configuration::make(s.dim(), std::move(pts), section.label);
}

}  // namespace ptreg
