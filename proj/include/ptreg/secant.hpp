#pragma once

#include <optional>
#include <vector>

#include "ptreg/scheme.hpp"

namespace ptreg {

// t = smallest t such that some (t+2)-subset spans only a t-plane; t = n with
// no witness means linearly general position. A minimal dependent subset of
// size s spans exactly an (s-2)-plane, so the witness always has size t+2 and
// span t.
struct SecantReport {
  std::size_t t = 0;
  std::optional<std::vector<std::size_t>> witness;
};

SecantReport t_invariant(const Configuration& g);

// Every subset of size <= n+1 linearly independent.
bool is_lgp(const Configuration& g);

// Lexicographically first dependent subset of size <= max_size (sizes scanned
// in increasing order), or nullopt. Exact verdict; the modular fast path only
// certifies independence and every dependence is reverified exactly.
std::optional<std::vector<std::size_t>> smallest_dependent_subset(
    const std::vector<ProjPoint>& pts, std::size_t max_size);

enum class Tristate { Yes, No, Inconclusive };

struct UniformPositionResult {
  Tristate status = Tristate::Inconclusive;
  // violating subset and degree, present when status == No
  std::optional<std::pair<std::vector<std::size_t>, unsigned>> violation;
};

// Checks h_Y(l) = min(|Y|, h_Gamma(l)) for all subsets Y and l < reg.
// Inconclusive when C(d, floor(d/2)) exceeds the cap.
UniformPositionResult is_uniform_position(const Configuration& g,
                                          std::size_t cap = 2'000'000);

struct SubspaceWitness {
  LinearSubspace subspace;
  Configuration section;  // all points of Gamma on the subspace
  std::vector<std::size_t> section_indices;
  std::size_t section_reg = 0;
  bool lgp_in_subspace = false;
  bool nondegenerate_in_subspace = false;
};

// Every t-plane spanned by a subset of Gamma whose section preserves the
// regularity of Gamma, deduplicated by section, sorted by section size
// descending then lexicographic. Requires 1 <= t <= n-1.
std::vector<SubspaceWitness> find_reg_preserving_subspaces(const Configuration& g,
                                                           std::size_t t);

// Section rewritten in coordinates of the subspace (ambient dimension dim(s)).
Configuration section_in_subspace(const LinearSubspace& s, const Configuration& section);

}  // namespace ptreg
