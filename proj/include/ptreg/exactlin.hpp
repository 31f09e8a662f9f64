#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptreg/matrix.hpp"

namespace ptreg {

struct RrefResult {
  ExactMatrix matrix;                   // unique reduced row-echelon form
  std::vector<std::size_t> pivot_cols;  // strictly increasing
};

// Exact rank over the rationals. With the prefilter enabled a full modular
// rank certifies the answer (a nonzero minor mod p is nonzero over Q) and the
// modular pivot columns seed the exact elimination order; the fraction-free
// path always decides otherwise.
std::size_t rank(const ExactMatrix& m);
std::size_t rank(const IntMatrix& m);

// Fraction-free forward elimination with one rational normalization at the
// end. rank equals pivot count.
RrefResult rref(const ExactMatrix& m);

// Basis of the right kernel; size = cols - rank. Every vector satisfies
// M v = 0 exactly.
std::vector<std::vector<Rat>> nullspace(const ExactMatrix& m);

Rat det(const ExactMatrix& m);  // square input
Int det(const IntMatrix& m);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

// Rank over F_p. Always a lower bound for the rational rank.
std::size_t rank_mod(const IntMatrix& m, std::uint32_t p);
std::size_t rank_mod(const ExactMatrix& m, std::uint32_t p);

struct ModpEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};
ModpEchelon echelon_mod(const IntMatrix& m, std::uint32_t p);

// Exact rank ignoring the prefilter setting (pure Bareiss); used by tests and
// as the fallback verdict path.
std::size_t rank_exact(const IntMatrix& m);

namespace modp {
// Row-reduces `row` (entries < p) against the echelon `basis` in place and
// appends it when a new pivot appears. Returns true when the row was
// independent of the basis. Used by incremental subset scans.
struct Basis {
  std::uint32_t p = 0;
  std::vector<std::vector<std::uint32_t>> rows;  // echelon, pivot cols increasing
  std::vector<std::size_t> pivots;
};
bool try_extend(Basis& basis, std::vector<std::uint32_t> row);
std::vector<std::uint32_t> reduce_row_mod(const std::vector<Int>& row, std::uint32_t p);
}  // namespace modp

}  // namespace ptreg
