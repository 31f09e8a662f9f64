#pragma once

#include <cstddef>
#include <vector>

#include "ptreg/rational.hpp"

namespace ptreg {

// Dense row-major rational matrix. Desk-scale sizes only; no sparse storage.
struct ExactMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> entries;

  ExactMatrix() = default;
  ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rat& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static ExactMatrix identity(std::size_t n);
  ExactMatrix transposed() const;

  bool operator==(const ExactMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// Integer matrix used by the elimination core; rank/rref/nullspace of a
// rational matrix are computed on its row-integerized image.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows_in);
  std::vector<Int> row(std::size_t i) const;
};

// Clears denominators row by row and strips row contents. Rank, pivot columns,
// nullspace and rref are invariant under this scaling.
IntMatrix integerized(const ExactMatrix& m);

ExactMatrix to_exact(const IntMatrix& m);

}  // namespace ptreg
