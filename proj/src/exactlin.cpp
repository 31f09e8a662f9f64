#include "ptreg/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ptreg {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows_in) {
  IntMatrix m;
  m.rows = rows_in.size();
  m.cols = rows_in.empty() ? 0 : rows_in.front().size();
  m.entries.reserve(m.rows * m.cols);
  for (const auto& r : rows_in) {
    if (r.size() != m.cols) throw std::invalid_argument("ragged rows");
    for (const Int& x : r) m.entries.push_back(x);
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(entries.begin() + i * cols, entries.begin() + (i + 1) * cols);
}

IntMatrix integerized(const ExactMatrix& m) {
  IntMatrix out(m.rows, m.cols);
  std::vector<Rat> row(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
    std::vector<Int> irow = to_primitive_ints(row);
    if (irow.empty()) irow.assign(m.cols, Int(0));
    for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = irow[j];
  }
  return out;
}

ExactMatrix to_exact(const IntMatrix& m) {
  ExactMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows * m.cols; ++i) out.entries[i] = Rat(m.entries[i]);
  return out;
}

namespace {

struct IntEchelon {
  std::vector<std::vector<Int>> rows;   // echelon rows, pivots strictly increasing
  std::vector<std::size_t> pivots;
  int swap_sign = 1;
  bool full_pass = false;               // every row consumed (square det case)
};

// Fraction-free (Bareiss) forward elimination. Each division is exact by the
// Sylvester identity; entries stay k x k minors of the input.
IntEchelon bareiss_forward(std::vector<std::vector<Int>> m, std::size_t ncols) {
  IntEchelon out;
  const std::size_t nrows = m.size();
  std::size_t r = 0;
  Int prev = 1;
  Int t1, t2;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      out.swap_sign = -out.swap_sign;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const bool hit = m[i][c] != 0;
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_mul(t1.get_mpz_t(), m[r][c].get_mpz_t(), m[i][j].get_mpz_t());
        if (hit) {
          mpz_mul(t2.get_mpz_t(), m[i][c].get_mpz_t(), m[r][j].get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        mpz_divexact(m[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  out.full_pass = (r == nrows);
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
  return rows;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

namespace modp {

std::vector<std::uint32_t> reduce_row_mod(const std::vector<Int>& row, std::uint32_t p) {
  std::vector<std::uint32_t> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = static_cast<std::uint32_t>(mpz_fdiv_ui(row[j].get_mpz_t(), p));
  return out;
}

bool try_extend(Basis& basis, std::vector<std::uint32_t> row) {
  const std::uint64_t p = basis.p;
  for (std::size_t k = 0; k < basis.rows.size(); ++k) {
    const std::size_t c = basis.pivots[k];
    if (row[c] == 0) continue;
    const std::uint64_t f = p - row[c];  // row += f * basis_row, zeroing col c
    const auto& br = basis.rows[k];
    for (std::size_t j = c; j < row.size(); ++j)
      row[j] = static_cast<std::uint32_t>((row[j] + f * br[j]) % p);
  }
  std::size_t c = 0;
  while (c < row.size() && row[c] == 0) ++c;
  if (c == row.size()) return false;
  const std::uint64_t s = inv_mod(row[c], basis.p);
  for (std::size_t j = c; j < row.size(); ++j)
    row[j] = static_cast<std::uint32_t>(row[j] * s % p);
  // keep pivot columns sorted so reduction stays one pass
  std::size_t pos = 0;
  while (pos < basis.pivots.size() && basis.pivots[pos] < c) ++pos;
  basis.pivots.insert(basis.pivots.begin() + pos, c);
  basis.rows.insert(basis.rows.begin() + pos, std::move(row));
  return true;
}

}  // namespace modp

ModpEchelon echelon_mod(const IntMatrix& m, std::uint32_t p) {
  modp::Basis basis;
  basis.p = p;
  for (std::size_t i = 0; i < m.rows; ++i) {
    modp::try_extend(basis, modp::reduce_row_mod(m.row(i), p));
    if (basis.rows.size() == std::min(m.rows, m.cols)) break;
  }
  ModpEchelon out;
  out.rank = basis.rows.size();
  out.pivot_cols = basis.pivots;
  return out;
}

std::size_t rank_mod(const IntMatrix& m, std::uint32_t p) { return echelon_mod(m, p).rank; }

std::size_t rank_mod(const ExactMatrix& m, std::uint32_t p) {
  return rank_mod(integerized(m), p);
}

std::size_t rank_exact(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return bareiss_forward(matrix_rows(m), m.cols).pivots.size();
}

std::size_t rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (!modp_prefilter_enabled()) return rank_exact(m);
  const ModpEchelon pre = echelon_mod(m, modulus_at(0));
  if (pre.rank == std::min(m.rows, m.cols)) return pre.rank;
  // Modular pivot columns are certainly nonzero columns over Q; trying them
  // first just reorders pivot selection. The exact pass decides the rank.
  std::vector<std::size_t> order = pre.pivot_cols;
  std::vector<bool> used(m.cols, false);
  for (std::size_t c : order) used[c] = true;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!used[c]) order.push_back(c);
  std::vector<std::vector<Int>> rows(m.rows, std::vector<Int>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, order[j]);
  return bareiss_forward(std::move(rows), m.cols).pivots.size();
}

std::size_t rank(const ExactMatrix& m) { return rank(integerized(m)); }

RrefResult rref(const ExactMatrix& m) {
  RrefResult out;
  out.matrix = ExactMatrix(m.rows, m.cols);
  if (m.rows == 0 || m.cols == 0) return out;
  IntMatrix im = integerized(m);
  IntEchelon ech = bareiss_forward(matrix_rows(im), im.cols);
  const std::size_t r = ech.pivots.size();
  // Single rational normalization pass: scale to unit pivots, then clear above.
  std::vector<std::vector<Rat>> rows(r, std::vector<Rat>(m.cols));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = Rat(ech.rows[i][j]);
  for (std::size_t ii = r; ii-- > 0;) {
    const std::size_t c = ech.pivots[ii];
    const Rat piv = rows[ii][c];
    for (std::size_t j = c; j < m.cols; ++j) rows[ii][j] /= piv;
    for (std::size_t k = 0; k < ii; ++k) {
      const Rat f = rows[k][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) rows[k][j] -= f * rows[ii][j];
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.matrix.at(i, j) = rows[i][j];
  out.pivot_cols = ech.pivots;
  return out;
}

std::vector<std::vector<Rat>> nullspace(const ExactMatrix& m) {
  if (m.cols == 0) return {};
  if (m.rows == 0) {
    std::vector<std::vector<Rat>> basis(m.cols, std::vector<Rat>(m.cols));
    for (std::size_t j = 0; j < m.cols; ++j) basis[j][j] = 1;
    return basis;
  }
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.matrix.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  if (m.rows == 0) return 1;
  IntEchelon ech = bareiss_forward(matrix_rows(m), m.cols);
  if (ech.pivots.size() < m.rows) return 0;
  // After a full fraction-free pass the last pivot is the determinant up to
  // the row-swap sign.
  Int d = ech.rows.back()[ech.pivots.back()];
  if (ech.swap_sign < 0) d = -d;
  return d;
}

Rat det(const ExactMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  if (m.rows == 0) return 1;
  // Track the row scalings applied by integerization.
  Rat scale = 1;
  IntMatrix im(m.rows, m.cols);
  std::vector<Rat> row(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    std::vector<Int> irow(m.cols);
    Int t;
    for (std::size_t j = 0; j < m.cols; ++j) {
      mpz_divexact(t.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
      irow[j] = t * m.at(i, j).get_num();
    }
    Int g = content(irow);
    if (g > 1)
      for (Int& x : irow) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (g == 0) g = 1;
    scale *= Rat(g, lcm);
    for (std::size_t j = 0; j < m.cols; ++j) im.at(i, j) = irow[j];
  }
  return scale * Rat(det(im));
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows;
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.pivot_cols.size() != n || r.pivot_cols.back() != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
  return inv;
}

}  // namespace ptreg
