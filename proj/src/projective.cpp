#include "ptreg/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptreg {

ProjPoint ProjPoint::from_ints(std::vector<Int> v) {
  bool nonzero = false;
  for (const Int& x : v)
    if (x != 0) {
      nonzero = true;
      break;
    }
  if (v.size() < 2 || !nonzero)
    throw std::invalid_argument("projective point needs >= 2 coordinates, not all zero");
  normalize_primitive(v);
  ProjPoint p;
  p.coords = std::move(v);
  return p;
}

ProjPoint ProjPoint::from_rationals(const std::vector<Rat>& v) {
  return from_ints(to_primitive_ints(v));
}

ProjPoint ProjPoint::from_strings(const std::vector<std::string>& v) {
  std::vector<Rat> q;
  q.reserve(v.size());
  for (const auto& s : v) q.push_back(rat_from_string(s));
  return from_rationals(q);
}

std::vector<std::string> ProjPoint::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coords.size());
  for (const Int& x : coords) out.push_back(x.get_str());
  return out;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  const std::size_t n = std::min(coords.size(), o.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(coords[i], o.coords[i]);
    if (c != 0) return c < 0;
  }
  return coords.size() < o.coords.size();
}

ProjPoint coordinate_point(std::size_t n, std::size_t i) {
  std::vector<Int> v(n + 1, Int(0));
  v[i] = 1;
  return ProjPoint::from_ints(std::move(v));
}

ProjPoint unit_point(std::size_t n) {
  return ProjPoint::from_ints(std::vector<Int>(n + 1, Int(1)));
}

IntMatrix points_matrix(std::span<const ProjPoint> pts) {
  if (pts.empty()) return {};
  IntMatrix m(pts.size(), pts.front().coords.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].coords.size() != m.cols)
      throw std::invalid_argument("points in different ambient spaces");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = pts[i].coords[j];
  }
  return m;
}

std::size_t span_dim(std::span<const ProjPoint> pts) {
  if (pts.empty()) throw std::invalid_argument("span of empty point set");
  return rank(points_matrix(pts)) - 1;
}

bool points_independent(std::span<const ProjPoint> pts) {
  if (pts.empty()) return true;
  return rank(points_matrix(pts)) == pts.size();
}

ProjTransform ProjTransform::from_exact(const ExactMatrix& m) {
  if (m.rows != m.cols || m.rows == 0) throw std::invalid_argument("transform must be square");
  std::vector<Rat> flat(m.entries.begin(), m.entries.end());
  std::vector<Int> prim = to_primitive_ints(flat);
  IntMatrix im(m.rows, m.cols);
  im.entries.assign(prim.begin(), prim.end());
  ProjTransform t{std::move(im)};
  if (rank(t.mat) != t.mat.rows) throw std::invalid_argument("transform must be invertible");
  return t;
}

ProjTransform ProjTransform::inverse() const {
  auto inv = ptreg::inverse(to_exact(mat));
  if (!inv) throw std::logic_error("transform matrix is singular");
  return from_exact(*inv);
}

ProjPoint apply(const ProjTransform& t, const ProjPoint& p) {
  if (p.coords.size() != t.mat.cols)
    throw std::invalid_argument("transform/point dimension mismatch");
  std::vector<Int> out(t.mat.rows, Int(0));
  Int tmp;
  for (std::size_t i = 0; i < t.mat.rows; ++i)
    for (std::size_t j = 0; j < t.mat.cols; ++j) {
      mpz_mul(tmp.get_mpz_t(), t.mat.at(i, j).get_mpz_t(), p.coords[j].get_mpz_t());
      out[i] += tmp;
    }
  return ProjPoint::from_ints(std::move(out));
}

ProjTransform standard_frame_map(std::span<const ProjPoint> frame) {
  if (frame.empty()) throw std::invalid_argument("empty frame");
  const std::size_t n = frame.front().ambient_dim();
  if (frame.size() != n + 2)
    throw std::invalid_argument("frame must consist of n+2 points");
  // Columns p_0..p_n, then solve A lambda = p_{n+1}. All lambda_i nonzero and
  // A invertible together say every n+1 of the inputs span.
  ExactMatrix aug(n + 1, n + 2);
  for (std::size_t j = 0; j <= n; ++j) {
    if (frame[j].ambient_dim() != n)
      throw std::invalid_argument("frame points in different ambient spaces");
    for (std::size_t i = 0; i <= n; ++i) aug.at(i, j) = Rat(frame[j].coords[i]);
  }
  if (frame[n + 1].ambient_dim() != n)
    throw std::invalid_argument("frame points in different ambient spaces");
  for (std::size_t i = 0; i <= n; ++i) aug.at(i, n + 1) = Rat(frame[n + 1].coords[i]);
  RrefResult r = rref(aug);
  if (r.pivot_cols.size() != n + 1 || r.pivot_cols.back() != n)
    throw std::invalid_argument("degenerate frame: first n+1 points do not span");
  // lambda_i sits in the last column of the solved system.
  ExactMatrix scaled(n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const Rat lambda = r.matrix.at(j, n + 1);
    if (lambda == 0)
      throw std::invalid_argument("degenerate frame: some n+1 points do not span");
    for (std::size_t i = 0; i <= n; ++i) scaled.at(i, j) = lambda * Rat(frame[j].coords[i]);
  }
  auto inv = inverse(scaled);
  if (!inv) throw std::invalid_argument("degenerate frame");
  return ProjTransform::from_exact(*inv);
}

bool subspace_contains(const LinearSubspace& s, const ProjPoint& p) {
  std::vector<ProjPoint> pts = s.basis;
  pts.push_back(p);
  return rank(points_matrix(pts)) == s.basis.size();
}

ProjPoint subspace_coordinates(const LinearSubspace& s, const ProjPoint& p) {
  const std::size_t n = s.ambient_dim;
  const std::size_t k = s.basis.size();
  ExactMatrix aug(n + 1, k + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i <= n; ++i) aug.at(i, j) = Rat(s.basis[j].coords[i]);
  for (std::size_t i = 0; i <= n; ++i) aug.at(i, k) = Rat(p.coords[i]);
  RrefResult r = rref(aug);
  if (r.pivot_cols.size() != k || r.pivot_cols.back() != k - 1)
    throw std::invalid_argument("point is not on the subspace");
  std::vector<Rat> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = r.matrix.at(i, k);
  return ProjPoint::from_rationals(c);
}

}  // namespace ptreg
