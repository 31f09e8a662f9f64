#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ptreg/exactlin.hpp"

namespace ptreg {

// Point of P^n. Canonical form: primitive integer coordinate vector with the
// first nonzero entry positive, so equality is plain vector comparison.
struct ProjPoint {
  std::vector<Int> coords;

  static ProjPoint from_ints(std::vector<Int> v);
  static ProjPoint from_rationals(const std::vector<Rat>& v);
  static ProjPoint from_strings(const std::vector<std::string>& v);

  std::size_t ambient_dim() const { return coords.size() - 1; }
  std::vector<std::string> to_strings() const;

  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
  bool operator<(const ProjPoint& o) const;  // lexicographic, for canonical sorts
};

ProjPoint coordinate_point(std::size_t n, std::size_t i);
ProjPoint unit_point(std::size_t n);

// Coordinate rows of the given points.
IntMatrix points_matrix(std::span<const ProjPoint> pts);

// Projective dimension of the linear span = rank of the coordinate matrix - 1.
// Throws on empty input.
std::size_t span_dim(std::span<const ProjPoint> pts);

bool points_independent(std::span<const ProjPoint> pts);

// Invertible coordinate change of P^n, stored as a primitive integer matrix
// with positive first nonzero entry (projective transforms are defined up to
// scale; this representative makes output deterministic).
struct ProjTransform {
  IntMatrix mat;

  static ProjTransform from_exact(const ExactMatrix& m);  // throws if singular
  ProjTransform inverse() const;
  std::size_t dim() const { return mat.rows - 1; }
};

ProjPoint apply(const ProjTransform& t, const ProjPoint& p);

// The unique transform sending the first n+1 input points to the coordinate
// points e_0..e_n and the last to (1:...:1). Requires the n+2 points in
// linearly general position; throws std::invalid_argument otherwise.
ProjTransform standard_frame_map(std::span<const ProjPoint> frame);

struct LinearSubspace {
  std::size_t ambient_dim = 0;
  std::vector<ProjPoint> basis;  // independent spanning points
  std::size_t dim() const { return basis.size() - 1; }
};

bool subspace_contains(const LinearSubspace& s, const ProjPoint& p);

// Coordinates of p in the basis of s, as a point of P^dim(s).
// Precondition: p lies on s.
ProjPoint subspace_coordinates(const LinearSubspace& s, const ProjPoint& p);

}  // namespace ptreg
