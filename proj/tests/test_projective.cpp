#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptreg/projective.hpp"

using namespace ptreg;

namespace {

ProjPoint pt(const std::vector<long>& v) {
  std::vector<Int> coords;
  for (long x : v) coords.emplace_back(x);
  return ProjPoint::from_ints(std::move(coords));
}

ProjTransform random_transform(SplitMix64& rng, std::size_t n) {
  while (true) {
    ExactMatrix m(n + 1, n + 1);
    for (auto& x : m.entries) x = Rat(static_cast<long>(rng.in_range(-9, 9)));
    if (det(m) != 0) return ProjTransform::from_exact(m);
  }
}

}  // namespace

TEST_CASE("canonical point form") {
  CHECK(pt({2, 4, 6}) == pt({1, 2, 3}));
  CHECK(pt({-1, 2, 0}) == pt({1, -2, 0}));
  ProjPoint p = ProjPoint::from_strings({"1", "-2/3", "0"});
  CHECK(p == pt({3, -2, 0}));
  CHECK(p.to_strings() == std::vector<std::string>{"3", "-2", "0"});
  CHECK_THROWS_AS(pt({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("span dimensions") {
  std::vector<ProjPoint> simplex{pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0})};
  CHECK(span_dim(simplex) == 2);

  std::vector<ProjPoint> same{pt({1, 0, 0}), pt({2, 0, 0})};
  CHECK(span_dim(same) == 0);

  std::vector<ProjPoint> conic;
  for (long t = 0; t <= 4; ++t) conic.push_back(pt({1, t, t * t}));
  // oracle: the 5x3 coordinate matrix has rank 3
  CHECK(rank(points_matrix(conic)) == 3);
  CHECK(span_dim(conic) == 2);

  CHECK_THROWS_AS(span_dim(std::vector<ProjPoint>{}), std::invalid_argument);
}

TEST_CASE("standard frame map fixes the frame") {
  std::vector<ProjPoint> frame{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})};
  ProjTransform t = standard_frame_map(frame);
  for (std::size_t i = 0; i < 3; ++i) CHECK(apply(t, frame[i]) == coordinate_point(2, i));
  CHECK(apply(t, frame[3]) == unit_point(2));
  CHECK(t.mat.rows == 3);
}

TEST_CASE("standard frame map on a generic frame") {
  std::vector<ProjPoint> frame{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 2, 3})};
  ProjTransform t = standard_frame_map(frame);
  CHECK(apply(t, frame[3]) == unit_point(2));
  for (std::size_t i = 0; i < 3; ++i) CHECK(apply(t, frame[i]) == coordinate_point(2, i));

  // permuting the frame still sends point i to e_i
  std::vector<ProjPoint> permuted{frame[1], frame[2], frame[0], frame[3]};
  ProjTransform s = standard_frame_map(permuted);
  for (std::size_t i = 0; i < 3; ++i) CHECK(apply(s, permuted[i]) == coordinate_point(2, i));
  CHECK(apply(s, permuted[3]) == unit_point(2));
}

TEST_CASE("degenerate frames are rejected") {
  std::vector<ProjPoint> bad{pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({1, 2, 3})};
  CHECK_THROWS_AS(standard_frame_map(bad), std::invalid_argument);
  // unit point on a coordinate line: the subset avoiding e_0 fails to span
  std::vector<ProjPoint> bad2{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({0, 1, 1})};
  CHECK_THROWS_AS(standard_frame_map(bad2), std::invalid_argument);
}

TEST_CASE("apply basics and inversion") {
  ProjTransform id = ProjTransform::from_exact(ExactMatrix::identity(3));
  ProjPoint p = pt({5, -7, 1});
  CHECK(apply(id, p) == p);

  ExactMatrix diag(3, 3);
  diag.at(0, 0) = 1;
  diag.at(1, 1) = 2;
  diag.at(2, 2) = 3;
  CHECK(apply(ProjTransform::from_exact(diag), pt({1, 1, 1})) == pt({1, 2, 3}));

  SplitMix64 rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    ProjTransform t = random_transform(rng, 3);
    ProjTransform tinv = t.inverse();
    ProjPoint q = pt({static_cast<long>(rng.in_range(-9, 9)),
                      static_cast<long>(rng.in_range(-9, 9)),
                      static_cast<long>(rng.in_range(-9, 9)), 1});
    CHECK(apply(tinv, apply(t, q)) == q);
  }
}

TEST_CASE("span dimension is invariant under transforms") {
  SplitMix64 rng(9);
  std::vector<ProjPoint> pts{pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({1, 1, 0, 0}),
                             pt({3, -2, 0, 0}), pt({0, 0, 1, 0})};
  const std::size_t before = span_dim(pts);
  for (int iter = 0; iter < 5; ++iter) {
    ProjTransform t = random_transform(rng, 3);
    std::vector<ProjPoint> moved;
    for (const auto& p : pts) moved.push_back(apply(t, p));
    CHECK(span_dim(moved) == before);
  }
}

TEST_CASE("subspace membership and coordinates") {
  LinearSubspace line{3, {pt({1, 0, 0, 0}), pt({0, 1, 0, 0})}};
  CHECK(subspace_contains(line, pt({3, 5, 0, 0})));
  CHECK(!subspace_contains(line, pt({0, 0, 1, 0})));
  ProjPoint local = subspace_coordinates(line, pt({3, 5, 0, 0}));
  CHECK(local == pt({3, 5}));
  CHECK_THROWS_AS(subspace_coordinates(line, pt({0, 0, 1, 0})), std::invalid_argument);
}
