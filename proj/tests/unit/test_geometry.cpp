#include <gtest/gtest.h>

#include <random>

#include "lstrat/geometry.hpp"
#include "oracles.hpp"

using namespace lstrat;

namespace {

Halfspace ge(IntVec n, Int b) { return make_halfspace(n, b, Relation::kGe); }
Halfspace gt(IntVec n, Int b) { return make_halfspace(n, b, Relation::kGt); }
Halfspace eq(IntVec n, Int b) { return make_halfspace(n, b, Relation::kEq); }

}  // namespace

TEST(IsEmpty, ContradictoryBounds) {
  Polyhedron p(1, {ge({1}, 1), ge({-1}, 0)});
  EXPECT_TRUE(is_empty(p));
}

TEST(IsEmpty, HalfLine) { EXPECT_FALSE(is_empty(Polyhedron(1, {ge({1}, 0)}))); }

TEST(IsEmpty, StrictWithEquality) {
  Polyhedron p(1, {gt({1}, 0), gt({-1}, -1), eq({2}, 1)});
  EXPECT_FALSE(is_empty(p));
  auto x = sample_point(p);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1, 2));
}

TEST(IsEmpty, StrictTouchingIsEmpty) {
  Polyhedron p(2, {gt({1, 0}, 0), ge({-1, 0}, 0), ge({0, 1}, 0)});
  EXPECT_TRUE(is_empty(p));
}

TEST(SamplePoint, LiesInside) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Polyhedron p(3);
    for (int k = 0; k < 5; ++k) {
      IntVec n{coef(rng), coef(rng), coef(rng)};
      p.add(make_halfspace(n, coef(rng), k % 2 ? Relation::kGt : Relation::kGe));
    }
    auto x = sample_point(p);
    EXPECT_EQ(x.has_value(), !is_empty(p));
    if (x) {
      ++feasible;
      EXPECT_TRUE(p.contains(*x));
    }
  }
  EXPECT_GT(feasible, 20);
}

TEST(FunctionalRange, Triangle) {
  Polyhedron p(2, {ge({1, 0}, 0), ge({0, 1}, 0), ge({-1, -1}, -3)});
  auto r = functional_range(p, IntVec{1, 2});
  ASSERT_FALSE(r.empty);
  ASSERT_TRUE(r.lower && r.upper);
  EXPECT_EQ(r.lower->value, 0);
  EXPECT_EQ(r.upper->value, 6);
  EXPECT_FALSE(r.upper->strict);
  auto unbounded = functional_range(Polyhedron(2, {ge({1, 0}, 0)}), IntVec{1, 0});
  EXPECT_TRUE(unbounded.lower.has_value());
  EXPECT_FALSE(unbounded.upper.has_value());
}

TEST(Homogenize, HalfLine) {
  auto h = homogenize(Polyhedron(1, {ge({1}, 1)}));
  ASSERT_EQ(h.dim(), 2u);
  EXPECT_TRUE(h.contains(IntVec{3, 2}));
  EXPECT_FALSE(h.contains(IntVec{1, 2}));
  EXPECT_FALSE(h.contains(IntVec{1, -1}));
}

TEST(Homogenize, WholeLineGivesHalfPlane) {
  auto h = homogenize(Polyhedron(1));
  EXPECT_TRUE(h.contains(IntVec{-5, 0}));
  EXPECT_TRUE(h.contains(IntVec{-5, 1}));
  EXPECT_FALSE(h.contains(IntVec{0, -1}));
}

TEST(Homogenize, SliceIdentities) {
  Polyhedron p(2, {ge({1, 0}, 0), ge({0, 1}, 0), ge({-1, -1}, -3)});
  auto h = homogenize(p);
  for (const auto& x : oracle::box(2, -4, 5)) {
    EXPECT_EQ(h.contains(IntVec{x[0], x[1], 1}), p.contains(IntVec{x[0], x[1]}));
    EXPECT_EQ(h.contains(IntVec{x[0], x[1], 0}), p.recession_cone().contains(IntVec{x[0], x[1]}));
  }
}

TEST(InteriorShift, OpenRay) {
  auto s = interior_shift(Polyhedron(1, {ge({1}, 0)}));
  EXPECT_FALSE(s.contains(IntVec{0}));
  EXPECT_TRUE(s.contains(IntVec{1}));
}

TEST(InteriorShift, UnitIntervalHasNoInteriorLatticePoints) {
  auto s = interior_shift(Polyhedron(1, {ge({1}, 0), ge({-1}, -1)}));
  EXPECT_TRUE(is_empty(s));
}

TEST(InteriorShift, RationalBound) {
  Polyhedron p(1, {Halfspace{{Rational(2)}, Rational(1), Relation::kGe}});
  auto s = interior_shift(p);
  for (Int x = -5; x <= 5; ++x) EXPECT_EQ(s.contains(IntVec{x}), x >= 1) << x;
}

TEST(InteriorShift, MatchesStrictVersionOnBox) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 2 + trial % 2;
    Polyhedron p(d);
    for (int k = 0; k < 4; ++k) {
      RatVec n(d);
      for (auto& x : n) x = Rational(coef(rng), den(rng));
      p.add({n, Rational(coef(rng), den(rng)), Relation::kGe});
    }
    if (is_empty(p)) continue;
    auto shifted = interior_shift(p);
    // Strict version: every constraint that is not an implicit equality.
    auto implicit = implicit_equalities(p);
    for (const auto& x : oracle::box(d, -4, 4)) {
      IntVec v(x.begin(), x.end());
      bool in_relint = true;
      for (std::size_t i = 0; i < p.constraints().size(); ++i) {
        const auto& h = p.constraints()[i];
        bool is_implicit = std::find(implicit.begin(), implicit.end(), i) != implicit.end();
        Rational val = dot(h.normal, v);
        in_relint = in_relint && (is_implicit ? val == h.bound : val > h.bound);
      }
      ASSERT_EQ(shifted.contains(v), in_relint) << "trial " << trial;
    }
  }
}

TEST(Cones, ExtremeRaysAndGenerators) {
  auto c = cone_from_generators({{1, 0}, {1, 2}, {1, 1}}, 2);
  auto rays = extreme_rays(c);
  ASSERT_EQ(rays.size(), 2u);
  EXPECT_EQ(rays[0], (IntVec{1, 0}));
  EXPECT_EQ(rays[1], (IntVec{1, 2}));
  EXPECT_TRUE(c.is_pointed());
  EXPECT_FALSE(cone_from_generators({{1}, {-1}}, 1).is_pointed());
  auto ray = cone_from_generators({{2, 4}}, 2);
  EXPECT_TRUE(ray.contains(IntVec{1, 2}));
  EXPECT_FALSE(ray.contains(IntVec{1, 1}));
  EXPECT_FALSE(ray.contains(IntVec{-1, -2}));
  auto origin = cone_from_generators({}, 2);
  EXPECT_TRUE(origin.contains(IntVec{0, 0}));
  EXPECT_FALSE(origin.contains(IntVec{0, 1}));
}

TEST(Arrangement, OneHyperplane) {
  std::vector<Hyperplane> hs{{{Rational(1)}, Rational(0)}};
  auto cells = arrangement_cells(hs, {Polyhedron(1, {ge({1}, 0)})}, Polyhedron(1));
  ASSERT_EQ(cells.size(), 3u);
  int inside = 0;
  for (const auto& c : cells) {
    if (c.signs[0] < 0) EXPECT_FALSE(c.inside);
    if (c.signs[0] >= 0) EXPECT_TRUE(c.inside);
    inside += c.inside;
  }
  EXPECT_EQ(inside, 2);
}

TEST(Arrangement, Quadrant) {
  std::vector<Hyperplane> hs{{{Rational(1), Rational(0)}, 0}, {{Rational(0), Rational(1)}, 0}};
  Polyhedron quadrant(2, {ge({1, 0}, 0), ge({0, 1}, 0)});
  auto cells = arrangement_cells(hs, {quadrant}, Polyhedron(2));
  ASSERT_EQ(cells.size(), 9u);
  int inside = 0;
  for (const auto& c : cells) inside += c.inside;
  EXPECT_EQ(inside, 4);
  // Disjoint cover and tag soundness on a grid of rational points.
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      RatVec x{Rational(a, 3), Rational(b, 2)};
      int hits = 0;
      for (const auto& c : cells)
        if (c.relint.contains(x)) {
          ++hits;
          EXPECT_EQ(c.inside, quadrant.contains(x));
        }
      EXPECT_EQ(hits, 1);
    }
}

TEST(Arrangement, EmptyUnion) {
  std::vector<Hyperplane> hs{{{Rational(1)}, Rational(0)}};
  auto cells = arrangement_cells(hs, {}, Polyhedron(1));
  for (const auto& c : cells) EXPECT_FALSE(c.inside);
}

TEST(Arrangement, UnknownHyperplaneIsRejected) {
  std::vector<Hyperplane> hs{{{Rational(1)}, Rational(0)}};
  EXPECT_THROW(arrangement_cells(hs, {Polyhedron(1, {ge({1}, 2)})}, Polyhedron(1)), Error);
}

TEST(Arrangement, ScaledMemberConstraintMatches) {
  std::vector<Hyperplane> hs{{{Rational(1), Rational(1)}, Rational(1)}};
  Polyhedron member(2, {ge({-2, -2}, -2)});
  auto cells = arrangement_cells(hs, {member}, Polyhedron(2));
  for (const auto& c : cells) EXPECT_EQ(c.inside, c.signs[0] <= 0);
}
