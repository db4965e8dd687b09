#include <gtest/gtest.h>

#include <random>

#include "lstrat/lattice.hpp"
#include "lstrat/linalg.hpp"
#include "oracles.hpp"

using namespace lstrat;

namespace {

Halfspace ge(IntVec n, Int b) { return make_halfspace(n, b, Relation::kGe); }

std::vector<oracle::Point> to_points(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Hermite, TransformAndInverse) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 3;
    IntMatrix a(m, IntVec(n));
    for (auto& r : a)
      for (auto& x : r) x = coef(rng);
    auto h = hermite(a, n, true);
    auto prod = mat_mul(h.transform, a, n);
    for (std::size_t i = 0; i < m; ++i) {
      IntVec expect = i < h.hnf.size() ? h.hnf[i] : IntVec(n, 0);
      EXPECT_EQ(prod[i], expect);
    }
    auto id = mat_mul(h.transform, h.inverse, m);
    for (std::size_t i = 0; i < m; ++i) EXPECT_EQ(id[i], unit(m, i));
    for (std::size_t i = 0; i < h.hnf.size(); ++i) {
      Int p = h.hnf[i][h.pivots[i]];
      EXPECT_GT(p, 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h.hnf[k][h.pivots[i]], 0);
        EXPECT_LT(h.hnf[k][h.pivots[i]], p);
      }
    }
  }
}

TEST(Lattice, IntersectCoprime) {
  auto a = group_generated({{2}}, 1), b = group_generated({{3}}, 1);
  EXPECT_EQ(lattice_intersect(a, b), group_generated({{6}}, 1));
}

TEST(Lattice, IntersectIdempotent) {
  auto l = group_generated({{2, 1}, {0, 3}}, 2);
  EXPECT_EQ(lattice_intersect(l, l), l);
}

TEST(Lattice, IntersectDiagonals) {
  auto a = group_generated({{1, 1}}, 2), b = group_generated({{1, -1}}, 2);
  EXPECT_EQ(lattice_intersect(a, b).rank(), 0u);
}

TEST(Lattice, IntersectMatchesWindowOracle) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntVec> ga{{coef(rng), coef(rng)}, {coef(rng), coef(rng)}};
    std::vector<IntVec> gb{{coef(rng), coef(rng)}};
    auto a = group_generated(ga, 2), b = group_generated(gb, 2);
    auto c = lattice_intersect(a, b);
    for (const auto& x : oracle::box(2, -12, 12)) {
      IntVec v(x.begin(), x.end());
      EXPECT_EQ(c.contains(v), a.contains(v) && b.contains(v));
    }
  }
}

TEST(Lattice, IntersectAssociative) {
  auto a = group_generated({{2, 0}, {0, 3}}, 2), b = group_generated({{1, 1}, {0, 4}}, 2),
       c = group_generated({{5, 1}, {0, 2}}, 2);
  EXPECT_EQ(lattice_intersect(lattice_intersect(a, b), c), lattice_intersect(a, lattice_intersect(b, c)));
  EXPECT_EQ(lattice_intersect(a, b).index(), 24);  // x even, y in 3Z, y = x mod 4
}

TEST(Lattice, GroupGenerated) {
  EXPECT_EQ(group_generated({{2}, {3}}, 1), Lattice::full(1));
  auto l = group_generated({{2, 0}, {0, 2}, {1, 1}}, 2);
  for (const auto& x : oracle::box(2, -5, 5)) EXPECT_EQ(l.contains(IntVec(x.begin(), x.end())), (x[0] + x[1]) % 2 == 0);
  EXPECT_EQ(group_generated({}, 2).rank(), 0u);
}

TEST(Lattice, ReduceIsCanonical) {
  auto l = group_generated({{3, 1}, {0, 2}}, 2);
  for (const auto& x : oracle::box(2, -6, 6)) {
    IntVec v(x.begin(), x.end());
    IntVec r = l.reduce(v);
    EXPECT_TRUE(l.contains(sub(v, r)));
    EXPECT_EQ(l.reduce(add(v, IntVec{3, 1})), r);
  }
  EXPECT_EQ(coset_representatives(Lattice::full(2), l).size(), 6u);
}

TEST(Lattice, CosetIntersection) {
  auto even = make_coset({0}, group_generated({{2}}, 1));
  auto one_mod3 = make_coset({1}, group_generated({{3}}, 1));
  auto c = coset_intersection(even, one_mod3);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->shift, (IntVec{4}));
  EXPECT_EQ(c->lattice, group_generated({{6}}, 1));
  auto odd = make_coset({1}, group_generated({{2}}, 1));
  EXPECT_FALSE(coset_intersection(even, odd).has_value());
}

TEST(HilbertBasis, HalfLine) {
  auto hb = hilbert_basis(Polyhedron(1, {ge({1}, 0)}), Lattice::full(1));
  EXPECT_EQ(hb.generators, (std::vector<IntVec>{{1}}));
}

TEST(HilbertBasis, FamilyMatchesIrreducibilityOracle) {
  for (Int k = 1; k <= 5; ++k) {
    auto cone = cone_from_generators({{1, 0}, {1, k}}, 2);
    auto hb = hilbert_basis(cone, Lattice::full(2));
    std::vector<oracle::Point> members;
    for (const auto& x : oracle::box(2, 0, 2 * k + 2))
      if (x[1] >= 0 && x[1] <= k * x[0]) members.push_back(x);
    auto expected = oracle::irreducibles(members);
    EXPECT_EQ(to_points(hb.generators), expected) << "k=" << k;
    ASSERT_EQ(hb.generators.size(), static_cast<std::size_t>(k + 1));
    for (Int j = 0; j <= k; ++j) EXPECT_EQ(hb.generators[j], (IntVec{1, j}));
  }
}

TEST(HilbertBasis, SublatticeAndWindowGeneration) {
  // Cone x >= 0, y >= 0 over the lattice {x + y even}.
  auto cone = cone_from_generators({{1, 0}, {0, 1}}, 2);
  auto l = group_generated({{2, 0}, {1, 1}}, 2);
  auto hb = hilbert_basis(cone, l);
  EXPECT_EQ(hb.generators, (std::vector<IntVec>{{0, 2}, {1, 1}, {2, 0}}));
  auto reach = oracle::semigroup_window(to_points(hb.generators), 2, 0, 8);
  for (const auto& x : oracle::box(2, 0, 8)) {
    bool member = (x[0] + x[1]) % 2 == 0;
    EXPECT_EQ(reach.count(x) > 0, member);
  }
}

TEST(HilbertBasis, RandomConesAgainstOracle) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    IntVec r1{coef(rng) + 1, coef(rng)}, r2{coef(rng), coef(rng) + 1};
    if (r1[0] * r2[1] - r1[1] * r2[0] == 0) continue;
    auto cone = cone_from_generators({r1, r2}, 2);
    auto hb = hilbert_basis(cone, Lattice::full(2));
    std::vector<oracle::Point> members;
    for (const auto& x : oracle::box(2, 0, 10))
      if (cone.contains(IntVec(x.begin(), x.end()))) members.push_back(x);
    auto expected = oracle::irreducibles(members);
    // Oracle generators beyond the box are not compared; all ours lie inside.
    EXPECT_EQ(to_points(hb.generators), expected) << to_string(r1) << to_string(r2);
  }
}

TEST(HilbertBasis, NonPointedRejected) {
  EXPECT_THROW(hilbert_basis(Polyhedron(1), Lattice::full(1)), Error);
}

TEST(ModuleGenerators, RationalBound) {
  Polyhedron p(1, {Halfspace{{Rational(1)}, Rational(3, 2), Relation::kGe}});
  EXPECT_EQ(module_generators(p, Lattice::full(1)), (std::vector<IntVec>{{2}}));
}

TEST(ModuleGenerators, CornerCut) {
  Polyhedron p(2, {ge({1, 0}, 0), ge({0, 1}, 0), ge({1, 1}, 1)});
  EXPECT_EQ(module_generators(p, Lattice::full(2)), (std::vector<IntVec>{{0, 1}, {1, 0}}));
}

TEST(ModuleGenerators, Polytope) {
  Polyhedron p(1, {ge({1}, 0), ge({-1}, -1)});
  EXPECT_EQ(module_generators(p, Lattice::full(1)), (std::vector<IntVec>{{0}, {1}}));
}

TEST(ModuleGenerators, EmptyAndShiftedCoset) {
  Polyhedron p(1, {ge({1}, 0), ge({-1}, -1)});
  EXPECT_TRUE(module_generators(p, group_generated({{3}}, 1), IntVec{2}).empty());
  Polyhedron ray(1, {ge({1}, 0)});
  EXPECT_EQ(module_generators(ray, group_generated({{3}}, 1), IntVec{-1}), (std::vector<IntVec>{{2}}));
}

TEST(ModuleGenerators, CoverOnWindow) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    Polyhedron p(2, {ge({1, 0}, coef(rng)), ge({0, 1}, coef(rng)), ge({coef(rng), coef(rng) + 4}, coef(rng))});
    auto rec = p.recession_cone();
    if (!rec.is_pointed()) continue;
    auto gens = module_generators(p, Lattice::full(2));
    for (const auto& x : oracle::box(2, -8, 12)) {
      IntVec v(x.begin(), x.end());
      bool covered = std::any_of(gens.begin(), gens.end(), [&](const IntVec& g) { return rec.contains(sub(v, g)); });
      EXPECT_EQ(covered, p.contains(v)) << to_string(v);
    }
    for (const auto& g : gens)
      for (const auto& h : gens)
        if (g != h) EXPECT_FALSE(rec.contains(sub(g, h)));
  }
}

TEST(CosetModuleGenerators, Examples) {
  HilbertBasis n{{{1}}, Polyhedron(1, {ge({1}, 0)}), Lattice::full(1)};
  EXPECT_EQ(coset_module_generators(make_coset({0}, group_generated({{2}}, 1)), {{3}}, n),
            (std::vector<IntVec>{{4}}));
  EXPECT_EQ(coset_module_generators(make_coset({1}, group_generated({{2}}, 1)), {{0}}, n),
            (std::vector<IntVec>{{1}}));
  HilbertBasis n2{{{0, 1}, {1, 0}}, cone_from_generators({{1, 0}, {0, 1}}, 2), Lattice::full(2)};
  EXPECT_EQ(coset_module_generators(make_coset({0, 0}, Lattice::full(2)), {{1, 1}}, n2),
            (std::vector<IntVec>{{1, 1}}));
}
