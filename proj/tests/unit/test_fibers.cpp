#include <gtest/gtest.h>

#include <random>

#include "families.hpp"
#include "lstrat/fibers.hpp"
#include "oracles.hpp"

using namespace lstrat;

namespace {

FiniteCommMonoid idempotent() { return FiniteCommMonoid({{0, 1}, {1, 1}}, 0); }

Polyhedron orthant(std::size_t d) {
  Polyhedron p(d);
  for (std::size_t i = 0; i < d; ++i) p.add(make_halfspace(unit(d, i), 0));
  return p;
}

LatticeGame game(std::vector<IntVec> moves, std::size_t d, std::vector<IntVec> defeated) {
  std::sort(defeated.begin(), defeated.end());
  return make_game(moves, {orthant(d), defeated}, std::vector<IntVec>{zeros(d)});
}

// phi by repeated multiplication, independent of the library's power routine.
std::size_t slow_eval(const MonoidMorphism& phi, const oracle::Point& x) {
  std::size_t r = phi.target.identity();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::int64_t k = 0; k < x[i]; ++k) r = phi.target.table()[r][phi.images[i]];
  return r;
}

}  // namespace

TEST(Monoid, LawsAreChecked) {
  EXPECT_THROW(FiniteCommMonoid({{0, 1}, {0, 1}}, 0), Error);
  EXPECT_THROW(FiniteCommMonoid({{0, 1}, {1, 0}}, 1), Error);
  // commutative, not associative
  EXPECT_THROW(FiniteCommMonoid({{0, 1, 2}, {1, 2, 1}, {2, 1, 0}}, 0), Error);
  auto p = FiniteCommMonoid::product(FiniteCommMonoid::cyclic(2), FiniteCommMonoid::truncation(2));
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.identity(), 0u);
  EXPECT_EQ(FiniteCommMonoid::truncation(3).op(2, 3), 3u);
  EXPECT_EQ(FiniteCommMonoid::cyclic(5).power(2, 7), 4u);
}

TEST(Morphism, EvalAndSurjective) {
  MonoidMorphism phi(FiniteCommMonoid::cyclic(6), {2});
  EXPECT_FALSE(phi.surjective());
  EXPECT_EQ(phi.eval({4}), 2u);
  MonoidMorphism psi(FiniteCommMonoid::cyclic(6), {2, 3});
  EXPECT_TRUE(psi.surjective());
}

TEST(Periodicity, Examples) {
  auto a = periodicity_profile(MonoidMorphism(FiniteCommMonoid::cyclic(2), {1}));
  EXPECT_EQ(a[0].index, 0);
  EXPECT_EQ(a[0].period, 2);
  auto b = periodicity_profile(MonoidMorphism(idempotent(), {1}));
  EXPECT_EQ(b[0].index, 1);
  EXPECT_EQ(b[0].period, 1);
  auto c = periodicity_profile(MonoidMorphism(FiniteCommMonoid::cyclic(6), {2}));
  EXPECT_EQ(c[0].index, 0);
  EXPECT_EQ(c[0].period, 3);
}

TEST(Periodicity, RandomFamiliesHoldEverywhere) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto phi = family::random_morphism(rng, 2);
    auto prof = periodicity_profile(phi);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_LE(static_cast<std::size_t>(prof[i].index + prof[i].period), phi.target.size());
      for (const auto& x : oracle::box(2, 0, 8)) {
        auto lo = x, hi = x;
        lo[i] += prof[i].index;
        hi[i] += prof[i].index + prof[i].period;
        EXPECT_EQ(slow_eval(phi, lo), slow_eval(phi, hi));
      }
      // minimality: no smaller index or period works at the origin orbit
      if (prof[i].index > 0)
        EXPECT_NE(phi.target.power(phi.images[i], prof[i].index - 1),
                  phi.target.power(phi.images[i], prof[i].index - 1 + prof[i].period));
      for (Int p = 1; p < prof[i].period; ++p)
        EXPECT_NE(phi.target.power(phi.images[i], prof[i].index),
                  phi.target.power(phi.images[i], prof[i].index + p));
    }
  }
}

TEST(Fiber, Examples) {
  auto a = fiber_stratify(MonoidMorphism(FiniteCommMonoid::cyclic(2), {1}), 0).strata;
  ASSERT_EQ(a.strata.size(), 1u);
  EXPECT_EQ(a.strata[0].translates, (std::vector<IntVec>{{0}}));
  EXPECT_EQ(a.strata[0].semigroup.gens(), (std::vector<IntVec>{{2}}));

  auto b = fiber_stratify(MonoidMorphism(idempotent(), {1}), 1).strata;
  ASSERT_EQ(b.strata.size(), 1u);
  EXPECT_EQ(b.strata[0].translates, (std::vector<IntVec>{{1}}));
  EXPECT_EQ(b.strata[0].semigroup.gens(), (std::vector<IntVec>{{1}}));

  auto c = fiber_stratify(MonoidMorphism(FiniteCommMonoid::cyclic(2), {1, 1}), 0).strata;
  ASSERT_EQ(c.strata.size(), 2u);
  EXPECT_EQ(c.strata[0].translates, (std::vector<IntVec>{{0, 0}}));
  EXPECT_EQ(c.strata[1].translates, (std::vector<IntVec>{{1, 1}}));
  for (const auto& s : c.strata) EXPECT_EQ(s.semigroup.gens(), (std::vector<IntVec>{{0, 2}, {2, 0}}));

  auto missing = fiber_stratify(MonoidMorphism(FiniteCommMonoid::cyclic(6), {2}), 1);
  EXPECT_FALSE(missing.in_image);
  EXPECT_TRUE(missing.strata.strata.empty());
}

TEST(Fiber, RandomPartitionAndConstancy) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto phi = family::random_morphism(rng, 2);
    std::vector<AffineStratification> all;
    for (std::size_t q = 0; q < phi.target.size(); ++q) {
      auto f = fiber_stratify(phi, q);
      std::string why;
      EXPECT_TRUE(check_form(f.strata, &why)) << why;
      EXPECT_TRUE(certify_disjoint(f.strata).disjoint);
      std::uniform_int_distribution<Int> step(0, 12);
      for (const auto& cell : f.strata.strata) {
        for (int k = 0; k < 200; ++k) {
          oracle::Point x = cell.translates.front();
          for (const auto& g : cell.semigroup.gens()) {
            Int m = step(rng);
            for (std::size_t i = 0; i < g.size(); ++i) x[i] += m * g[i];
          }
          EXPECT_EQ(slow_eval(phi, x), q);
        }
      }
      all.push_back(f.strata);
    }
    for (const auto& x : oracle::box(2, 0, 30)) {
      int hits = 0;
      std::size_t which = 0;
      for (std::size_t q = 0; q < all.size(); ++q)
        if (all[q].contains(x)) ++hits, which = q;
      ASSERT_EQ(hits, 1) << to_string(x);
      EXPECT_EQ(which, slow_eval(phi, x));
    }
  }
}

TEST(SemigroupFiber, Examples) {
  MonoidMorphism parity(FiniteCommMonoid::cyclic(2), {0, 1});
  auto even = semigroup_fiber_stratify({{2}, {3}}, 1, parity, 0);
  ASSERT_TRUE(even.in_image);
  auto rep = verify(even.strata, [](const IntVec& v) { return v[0] >= 0 && v[0] % 2 == 0; }, {{-3}, {40}});
  EXPECT_TRUE(rep.pass());

  MonoidMorphism trivial(FiniteCommMonoid::cyclic(1), {0, 0});
  auto whole = semigroup_fiber_stratify({{2}, {3}}, 1, trivial, 0);
  auto window = oracle::semigroup_window({{2}, {3}}, 1, 0, 40);
  EXPECT_TRUE(verify(whole.strata, [&](const IntVec& v) { return window.count(v) > 0; }, {{-3}, {40}}).pass());

  MonoidMorphism into6(FiniteCommMonoid::cyclic(6), {2, 4});
  EXPECT_FALSE(semigroup_fiber_stratify({{2}, {3}}, 1, into6, 1).in_image);
}

TEST(SemigroupFiber, PlaneSemigroup) {
  std::vector<IntVec> gens{{1, 0}, {1, 1}, {1, 2}};
  MonoidMorphism phi(FiniteCommMonoid::cyclic(3), {0, 1, 2});
  // phi(a, b, c) = b + 2c mod 3 = y mod 3 for the point (a + b + c, b + 2c)
  for (std::size_t q = 0; q < 3; ++q) {
    auto f = semigroup_fiber_stratify(gens, 2, phi, q);
    auto rep = verify(f.strata,
                      [&](const IntVec& v) {
                        return v[0] >= 0 && v[1] >= 0 && v[1] <= 2 * v[0] && static_cast<std::size_t>(v[1] % 3) == q;
                      },
                      {{-2, -2}, {12, 12}});
    EXPECT_TRUE(rep.pass()) << q;
  }
}

TEST(GameStratify, Heaps) {
  auto misere = game({{1}}, 1, {{0}});
  auto q = build_quotient(misere, {20, 10, 4});
  auto s = game_stratify(misere, q);
  ASSERT_EQ(s.strata.strata.size(), 1u);
  EXPECT_EQ(s.strata.strata[0].translates, (std::vector<IntVec>{{1}}));
  EXPECT_EQ(s.strata.strata[0].semigroup.gens(), (std::vector<IntVec>{{2}}));
  EXPECT_TRUE(s.report.pass());

  auto normal = game({{1}}, 1, {});
  auto n = game_stratify(normal, build_quotient(normal, {20, 10, 4}));
  ASSERT_EQ(n.strata.strata.size(), 1u);
  EXPECT_EQ(n.strata.strata[0].translates, (std::vector<IntVec>{{0}}));
  EXPECT_EQ(n.strata.strata[0].semigroup.gens(), (std::vector<IntVec>{{2}}));

  MisereQuotient raw;
  EXPECT_THROW(game_stratify(misere, raw), Error);
}

TEST(GameStratify, PlaneGames) {
  std::vector<LatticeGame> games{
      game({{1, 0}, {0, 1}}, 2, {}),
      game({{1, 0}, {0, 1}}, 2, {{0, 0}}),
      game({{1, 0}, {0, 1}, {1, 1}}, 2, {}),
      game({{2, 0}, {0, 1}, {1, 0}}, 2, {{0, 0}, {1, 0}}),
  };
  for (std::size_t i = 0; i < games.size(); ++i) {
    auto q = build_quotient(games[i], {10, 6, 3});
    ASSERT_TRUE(q.certified) << q.note;
    auto s = game_stratify(games[i], q);
    EXPECT_TRUE(s.report.pass()) << i << " missing " << s.report.missing.size() << " extra " << s.report.extra.size();
    EXPECT_GT(s.report.points_checked, 0u);
    // Beyond the certification window, against a direct solve.
    auto far = solve_p_positions(games[i], 40);
    for (const auto& x : window_positions(games[i], 40)) EXPECT_EQ(s.strata.contains(x), far.contains(x)) << i;
  }
}
