#include <gtest/gtest.h>

#include "lstrat/quotient.hpp"
#include "oracles.hpp"

using namespace lstrat;

namespace {

Polyhedron orthant(std::size_t d) {
  Polyhedron p(d);
  for (std::size_t i = 0; i < d; ++i) p.add(make_halfspace(unit(d, i), 0));
  return p;
}

LatticeGame game(std::vector<IntVec> moves, std::size_t d, std::vector<IntVec> defeated) {
  std::sort(defeated.begin(), defeated.end());
  return make_game(moves, {orthant(d), defeated}, std::vector<IntVec>{zeros(d)});
}

LatticeGame heap(bool misere) { return game({{1}}, 1, misere ? std::vector<IntVec>{{0}} : std::vector<IntVec>{}); }

// P-positions on [0, hi]^2 by direct evaluation, then signatures over the
// offset box [0, r]^2.
struct PlaneOracle {
  std::set<oracle::Point> p;
  Int r;

  PlaneOracle(const LatticeGame& g, Int hi, Int radius) : r(radius) {
    auto pts = oracle::box(2, 0, hi);
    std::stable_sort(pts.begin(), pts.end(),
                     [](const oracle::Point& a, const oracle::Point& b) { return a[0] + a[1] < b[0] + b[1]; });
    std::set<oracle::Point> d(g.board.defeated.begin(), g.board.defeated.end());
    std::vector<oracle::Point> moves(g.rules.moves.begin(), g.rules.moves.end());
    p = oracle::p_positions(moves, [&](const oracle::Point& x) { return x[0] >= 0 && x[1] >= 0 && !d.count(x); }, pts);
  }

  std::vector<bool> signature(const oracle::Point& x) const {
    std::vector<bool> s;
    for (const auto& off : oracle::box(2, 0, r)) s.push_back(p.count(oracle::plus(x, off)) > 0);
    return s;
  }
};

}  // namespace

TEST(Indistinguishable, HeapExamples) {
  auto g = heap(true);
  auto pset = solve_p_positions(g, 40);
  EXPECT_EQ(indistinguishable(g, {1}, {3}, pset, 30).status, Distinction::kIndistinguishable);
  auto w = indistinguishable(g, {1}, {2}, pset, 30);
  ASSERT_EQ(w.status, Distinction::kDistinguished);
  EXPECT_EQ(*w.offset, (IntVec{0}));
  EXPECT_EQ(indistinguishable(g, {0}, {2}, pset, 30).status, Distinction::kIndistinguishable);
  EXPECT_THROW(indistinguishable(g, {5}, {7}, pset, 36), Error);
}

TEST(Quotient, MisereParity) {
  auto g = heap(true);
  auto q = build_quotient(g, {20, 10, 4});
  ASSERT_TRUE(q.certified) << q.note;
  ASSERT_EQ(q.classes.size(), 2u);
  EXPECT_EQ(q.classes[0].rep, (IntVec{0}));
  EXPECT_FALSE(q.classes[0].is_p);
  EXPECT_EQ(q.classes[1].rep, (IntVec{1}));
  EXPECT_TRUE(q.classes[1].is_p);
  EXPECT_FALSE(q.table.has_value());
  for (const auto& m : q.classes[1].members) EXPECT_EQ(m[0] % 2, 1);
  auto pset = solve_p_positions(g, q.window);
  EXPECT_TRUE(purity_check(q, pset).pass);
  auto re = rederive(q, g);
  EXPECT_TRUE(re.consistent);
  EXPECT_EQ(re.p_positions, pset.members);
  EXPECT_THROW(monoid_structure(q, g), Error);
}

TEST(Quotient, NormalParityTable) {
  auto g = heap(false);
  auto q = build_quotient(g, {20, 10, 4});
  ASSERT_TRUE(q.certified) << q.note;
  ASSERT_EQ(q.classes.size(), 2u);
  ASSERT_TRUE(q.table.has_value());
  EXPECT_EQ(*q.table, (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(monoid_structure(q, g).identity, 0u);
}

TEST(Purity, MergedClassesFail) {
  auto g = heap(true);
  auto pset = solve_p_positions(g, 10);
  MisereQuotient q;
  q.classes.push_back({{1}, {{1}, {2}}, true});
  auto v = purity_check(q, pset);
  ASSERT_FALSE(v.pass);
  EXPECT_EQ(v.witness, (std::vector<IntVec>{{1}, {2}}));
  EXPECT_TRUE(purity_check(MisereQuotient{}, pset).pass);
}

TEST(Quotient, PlaneGamesMatchOracleClasses) {
  std::vector<LatticeGame> games{
      game({{1, 0}, {0, 1}}, 2, {}),
      game({{1, 0}, {0, 1}}, 2, {{0, 0}}),
      game({{1, 0}, {0, 1}, {1, 1}}, 2, {}),
      game({{2, 0}, {0, 1}, {1, 0}}, 2, {{0, 0}, {1, 0}}),
  };
  for (std::size_t i = 0; i < games.size(); ++i) {
    const auto& g = games[i];
    auto q = build_quotient(g, {10, 6, 3});
    ASSERT_TRUE(q.certified) << i << ": " << q.note;
    PlaneOracle o(g, 60, 16);
    std::map<std::vector<bool>, std::size_t> seen;
    for (std::size_t k = 0; k < q.classes.size(); ++k)
      for (const auto& m : q.classes[k].members) {
        auto it = seen.emplace(o.signature(m), k).first;
        EXPECT_EQ(it->second, k) << "game " << i << " at " << to_string(m);
      }
    EXPECT_EQ(seen.size(), q.classes.size()) << i;
    auto pset = solve_p_positions(g, q.window);
    EXPECT_TRUE(purity_check(q, pset).pass);
    if (g.board.is_monoid()) {
      ASSERT_TRUE(q.table.has_value());
      const auto& t = *q.table;
      for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b) {
          EXPECT_EQ(t[a][b], t[b][a]);
          for (std::size_t c = 0; c < t.size(); ++c) EXPECT_EQ(t[t[a][b]][c], t[a][t[b][c]]);
        }
    }
  }
}
