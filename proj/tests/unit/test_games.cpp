#include <gtest/gtest.h>

#include <random>

#include "families.hpp"
#include "lstrat/games.hpp"
#include "oracles.hpp"

using namespace lstrat;

namespace {

Polyhedron orthant(std::size_t d) {
  Polyhedron p(d);
  for (std::size_t i = 0; i < d; ++i) p.add(make_halfspace(unit(d, i), 0));
  return p;
}

GameBoard board(std::size_t d, std::vector<IntVec> defeated = {}) {
  std::sort(defeated.begin(), defeated.end());
  return {orthant(d), std::move(defeated)};
}

std::vector<Int> ints(const PositionSet& s) {
  std::vector<Int> v;
  for (const auto& p : sorted_lex(s)) v.push_back(p[0]);
  return v;
}

LatticeGame random_game(std::mt19937& rng) { return family::random_plane_game(rng); }

std::set<oracle::Point> oracle_p(const LatticeGame& g, Int hi) { return family::oracle_plane_p(g, hi); }

}  // namespace

TEST(RuleSet, ValidAndInvalid) {
  auto ok = validate_ruleset({{1}}, board(1), std::vector<IntVec>{{0}}, 30);
  ASSERT_TRUE(ok.verdict.ok());
  EXPECT_EQ(ok.rules->functional, (IntVec{1}));

  auto both = validate_ruleset({{1}, {-1}}, board(1), std::vector<IntVec>{{0}}, 30);
  EXPECT_EQ(both.verdict.status, Validity::kInvalid);

  auto two = validate_ruleset({{2}}, board(1), std::vector<IntVec>{{0}}, 30);
  EXPECT_EQ(two.verdict.status, Validity::kInvalid);
  EXPECT_EQ(two.verdict.witness, (std::vector<IntVec>{{1}}));

  EXPECT_FALSE(validate_ruleset({{0}}, board(1), std::nullopt, 10).verdict.ok());
}

TEST(RuleSet, EndpointSearch) {
  auto two = validate_ruleset({{2}}, board(1), std::nullopt, 30);
  ASSERT_TRUE(two.verdict.ok());
  EXPECT_EQ(two.endpoints, (std::vector<IntVec>{{0}, {1}}));
  auto line = validate_ruleset({{1, 0}}, board(2), std::nullopt, 30);
  EXPECT_EQ(line.verdict.status, Validity::kInconclusive);
}

TEST(Board, OrderIdealAndShape) {
  RuleSet r{1, {{1}}, {1}};
  auto bad = check_board(board(1, {{1}}), r);
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.witness, (std::vector<IntVec>{{0}, {1}}));
  EXPECT_TRUE(check_board(board(1, {{0}}), r).ok());
  EXPECT_TRUE(check_board(board(1, {{0}, {1}}), r).ok());
  EXPECT_FALSE(check_board(board(1, {{-1}}), r).ok());

  Polyhedron ray(2);
  ray.add(make_halfspace({1, 0}, 0));
  ray.add(make_halfspace({0, 1}, 0, Relation::kEq));
  EXPECT_FALSE(check_board({ray, {}}, RuleSet{2, {{1, 0}}, {1, 0}}).ok());
  EXPECT_THROW(make_game({{2}}, board(1), std::vector<IntVec>{{0}}), Error);
}

TEST(Solve, OneHeap) {
  auto misere = make_game({{1}}, board(1, {{0}}), std::vector<IntVec>{{0}});
  EXPECT_EQ(ints(solve_p_positions(misere, 6)), (std::vector<Int>{1, 3, 5}));
  auto normal = make_game({{1}}, board(1), std::vector<IntVec>{{0}});
  EXPECT_EQ(ints(solve_p_positions(normal, 6)), (std::vector<Int>{0, 2, 4, 6}));
  EXPECT_TRUE(solve_p_positions(normal, -1).members.empty());
}

TEST(Solve, RandomGamesMatchOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_game(rng);
    const Int t = 24;
    auto p = solve_p_positions(g, t);
    auto want = oracle_p(g, t);
    for (const auto& x : window_positions(g, t))
      EXPECT_EQ(p.contains(x), want.count(x) > 0) << "trial " << trial << " at " << to_string(x);
    auto eq = check_defining_equation(g, p, t);
    EXPECT_TRUE(eq.pass) << trial;
    EXPECT_GT(eq.checked, 0u);
  }
}

TEST(Solve, MonotoneInThreshold) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_game(rng);
    auto small = solve_p_positions(g, 15);
    auto big = solve_p_positions(g, 25);
    for (const auto& x : window_positions(g, 15)) EXPECT_EQ(small.contains(x), big.contains(x));
  }
}

TEST(DefiningEquation, Examples) {
  auto g = make_game({{1}}, board(1, {{0}}), std::vector<IntVec>{{0}});
  auto p = solve_p_positions(g, 20);
  EXPECT_TRUE(check_defining_equation(g, p, 20).pass);

  std::vector<IntVec> evens;
  for (Int i = 2; i <= 20; i += 2) evens.push_back({i});
  auto e = check_defining_equation(g, make_position_set(20, evens), 20);
  ASSERT_FALSE(e.pass);
  EXPECT_EQ(e.violations.front().position, (IntVec{1}));

  std::vector<IntVec> all;
  for (Int i = 1; i <= 20; ++i) all.push_back({i});
  EXPECT_FALSE(check_defining_equation(g, make_position_set(20, all), 20).pass);
}

TEST(DefiningEquation, PerturbationIsCaught) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_game(rng);
    const Int t = 20;
    auto p = solve_p_positions(g, t);
    auto eq = check_defining_equation(g, p, t);
    ASSERT_TRUE(eq.pass);
    std::vector<IntVec> safe;
    for (const auto& x : window_positions(g, eq.safe_threshold))
      if (g.board.on_board(x)) safe.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, safe.size() - 1);
    IntVec flip = safe[pick(rng)];
    std::vector<IntVec> members;
    for (const auto& x : p.members)
      if (x != flip) members.push_back(x);
    if (!p.contains(flip)) members.push_back(flip);
    EXPECT_FALSE(check_defining_equation(g, make_position_set(t, members), t).pass) << trial;
  }
}
