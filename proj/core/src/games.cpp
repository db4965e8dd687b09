#include "lstrat/games.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lstrat {

bool GameBoard::is_defeated(const IntVec& p) const { return std::binary_search(defeated.begin(), defeated.end(), p); }

std::string to_string(Validity v) {
  switch (v) {
    case Validity::kValid: return "valid";
    case Validity::kInvalid: return "invalid";
    case Validity::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::optional<IntVec> find_positive_functional(const std::vector<IntVec>& moves, const Polyhedron& recession) {
  const std::size_t d = recession.dim();
  std::vector<IntVec> gens = moves;
  for (auto& r : extreme_rays(recession)) gens.push_back(std::move(r));
  Polyhedron feas(d);
  for (const auto& g : gens) {
    require(g.size() == d, ErrorCode::kDimensionMismatch, "move dimension differs from board");
    feas.add(make_halfspace(g, 1));
  }
  auto c = sample_point(feas);
  if (!c) return std::nullopt;
  if (is_zero(*c)) return zeros(d);
  return primitive_scaling(*c).vector;
}

namespace {

Int lowest_value(const Polyhedron& ambient, const IntVec& c) {
  auto r = functional_range(ambient, c);
  require(!r.empty, ErrorCode::kPrecondition, "empty ambient polyhedron");
  require(r.lower.has_value(), ErrorCode::kPrecondition, "functional is unbounded below on the ambient polyhedron");
  return r.lower->strict ? floor_of(r.lower->value) + 1 : ceil_of(r.lower->value);
}

std::vector<IntVec> window(const Polyhedron& ambient, const IntVec& c, Int t) {
  Polyhedron q = ambient;
  q.add(make_halfspace(negate(c), -t));
  auto pts = lattice_points(q);
  std::sort(pts.begin(), pts.end(), FunctionalOrder{c});
  return pts;
}

Verdict invalid(std::string reason, std::vector<IntVec> witness = {}) {
  return {Validity::kInvalid, std::move(reason), std::move(witness)};
}

}  // namespace

RuleSetValidation validate_ruleset(const std::vector<IntVec>& moves, const GameBoard& board,
                                   const std::optional<std::vector<IntVec>>& endpoints, Int t_check) {
  RuleSetValidation out;
  const std::size_t d = board.dim();
  for (const auto& g : moves) {
    require(g.size() == d, ErrorCode::kDimensionMismatch, "move dimension differs from board");
    if (is_zero(g)) {
      out.verdict = invalid("the zero vector is not a move", {g});
      return out;
    }
  }
  if (is_empty(board.ambient)) {
    out.verdict = invalid("empty ambient polyhedron");
    return out;
  }
  if (!board.ambient.is_pointed()) {
    out.verdict = invalid("ambient polyhedron is not pointed");
    return out;
  }
  auto c = find_positive_functional(moves, board.ambient.recession_cone());
  if (!c) {
    out.verdict = invalid("no linear function is positive on the moves and the recession cone");
    return out;
  }
  RuleSet rules{d, moves, *c};
  std::sort(rules.moves.begin(), rules.moves.end());
  rules.moves.erase(std::unique(rules.moves.begin(), rules.moves.end()), rules.moves.end());
  out.checked_up_to = t_check;
  auto pts = window(board.ambient, *c, t_check);
  std::unordered_set<IntVec, IntVecHash> lattice(pts.begin(), pts.end());
  auto has_move = [&](const IntVec& p, const std::unordered_set<IntVec, IntVecHash>& targets) {
    for (const auto& g : rules.moves)
      if (targets.count(sub(p, g))) return true;
    return false;
  };
  if (endpoints) {
    for (const auto& f : *endpoints) {
      require(f.size() == d, ErrorCode::kDimensionMismatch, "endpoint dimension differs from board");
      if (!board.in_lattice(f)) {
        out.verdict = invalid("endpoint outside the lattice points of the board", {f});
        return out;
      }
    }
    std::unordered_set<IntVec, IntVecHash> ends(endpoints->begin(), endpoints->end());
    std::unordered_set<IntVec, IntVecHash> good;
    for (const auto& p : pts) {
      if (ends.count(p) || has_move(p, good)) {
        good.insert(p);
        continue;
      }
      out.verdict = invalid("position has no move path to the endpoints", {p});
      return out;
    }
    out.endpoints = *endpoints;
  } else {
    Int lo = pts.empty() ? 0 : rules.value(pts.front());
    Int half = lo + (t_check - lo) / 2;
    for (const auto& p : pts) {
      if (has_move(p, lattice)) continue;
      if (rules.value(p) > half) {
        out.verdict = {Validity::kInconclusive, "terminal positions keep appearing up to the check threshold", {p}};
        return out;
      }
      out.endpoints.push_back(p);
    }
  }
  std::sort(out.endpoints.begin(), out.endpoints.end());
  out.rules = std::move(rules);
  return out;
}

Verdict check_board(const GameBoard& board, const RuleSet& rules) {
  const std::size_t d = board.dim();
  if (is_empty(board.ambient)) return invalid("empty ambient polyhedron");
  if (!board.ambient.is_pointed()) return invalid("ambient polyhedron is not pointed");
  Polyhedron rec = board.ambient.recession_cone();
  bool full = implicit_equalities(rec).empty() &&
              std::none_of(rec.constraints().begin(), rec.constraints().end(),
                           [](const Halfspace& h) { return h.rel == Relation::kEq && !is_zero(h.normal); });
  if (!full) return invalid("recession cone is not full-dimensional");
  if (!std::is_sorted(board.defeated.begin(), board.defeated.end()))
    return invalid("defeated positions must be sorted");
  for (const auto& p : board.defeated) {
    require(p.size() == d, ErrorCode::kDimensionMismatch, "defeated position dimension differs from board");
    if (!board.in_lattice(p)) return invalid("defeated position outside the lattice points of the board", {p});
  }
  if (board.defeated.empty()) return {};
  const Int lo = lowest_value(board.ambient, rules.functional);
  for (const auto& top : board.defeated) {
    const Int budget = rules.value(top) - lo;
    std::set<IntVec> seen;
    std::vector<IntVec> stack{zeros(d)};
    while (!stack.empty()) {
      IntVec s = stack.back();
      stack.pop_back();
      if (!seen.insert(s).second) continue;
      IntVec below = sub(top, s);
      if (board.in_lattice(below) && !board.is_defeated(below))
        return invalid("defeated positions are not an order ideal", {below, top});
      for (const auto& g : rules.moves) {
        IntVec next = add(s, g);
        if (rules.value(next) <= budget) stack.push_back(std::move(next));
      }
    }
  }
  return {};
}

namespace {

std::string describe(const Verdict& v) {
  std::string s = v.reason;
  if (!v.witness.empty()) {
    s += ": witness";
    for (const auto& w : v.witness) s += " " + to_string(w);
  }
  return s;
}

}  // namespace

LatticeGame make_game(const std::vector<IntVec>& moves, GameBoard board,
                      const std::optional<std::vector<IntVec>>& endpoints, Int t_check) {
  std::sort(board.defeated.begin(), board.defeated.end());
  board.defeated.erase(std::unique(board.defeated.begin(), board.defeated.end()), board.defeated.end());
  auto v = validate_ruleset(moves, board, endpoints, t_check);
  if (!v.verdict.ok()) fail(ErrorCode::kPrecondition, "rule set " + to_string(v.verdict.status) + ": " + describe(v.verdict));
  auto b = check_board(board, *v.rules);
  if (!b.ok()) fail(ErrorCode::kPrecondition, "game board invalid: " + describe(b));
  return {*v.rules, std::move(board), std::move(v.endpoints), v.checked_up_to};
}

std::vector<IntVec> window_positions(const LatticeGame& g, Int t) {
  return window(g.board.ambient, g.rules.functional, t);
}

Int min_value(const LatticeGame& g) { return lowest_value(g.board.ambient, g.rules.functional); }

PositionSet make_position_set(Int threshold, std::vector<IntVec> members) {
  PositionSet s;
  s.threshold = threshold;
  s.members = std::move(members);
  s.index.insert(s.members.begin(), s.members.end());
  return s;
}

PositionSet solve_p_positions(const LatticeGame& g, Int t) {
  std::vector<IntVec> p;
  std::unordered_set<IntVec, IntVecHash> in_p;
  for (const auto& x : window_positions(g, t)) {
    if (g.board.is_defeated(x)) continue;
    bool reaches = std::any_of(g.rules.moves.begin(), g.rules.moves.end(),
                               [&](const IntVec& m) { return in_p.count(sub(x, m)) > 0; });
    if (reaches) continue;
    in_p.insert(x);
    p.push_back(x);
  }
  return make_position_set(t, std::move(p));
}

std::vector<IntVec> sorted_lex(const PositionSet& s) {
  auto v = s.members;
  std::sort(v.begin(), v.end());
  return v;
}

EquationVerdict check_defining_equation(const LatticeGame& g, const PositionSet& pset, Int t,
                                        std::size_t max_witnesses) {
  EquationVerdict out;
  Int top = 0;
  for (const auto& m : g.rules.moves) top = std::max(top, g.rules.value(m));
  out.safe_threshold = t - top;
  require(pset.threshold >= out.safe_threshold, ErrorCode::kPrecondition, "position set is not solved far enough");
  auto flag = [&](const IntVec& p, const char* kind) {
    out.pass = false;
    if (out.violations.size() < max_witnesses) out.violations.push_back({p, kind});
  };
  for (const auto& p : window_positions(g, out.safe_threshold)) {
    ++out.checked;
    bool in = pset.contains(p);
    if (g.board.is_defeated(p)) {
      if (in) flag(p, "defeated position listed as a P-position");
      continue;
    }
    bool reached = std::any_of(g.rules.moves.begin(), g.rules.moves.end(),
                               [&](const IntVec& m) { return pset.contains(sub(p, m)); });
    if (in && reached) flag(p, "P-position with a move to a P-position");
    if (!in && !reached) flag(p, "board position outside P with no move to P");
  }
  return out;
}

}  // namespace lstrat
