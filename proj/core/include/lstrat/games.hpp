#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lstrat/exact.hpp"
#include "lstrat/geometry.hpp"

namespace lstrat {

struct RuleSet {
  std::size_t dim = 0;
  std::vector<IntVec> moves;
  // Primitive integer functional, >= 1 on moves and recession rays.
  IntVec functional;

  Int value(const IntVec& p) const { return dot(functional, p); }
};

// Lattice points of `ambient` minus the defeated positions.
struct GameBoard {
  Polyhedron ambient;
  std::vector<IntVec> defeated;

  std::size_t dim() const { return ambient.dim(); }
  bool in_lattice(const IntVec& p) const { return ambient.contains(p); }
  bool is_defeated(const IntVec& p) const;
  bool on_board(const IntVec& p) const { return in_lattice(p) && !is_defeated(p); }
  // Lambda = C ∩ Z^d with nothing removed.
  bool is_monoid() const { return defeated.empty() && ambient.is_homogeneous(); }
};

enum class Validity { kValid, kInvalid, kInconclusive };
std::string to_string(Validity v);

struct Verdict {
  Validity status = Validity::kValid;
  std::string reason;
  std::vector<IntVec> witness;

  bool ok() const { return status == Validity::kValid; }
};

// Integer c with c . g >= 1 on every move and recession ray.
std::optional<IntVec> find_positive_functional(const std::vector<IntVec>& moves, const Polyhedron& recession);

struct RuleSetValidation {
  Verdict verdict;
  std::optional<RuleSet> rules;
  std::vector<IntVec> endpoints;
  Int checked_up_to = 0;
};

// Both rule-set conditions; the path condition is checked for positions with
// functional value <= t_check. Without endpoints, the terminal positions are
// used and must stop appearing in the upper half of the range.
RuleSetValidation validate_ruleset(const std::vector<IntVec>& moves, const GameBoard& board,
                                   const std::optional<std::vector<IntVec>>& endpoints, Int t_check);

// Pointed ambient with full-dimensional recession cone, defeated positions in
// Lambda forming an order ideal (witness pair on failure).
Verdict check_board(const GameBoard& board, const RuleSet& rules);

struct LatticeGame {
  RuleSet rules;
  GameBoard board;
  std::vector<IntVec> endpoints;
  Int checked_up_to = 0;
};

// Validates everything and throws on failure; the message carries the witness.
LatticeGame make_game(const std::vector<IntVec>& moves, GameBoard board,
                      const std::optional<std::vector<IntVec>>& endpoints, Int t_check = 40);

// Lambda points with functional value <= t, ordered by (value, lex).
std::vector<IntVec> window_positions(const LatticeGame& g, Int t);
Int min_value(const LatticeGame& g);

struct PositionSet {
  Int threshold = 0;
  std::vector<IntVec> members;  // ordered by (value, lex)

  std::unordered_set<IntVec, IntVecHash> index;

  bool contains(const IntVec& p) const { return index.count(p) > 0; }
};

PositionSet make_position_set(Int threshold, std::vector<IntVec> members);
PositionSet solve_p_positions(const LatticeGame& g, Int t);
// Members sorted lexicographically, for output.
std::vector<IntVec> sorted_lex(const PositionSet& s);

struct EquationViolation {
  IntVec position;
  std::string kind;
};

struct EquationVerdict {
  bool pass = true;
  Int safe_threshold = 0;
  std::size_t checked = 0;
  std::vector<EquationViolation> violations;
};

EquationVerdict check_defining_equation(const LatticeGame& g, const PositionSet& pset, Int t,
                                        std::size_t max_witnesses = 20);

}  // namespace lstrat
