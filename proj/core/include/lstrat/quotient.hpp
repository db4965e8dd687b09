#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lstrat/games.hpp"

namespace lstrat {

enum class Distinction { kIndistinguishable, kDistinguished };

struct IndistinguishabilityWitness {
  IntVec p, q;
  Distinction status = Distinction::kIndistinguishable;
  std::optional<IntVec> offset;  // separating r when distinguished
  Int radius = 0;                // offsets tested: r in C with value <= radius
};

// Offsets r in C ∩ Z^d with functional value <= radius, ordered by (value, lex).
std::vector<IntVec> cone_offsets(const LatticeGame& g, Int radius);

// Compares p + r and q + r for all offsets up to `radius`. Throws when pset
// does not reach max(value(p), value(q)) + radius.
IndistinguishabilityWitness indistinguishable(const LatticeGame& g, const IntVec& p, const IntVec& q,
                                              const PositionSet& pset, Int radius);

struct QuotientPolicy {
  Int threshold = 20;  // certification window
  Int delta = 10;      // stabilization step
  int max_escalations = 4;
};

struct QuotientClass {
  IntVec rep;                    // functional-minimal, then lex-minimal member
  std::vector<IntVec> members;   // members in the certification window
  bool is_p = false;
};

struct MisereQuotient {
  Int window = 0;  // certification window
  Int radius = 0;  // signature radius of the final partition
  std::vector<QuotientClass> classes;
  // Class action of the Hilbert basis of C ∩ Z^d: action[k][j] = class of rep_k + h_j.
  std::vector<IntVec> generators;
  std::vector<std::vector<std::size_t>> action;
  // Module generators F of Lambda with their classes.
  std::vector<IntVec> seeds;
  std::vector<std::size_t> seed_class;
  std::optional<std::vector<std::vector<std::size_t>>> table;
  bool stabilized = false;
  bool certified = false;
  std::string note;
  std::vector<IntVec> witness;

  std::map<IntVec, std::size_t> class_index() const;
};

MisereQuotient build_quotient(const LatticeGame& g, const QuotientPolicy& policy);

struct PurityVerdict {
  bool pass = true;
  std::vector<IntVec> witness;  // P member, non-P member of one class
};

PurityVerdict purity_check(const MisereQuotient& q, const PositionSet& pset);

struct MonoidTable {
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
};

// Class addition through representatives, checked on all windowed pairs.
// Throws when the board is not a monoid or the product is ill-defined.
MonoidTable monoid_structure(const MisereQuotient& q, const LatticeGame& g);

// P-positions of the window re-derived from the seeds and the class action.
struct Rederivation {
  bool consistent = true;
  std::vector<IntVec> p_positions;
  std::vector<IntVec> witness;
};
Rederivation rederive(const MisereQuotient& q, const LatticeGame& g);

}  // namespace lstrat
