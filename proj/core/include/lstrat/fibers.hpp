#pragma once

#include <cstddef>
#include <vector>

#include "lstrat/exact.hpp"
#include "lstrat/games.hpp"
#include "lstrat/quotient.hpp"
#include "lstrat/strata.hpp"

namespace lstrat {

using Table = std::vector<std::vector<std::size_t>>;

// Finite commutative monoid on {0, ..., m-1}; the laws are checked
// exhaustively on construction.
class FiniteCommMonoid {
 public:
  FiniteCommMonoid() = default;
  FiniteCommMonoid(Table table, std::size_t identity);

  std::size_t size() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  const Table& table() const { return table_; }
  std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t power(std::size_t a, Int k) const;

  // Z/k.
  static FiniteCommMonoid cyclic(std::size_t k);
  // {0, ..., k} under min(a + b, k).
  static FiniteCommMonoid truncation(std::size_t k);
  // Pairs (a, b) numbered a * |right| + b.
  static FiniteCommMonoid product(const FiniteCommMonoid& left, const FiniteCommMonoid& right);

  bool operator==(const FiniteCommMonoid& o) const { return identity_ == o.identity_ && table_ == o.table_; }

 private:
  Table table_;
  std::size_t identity_ = 0;
};

// N^n -> Q determined by the images of the unit vectors.
struct MonoidMorphism {
  FiniteCommMonoid target;
  std::vector<std::size_t> images;

  MonoidMorphism() = default;
  MonoidMorphism(FiniteCommMonoid q, std::vector<std::size_t> images);

  std::size_t n() const { return images.size(); }
  std::size_t base() const { return target.identity(); }
  std::size_t eval(const IntVec& x) const;
  bool surjective() const;
};

// phi(x + (index + period) e_i) = phi(x + index e_i) for all x.
struct Periodicity {
  Int index = 0;
  Int period = 1;
};

std::vector<Periodicity> periodicity_profile(const MonoidMorphism& phi);

struct FiberStratification {
  AffineStratification strata;
  bool in_image = true;
};

// phi^{-1}(q) as disjoint cells: coordinates fixed below their index or
// fixed modulo their period above it.
FiberStratification fiber_stratify(const MonoidMorphism& phi, std::size_t q);

// Fiber in the semigroup generated by `gens`, phi given on those generators.
FiberStratification semigroup_fiber_stratify(const std::vector<IntVec>& gens, std::size_t dim,
                                             const MonoidMorphism& phi, std::size_t q);

struct GameStratification {
  AffineStratification strata;
  FiniteCommMonoid action_monoid;  // generated by the class translations
  VerifyReport report;
  Int window = 0;
};

// Stratification of the P-positions from a certified quotient, verified
// against the solver on the certification window.
GameStratification game_stratify(const LatticeGame& g, const MisereQuotient& mq);

}  // namespace lstrat
