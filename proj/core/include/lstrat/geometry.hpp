#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lstrat/exact.hpp"

namespace lstrat {

enum class Relation { kGe, kGt, kEq };

// normal . x  (>=, >, =)  bound
struct Halfspace {
  RatVec normal;
  Rational bound;
  Relation rel = Relation::kGe;

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;
};

Halfspace make_halfspace(const IntVec& normal, Int bound, Relation rel = Relation::kGe);

class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::size_t dim) : dim_(dim) {}
  Polyhedron(std::size_t dim, std::vector<Halfspace> constraints);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& constraints() const { return constraints_; }
  void add(Halfspace h);
  void add_all(const Polyhedron& other);

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;

  // Homogeneous parts of all constraints, closed. Meaningful for nonempty input.
  Polyhedron recession_cone() const;
  bool is_pointed() const;
  bool is_homogeneous() const;
  Polyhedron intersect(const Polyhedron& other) const;
  // The set p + t.
  Polyhedron translate(const IntVec& t) const;
  Polyhedron closure() const;
  // The same set in coordinates u with x = origin + u * basis_rows.
  Polyhedron pullback(const IntMatrix& basis_rows, const IntVec& origin) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> constraints_;
};

bool is_empty(const Polyhedron& p);
std::optional<RatVec> sample_point(const Polyhedron& p);

// Integer points of a bounded polyhedron in lexicographic order.
std::vector<IntVec> lattice_points(const Polyhedron& p, std::size_t max_points = 5000000);

struct RangeBound {
  Rational value;
  bool strict = false;  // value itself is not attained
};

struct FunctionalRange {
  bool empty = false;
  std::optional<RangeBound> lower;
  std::optional<RangeBound> upper;
};

// Exact range of c . x over p.
FunctionalRange functional_range(const Polyhedron& p, const RatVec& c);
FunctionalRange functional_range(const Polyhedron& p, const IntVec& c);

Polyhedron homogenize(const Polyhedron& p);
// Indices of inequality constraints that hold with equality on all of p.
std::vector<std::size_t> implicit_equalities(const Polyhedron& p);
// Closed integral description of the lattice points of p (strict and equality
// constraints made integral).
Polyhedron tighten_integral(const Polyhedron& p);
// Closed polyhedron whose lattice points are those of the relative interior.
Polyhedron interior_shift(const Polyhedron& p);

// Primitive integer generators of the extreme rays of a pointed homogeneous cone.
std::vector<IntVec> extreme_rays(const Polyhedron& cone);
Polyhedron cone_from_generators(const std::vector<IntVec>& gens, std::size_t dim);

// Hyperplane normal . x = bound.
struct Hyperplane {
  RatVec normal;
  Rational bound;
};

struct ArrangementCell {
  std::vector<int> signs;  // -1, 0, +1 per hyperplane
  Polyhedron relint;
  bool inside = false;
};

// Cells of the arrangement restricted to `within`, tagged by membership in the
// union of `members`. Member constraints must come from the hyperplane list.
std::vector<ArrangementCell> arrangement_cells(const std::vector<Hyperplane>& hyperplanes,
                                               const std::vector<Polyhedron>& members,
                                               const Polyhedron& within);

// Primitive integer normal (positive leading entry) and matching bound.
Hyperplane canonical_hyperplane(const RatVec& normal, const Rational& bound);

}  // namespace lstrat
