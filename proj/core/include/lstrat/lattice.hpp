#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lstrat/exact.hpp"
#include "lstrat/geometry.hpp"

namespace lstrat {

// Sublattice of Z^d with its basis kept in Hermite normal form.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t dim) : dim_(dim) {}

  static Lattice generated_by(const std::vector<IntVec>& gens, std::size_t dim);
  static Lattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_full_rank() const { return basis_.size() == dim_; }
  // Index in Z^d; requires full rank.
  Int index() const;

  bool contains(const IntVec& v) const;
  // Canonical representative of v + L.
  IntVec reduce(const IntVec& v) const;
  std::optional<IntVec> coordinates(const IntVec& v) const;
  IntVec from_coordinates(const IntVec& u) const;

  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Lattice group_generated(const std::vector<IntVec>& gens, std::size_t dim);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
// Full-rank lattice L' with L' ∩ span(L) = L (adds unit vectors off the pivots).
Lattice complete_to_full_rank(const Lattice& l);
bool is_sublattice(const Lattice& small, const Lattice& big);

struct Coset {
  IntVec shift;
  Lattice lattice;

  bool contains(const IntVec& v) const { return lattice.contains(sub(v, shift)); }
  bool operator==(const Coset& o) const { return shift == o.shift && lattice == o.lattice; }
};

Coset make_coset(const IntVec& shift, const Lattice& lattice);
std::optional<Coset> coset_intersection(const Coset& a, const Coset& b);
// Representatives of coarse / fine for fine a finite-index sublattice of coarse.
std::vector<IntVec> coset_representatives(const Lattice& coarse, const Lattice& fine);

// Normal affine semigroup cone ∩ lattice with its minimal generators.
struct HilbertBasis {
  std::vector<IntVec> generators;
  Polyhedron cone;
  Lattice lattice;

  bool contains(const IntVec& v) const { return lattice.contains(v) && cone.contains(v); }
};

HilbertBasis hilbert_basis(const Polyhedron& cone, const Lattice& ambient);

// Finite G with p ∩ (shift + L) = G + (rec(p) ∩ L); empty when p has no such points.
std::vector<IntVec> module_generators(const Polyhedron& p, const Lattice& ambient, const IntVec& shift);
std::vector<IntVec> module_generators(const Polyhedron& p, const Lattice& ambient);

// Generators of c ∩ (ideal_gens + A) as a module over c.lattice ∩ A, A = cone ∩ lattice.
std::vector<IntVec> coset_module_generators(const Coset& c, const std::vector<IntVec>& ideal_gens,
                                            const HilbertBasis& a);

// Integer functional with value >= 1 on every nonzero point of a pointed cone.
IntVec positive_functional(const Polyhedron& cone);

}  // namespace lstrat
