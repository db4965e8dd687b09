#pragma once

#include <cstddef>
#include <vector>

#include "lstrat/exact.hpp"
#include "lstrat/geometry.hpp"
#include "lstrat/lattice.hpp"

namespace lstrat {

// Finitely generated submonoid of Z^d. Generators are reduced to the minimal
// generating set when the semigroup is pointed.
class AffineSemigroup {
 public:
  AffineSemigroup() = default;
  AffineSemigroup(std::size_t dim, std::vector<IntVec> gens);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& gens() const { return gens_; }
  const Lattice& group() const { return group_; }
  const Polyhedron& cone() const { return cone_; }
  bool is_pointed() const { return pointed_; }
  bool is_normal() const { return normal_; }
  // Dimension of the real cone.
  std::size_t cone_dim() const { return group_.rank(); }
  // Integer functional, >= 1 on every generator. Requires pointed.
  const IntVec& functional() const { return functional_; }
  // Primitive inner normals of the facets of the cone.
  std::vector<IntVec> facets() const;

  bool contains(const IntVec& v) const;

  bool operator==(const AffineSemigroup& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }
  bool operator!=(const AffineSemigroup& o) const { return !(*this == o); }

 private:
  bool search(const IntVec& v) const;

  std::size_t dim_ = 0;
  std::vector<IntVec> gens_;
  Lattice group_;
  Polyhedron cone_;
  bool pointed_ = true;
  bool normal_ = false;
  IntVec functional_;
};

// Membership by depth-first search pruned with a positive functional.
bool membership(const AffineSemigroup& a, const IntVec& v);

// Saturation: the normal semigroup cone(A) ∩ ZA.
HilbertBasis saturation_monoid(const AffineSemigroup& a);
AffineSemigroup saturation_semigroup(const AffineSemigroup& a);

struct SaturationData {
  std::vector<IntVec> sat_gens;
  IntVec conductor;
  // Module generators of the saturation over A.
  std::vector<IntVec> module_gens;
};

// With `minimize`, the conductor is the first element of A in functional
// order that works; otherwise the first working multiple of the generator sum.
SaturationData saturation(const AffineSemigroup& a, bool minimize = false);
bool check_conductor(const AffineSemigroup& a, const SaturationData& s);

// A translate of the face of a semigroup spanned by `gens`.
struct TranslatedFace {
  IntVec translate;
  std::vector<IntVec> gens;

  bool operator==(const TranslatedFace& o) const { return translate == o.translate && gens == o.gens; }
  bool operator<(const TranslatedFace& o) const {
    return translate != o.translate ? translate < o.translate : gens < o.gens;
  }
};

// All faces of A as generator subsets, including A and the trivial face.
std::vector<std::vector<IntVec>> faces(const AffineSemigroup& a);

// A ∖ (conductor + saturation) as disjoint translates of proper faces.
std::vector<TranslatedFace> complement_decompose(const AffineSemigroup& a, const SaturationData& s);

struct SemigroupIdeal {
  AffineSemigroup parent;
  std::vector<IntVec> gens;

  bool contains(const IntVec& v) const;
};

SemigroupIdeal make_ideal(const AffineSemigroup& parent, std::vector<IntVec> gens);

// Disjoint translated coordinate faces covering an ideal of N^n.
std::vector<TranslatedFace> stanley_decompose(const SemigroupIdeal& m);
// Disjoint translated faces of the parent covering the ideal.
std::vector<TranslatedFace> ideal_stratify(const SemigroupIdeal& m);

// Normal pieces t + (cone ∩ lattice) covering f + A disjointly: the conductor
// translate of the saturation plus, recursively, the complement faces.
struct NormalPiece {
  IntVec translate;
  HilbertBasis monoid;
};
std::vector<NormalPiece> normal_pieces(const IntVec& f, const AffineSemigroup& a);

}  // namespace lstrat
