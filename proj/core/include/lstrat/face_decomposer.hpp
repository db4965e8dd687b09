#pragma once

#include <map>
#include <memory>
#include <vector>

#include "lstrat/geometry.hpp"
#include "lstrat/lattice.hpp"
#include "lstrat/semigroup.hpp"

namespace lstrat {

// Lattice points of a polyhedron inside one coset: (shift + lattice) ∩ poly.
struct Region {
  IntVec shift;
  Lattice lattice;
  Polyhedron poly;

  bool contains(const IntVec& v) const { return lattice.contains(sub(v, shift)) && poly.contains(v); }
};

// Writes region sets as disjoint unions of translated faces of a fixed
// pointed semigroup A. Every region handed in must have a face of cone(A) as
// its recession cone and the face generators inside its lattice.
class FaceDecomposer {
 public:
  explicit FaceDecomposer(AffineSemigroup a, bool minimal_conductors = false);

  const AffineSemigroup& semigroup() const { return a_; }

  // The region itself.
  std::vector<TranslatedFace> cover(const Region& p);
  // Region minus the union of y + F over ys, F the face with generators `face`.
  std::vector<TranslatedFace> subtract(const Region& p, const std::vector<IntVec>& ys, const std::vector<std::size_t>& face);
  // Region intersected with that union.
  std::vector<TranslatedFace> intersect(const Region& p, const std::vector<IntVec>& ys, const std::vector<std::size_t>& face);

  std::vector<std::size_t> all_generators() const;

 private:
  struct FaceInfo {
    std::vector<std::size_t> index;
    std::vector<IntVec> gens;
    Lattice lattice;
    std::vector<IntVec> facets;  // relative facet normals of the face cone
    IntVec conductor;
  };

  const FaceInfo& face_info(const std::vector<std::size_t>& index);
  std::vector<std::size_t> face_of(const Region& p);
  std::vector<Region> coset_split(const Region& p, const Lattice& sub);
  std::vector<IntVec> reduce_translates(const Region& p, const std::vector<IntVec>& ys, const std::vector<std::size_t>& from,
                                        const std::vector<std::size_t>& to);
  void subtract_same(const Region& p, const std::vector<IntVec>& ys, const FaceInfo& f, std::vector<TranslatedFace>& out);
  void intersect_same(const Region& p, const std::vector<IntVec>& ys, const FaceInfo& f, std::vector<TranslatedFace>& out);
  bool nonempty(const Region& p) const;

  AffineSemigroup a_;
  bool minimal_;
  std::vector<IntVec> a_facets_;
  std::map<std::vector<std::size_t>, std::unique_ptr<FaceInfo>> cache_;
};

}  // namespace lstrat
