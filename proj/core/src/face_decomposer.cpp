#include "lstrat/face_decomposer.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lstrat/linalg.hpp"

namespace lstrat {

namespace {

constexpr std::size_t kMaxPieces = 200000;

// The polyhedron cut down to the affine span of the region's coset.
Polyhedron span_poly(const Region& p) {
  Polyhedron q = p.poly;
  const std::size_t d = q.dim();
  std::vector<RatVec> rows;
  for (const auto& b : p.lattice.basis()) rows.push_back(to_rational(b));
  for (const auto& n : nullspace(rows, d)) q.add({n, dot(n, p.shift), Relation::kEq});
  return q;
}

std::optional<Int> max_of(const Polyhedron& q, const IntVec& c) {
  auto r = functional_range(q, c);
  if (r.empty || !r.upper) return std::nullopt;
  return r.upper->strict ? ceil_of(r.upper->value) - 1 : floor_of(r.upper->value);
}

}  // namespace

FaceDecomposer::FaceDecomposer(AffineSemigroup a, bool minimal_conductors)
    : a_(std::move(a)), minimal_(minimal_conductors) {
  require(a_.is_pointed(), ErrorCode::kPrecondition, "face decomposition needs a pointed semigroup");
  a_facets_ = a_.facets();
}

std::vector<std::size_t> FaceDecomposer::all_generators() const {
  std::vector<std::size_t> idx(a_.gens().size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return idx;
}

const FaceDecomposer::FaceInfo& FaceDecomposer::face_info(const std::vector<std::size_t>& index) {
  auto it = cache_.find(index);
  if (it != cache_.end()) return *it->second;
  auto info = std::make_unique<FaceInfo>();
  info->index = index;
  for (auto i : index) info->gens.push_back(a_.gens()[i]);
  const std::size_t d = a_.dim();
  info->lattice = group_generated(info->gens, d);
  auto cone = cone_from_generators(info->gens, d);
  for (const auto& h : cone.constraints())
    if (h.rel == Relation::kGe) info->facets.push_back(primitive_scaling(h.normal).vector);
  AffineSemigroup face(d, info->gens);
  info->conductor = face.is_normal() ? zeros(d) : saturation(face, minimal_).conductor;
  return *cache_.emplace(index, std::move(info)).first->second;
}

std::vector<std::size_t> FaceDecomposer::face_of(const Region& p) {
  Polyhedron rec = span_poly(p).recession_cone();
  std::vector<const IntVec*> vanishing;
  for (const auto& psi : a_facets_) {
    auto m = max_of(rec, psi);
    if (m && *m == 0) vanishing.push_back(&psi);
  }
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < a_.gens().size(); ++i) {
    const auto& g = a_.gens()[i];
    bool on = std::all_of(vanishing.begin(), vanishing.end(), [&](const IntVec* psi) { return dot(*psi, g) == 0; });
    if (!on) continue;
    require(rec.contains(g), ErrorCode::kInternal, "region recession cone is not a face of the semigroup cone");
    index.push_back(i);
  }
  return index;
}

std::vector<Region> FaceDecomposer::coset_split(const Region& p, const Lattice& s) {
  const Lattice& m = p.lattice;
  const std::size_t r = m.rank(), k = s.rank();
  if (r == 0) return {p};
  IntMatrix su;
  for (const auto& row : s.basis()) {
    auto c = m.coordinates(row);
    require(c.has_value(), ErrorCode::kInternal, "face lattice is not inside the region lattice");
    su.push_back(*c);
  }
  // U * su^T = [H; 0]; the new basis (U^-1)^T B puts s in the first k coordinates.
  IntMatrix sut = su.empty() ? IntMatrix(r, IntVec{}) : transpose(su, r);
  auto h = hermite(sut, k, true);
  require(h.hnf.size() == k, ErrorCode::kInternal, "face lattice rank mismatch");
  IntMatrix nb(r, IntVec(a_.dim(), 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (h.inverse[j][i] != 0) nb[i] = add(nb[i], scale(m.basis()[j], h.inverse[j][i]));
  IntMatrix ht;
  for (std::size_t a = 0; a < k; ++a) {
    IntVec row(k);
    for (std::size_t b = 0; b < k; ++b) row[b] = h.hnf[b][a];
    ht.push_back(row);
  }
  auto residues = coset_representatives(Lattice::full(k), group_generated(ht, k));
  Polyhedron local = p.poly.pullback(nb, p.shift);
  std::vector<Region> out;
  IntVec u(r, 0);
  std::function<void(std::size_t, const Polyhedron&)> walk = [&](std::size_t j, const Polyhedron& q) {
    if (j == r) {
      for (const auto& rho : residues) {
        for (std::size_t i = 0; i < k; ++i) u[i] = rho[i];
        IntVec shift = add(p.shift, vec_mat(u, nb));
        out.push_back(Region{s.reduce(shift), s, p.poly});
        require(out.size() <= kMaxPieces, ErrorCode::kGuard, "coset split produced too many pieces");
      }
      return;
    }
    auto range = functional_range(q, to_rational(unit(r, j)));
    if (range.empty) return;
    require(range.lower && range.upper, ErrorCode::kInternal, "coset split: region unbounded off the face");
    Int lo = range.lower->strict ? floor_of(range.lower->value) + 1 : ceil_of(range.lower->value);
    Int hi = range.upper->strict ? ceil_of(range.upper->value) - 1 : floor_of(range.upper->value);
    for (Int z = lo; z <= hi; ++z) {
      Polyhedron next = q;
      next.add(make_halfspace(unit(r, j), z, Relation::kEq));
      if (is_empty(next)) continue;
      u[j] = z;
      walk(j + 1, next);
    }
  };
  walk(k, local);
  return out;
}

std::vector<IntVec> FaceDecomposer::reduce_translates(const Region& p, const std::vector<IntVec>& ys,
                                                      const std::vector<std::size_t>& from,
                                                      const std::vector<std::size_t>& to) {
  for (auto i : to)
    require(std::binary_search(from.begin(), from.end(), i), ErrorCode::kInternal, "region leaves the subtracted face");
  std::vector<IntVec> off;
  for (auto i : from)
    if (!std::binary_search(to.begin(), to.end(), i)) off.push_back(a_.gens()[i]);
  const std::size_t d = a_.dim();
  auto in_coset = [&](const IntVec& y) { return p.lattice.contains(sub(y, p.shift)); };
  std::set<IntVec> out;
  if (off.empty()) {
    for (const auto& y : ys)
      if (in_coset(y)) out.insert(y);
    return {out.begin(), out.end()};
  }
  // psi vanishes on the target face and is positive on the dropped generators.
  IntVec psi = zeros(d);
  for (const auto& f : a_facets_) {
    bool vanish = std::all_of(to.begin(), to.end(), [&](std::size_t i) { return dot(f, a_.gens()[i]) == 0; });
    if (vanish) psi = add(psi, f);
  }
  auto cap = max_of(span_poly(p), psi);
  if (!cap) return {};
  for (const auto& g : off) require(dot(psi, g) > 0, ErrorCode::kInternal, "face reduction functional");
  std::function<void(const IntVec&, std::size_t)> walk = [&](const IntVec& y, std::size_t start) {
    if (in_coset(y)) out.insert(y);
    for (std::size_t i = start; i < off.size(); ++i) {
      IntVec next = add(y, off[i]);
      if (dot(psi, next) <= *cap) walk(next, i);
    }
  };
  for (const auto& y : ys)
    if (dot(psi, y) <= *cap) walk(y, 0);
  return {out.begin(), out.end()};
}

bool FaceDecomposer::nonempty(const Region& p) const { return !is_empty(span_poly(p)); }

std::vector<TranslatedFace> FaceDecomposer::cover(const Region& p) {
  std::vector<TranslatedFace> out;
  if (!nonempty(p)) return out;
  auto index = face_of(p);
  const FaceInfo& f = face_info(index);
  for (const auto& piece : coset_split(p, f.lattice)) {
    auto gens = module_generators(piece.poly, piece.lattice, piece.shift);
    if (gens.empty()) continue;
    out.push_back({gens.front(), f.gens});
    subtract_same(piece, {gens.front()}, f, out);
  }
  return out;
}

std::vector<TranslatedFace> FaceDecomposer::subtract(const Region& p, const std::vector<IntVec>& ys,
                                                     const std::vector<std::size_t>& face) {
  std::vector<TranslatedFace> out;
  if (!nonempty(p)) return out;
  auto index = face_of(p);
  auto reduced = reduce_translates(p, ys, face, index);
  const FaceInfo& f = face_info(index);
  for (const auto& piece : coset_split(p, f.lattice)) {
    std::vector<IntVec> local;
    for (const auto& y : reduced)
      if (piece.lattice.contains(sub(y, piece.shift))) local.push_back(y);
    if (local.empty()) {
      auto part = cover(piece);
      out.insert(out.end(), part.begin(), part.end());
    } else {
      subtract_same(piece, local, f, out);
    }
  }
  return out;
}

std::vector<TranslatedFace> FaceDecomposer::intersect(const Region& p, const std::vector<IntVec>& ys,
                                                      const std::vector<std::size_t>& face) {
  std::vector<TranslatedFace> out;
  if (!nonempty(p)) return out;
  auto index = face_of(p);
  auto reduced = reduce_translates(p, ys, face, index);
  if (reduced.empty()) return out;
  const FaceInfo& f = face_info(index);
  for (const auto& piece : coset_split(p, f.lattice)) {
    std::vector<IntVec> local;
    for (const auto& y : reduced)
      if (piece.lattice.contains(sub(y, piece.shift))) local.push_back(y);
    if (!local.empty()) intersect_same(piece, local, f, out);
  }
  return out;
}

namespace {

// Thresholds b_j = max_y psi_j(y + aa): above all of them a point lies in
// y + aa + saturation(F) for every y.
std::vector<Int> deep_thresholds(const std::vector<IntVec>& facets, const std::vector<IntVec>& ys, const IntVec& aa) {
  std::vector<Int> b;
  for (const auto& psi : facets) {
    Int m = dot(psi, add(ys.front(), aa));
    for (const auto& y : ys) m = std::max(m, dot(psi, add(y, aa)));
    b.push_back(m);
  }
  return b;
}

Polyhedron slab(const Polyhedron& base, const std::vector<IntVec>& facets, const std::vector<Int>& b, std::size_t j) {
  Polyhedron q = base;
  q.add(make_halfspace(negate(facets[j]), 1 - b[j]));
  for (std::size_t i = 0; i < j; ++i) q.add(make_halfspace(facets[i], b[i]));
  return q;
}

}  // namespace

void FaceDecomposer::subtract_same(const Region& p, const std::vector<IntVec>& ys, const FaceInfo& f,
                                   std::vector<TranslatedFace>& out) {
  auto b = deep_thresholds(f.facets, ys, f.conductor);
  for (std::size_t j = 0; j < f.facets.size(); ++j) {
    Region s{p.shift, p.lattice, slab(p.poly, f.facets, b, j)};
    auto part = subtract(s, ys, f.index);
    out.insert(out.end(), part.begin(), part.end());
  }
}

void FaceDecomposer::intersect_same(const Region& p, const std::vector<IntVec>& ys, const FaceInfo& f,
                                    std::vector<TranslatedFace>& out) {
  auto b = deep_thresholds(f.facets, ys, f.conductor);
  Polyhedron deep = p.poly;
  for (std::size_t j = 0; j < f.facets.size(); ++j) deep.add(make_halfspace(f.facets[j], b[j]));
  auto part = cover(Region{p.shift, p.lattice, deep});
  out.insert(out.end(), part.begin(), part.end());
  for (std::size_t j = 0; j < f.facets.size(); ++j) {
    Region s{p.shift, p.lattice, slab(p.poly, f.facets, b, j)};
    auto more = intersect(s, ys, f.index);
    out.insert(out.end(), more.begin(), more.end());
  }
}

}  // namespace lstrat
