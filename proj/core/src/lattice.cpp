#include "lstrat/lattice.hpp"

#include <algorithm>
#include <set>

#include "lstrat/linalg.hpp"

namespace lstrat {

namespace {

constexpr std::size_t kMaxHilbertRank = 5;
constexpr Int kMaxBoxPoints = 4000000;

// Coefficients c with c * rows = v for rows in echelon form, if integral.
std::optional<IntVec> echelon_coordinates(const IntMatrix& rows, const std::vector<std::size_t>& pivots, IntVec v) {
  IntVec c(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Int p = rows[i][pivots[i]];
    Int x = v[pivots[i]];
    if (x % p != 0) return std::nullopt;
    c[i] = x / p;
    if (c[i] != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_sub(v[j], checked_mul(c[i], rows[i][j]));
  }
  if (!is_zero(v)) return std::nullopt;
  return c;
}

}  // namespace

Lattice Lattice::generated_by(const std::vector<IntVec>& gens, std::size_t dim) {
  for (const auto& g : gens) require(g.size() == dim, ErrorCode::kDimensionMismatch, "generator dimension mismatch");
  Lattice l(dim);
  auto h = hermite(gens, dim);
  l.basis_ = std::move(h.hnf);
  l.pivots_ = std::move(h.pivots);
  return l;
}

Lattice Lattice::full(std::size_t dim) {
  IntMatrix units;
  for (std::size_t i = 0; i < dim; ++i) units.push_back(unit(dim, i));
  return generated_by(units, dim);
}

Int Lattice::index() const {
  require(is_full_rank(), ErrorCode::kPrecondition, "index of a lattice that is not full rank");
  Int idx = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) idx = checked_mul(idx, basis_[i][pivots_[i]]);
  return idx;
}

bool Lattice::contains(const IntVec& v) const {
  require(v.size() == dim_, ErrorCode::kDimensionMismatch, "vector dimension mismatch");
  return echelon_coordinates(basis_, pivots_, v).has_value();
}

IntVec Lattice::reduce(const IntVec& v) const {
  require(v.size() == dim_, ErrorCode::kDimensionMismatch, "vector dimension mismatch");
  IntVec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Int q = floor_div(r[pivots_[i]], basis_[i][pivots_[i]]);
    if (q == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) r[j] = checked_sub(r[j], checked_mul(q, basis_[i][j]));
  }
  return r;
}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
  require(v.size() == dim_, ErrorCode::kDimensionMismatch, "vector dimension mismatch");
  return echelon_coordinates(basis_, pivots_, v);
}

IntVec Lattice::from_coordinates(const IntVec& u) const {
  if (basis_.empty()) return zeros(dim_);
  return vec_mat(u, basis_);
}

Lattice group_generated(const std::vector<IntVec>& gens, std::size_t dim) { return Lattice::generated_by(gens, dim); }

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  require(a.dim() == b.dim(), ErrorCode::kDimensionMismatch, "lattice dimension mismatch");
  IntMatrix stacked = a.basis();
  for (const auto& r : b.basis()) stacked.push_back(r);
  auto kernel = left_kernel(stacked, a.dim());
  std::vector<IntVec> gens;
  for (const auto& k : kernel) {
    IntVec u(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.rank()));
    gens.push_back(a.from_coordinates(u));
  }
  return Lattice::generated_by(gens, a.dim());
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  require(a.dim() == b.dim(), ErrorCode::kDimensionMismatch, "lattice dimension mismatch");
  IntMatrix stacked = a.basis();
  for (const auto& r : b.basis()) stacked.push_back(r);
  return Lattice::generated_by(stacked, a.dim());
}

Lattice complete_to_full_rank(const Lattice& l) {
  IntMatrix rows = l.basis();
  std::vector<bool> pivot(l.dim(), false);
  for (auto p : l.pivots()) pivot[p] = true;
  for (std::size_t j = 0; j < l.dim(); ++j)
    if (!pivot[j]) rows.push_back(unit(l.dim(), j));
  return Lattice::generated_by(rows, l.dim());
}

bool is_sublattice(const Lattice& small, const Lattice& big) {
  return std::all_of(small.basis().begin(), small.basis().end(), [&](const IntVec& r) { return big.contains(r); });
}

Coset make_coset(const IntVec& shift, const Lattice& lattice) { return Coset{lattice.reduce(shift), lattice}; }

std::optional<Coset> coset_intersection(const Coset& a, const Coset& b) {
  const std::size_t d = a.lattice.dim();
  require(b.lattice.dim() == d, ErrorCode::kDimensionMismatch, "coset dimension mismatch");
  // s_a + u A = s_b + w B  <=>  [u, w] * [A; -B] = s_b - s_a
  IntMatrix stacked = a.lattice.basis();
  for (const auto& r : b.lattice.basis()) stacked.push_back(negate(r));
  IntVec target = sub(b.shift, a.shift);
  auto h = hermite(stacked, d, true);
  auto c = echelon_coordinates(h.hnf, h.pivots, target);
  if (!c) return std::nullopt;
  IntVec full(stacked.size(), 0);
  for (std::size_t i = 0; i < c->size(); ++i) full[i] = (*c)[i];
  IntVec coeffs = stacked.empty() ? IntVec{} : vec_mat(full, h.transform);
  IntVec u(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(a.lattice.rank()));
  IntVec point = add(a.shift, a.lattice.from_coordinates(u));
  return make_coset(point, lattice_intersect(a.lattice, b.lattice));
}

std::vector<IntVec> coset_representatives(const Lattice& coarse, const Lattice& fine) {
  require(coarse.dim() == fine.dim(), ErrorCode::kDimensionMismatch, "lattice dimension mismatch");
  require(coarse.rank() == fine.rank() && is_sublattice(fine, coarse), ErrorCode::kPrecondition,
          "coset_representatives: not a finite-index sublattice");
  const std::size_t r = coarse.rank();
  IntMatrix fine_coords;
  for (const auto& row : fine.basis()) fine_coords.push_back(*coarse.coordinates(row));
  Lattice local = Lattice::generated_by(fine_coords, r);
  Int count = r == 0 ? 1 : local.index();
  require(count <= kMaxBoxPoints, ErrorCode::kGuard, "too many cosets");
  std::vector<IntVec> reps;
  IntVec u(r, 0);
  while (true) {
    reps.push_back(fine.reduce(coarse.from_coordinates(u)));
    std::size_t i = 0;
    for (; i < r; ++i) {
      if (++u[i] < local.basis()[i][local.pivots()[i]]) break;
      u[i] = 0;
    }
    if (i == r) break;
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

IntVec positive_functional(const Polyhedron& cone) {
  auto rays = extreme_rays(cone);
  const std::size_t d = cone.dim();
  if (rays.empty()) return zeros(d);
  Polyhedron dual(d);
  for (const auto& r : rays) dual.add(make_halfspace(r, 1));
  auto c = sample_point(dual);
  require(c.has_value(), ErrorCode::kPrecondition, "cone is not pointed");
  // Integral and positive on integral rays, hence >= 1 there.
  return primitive_scaling(*c).vector;
}

HilbertBasis hilbert_basis(const Polyhedron& cone, const Lattice& ambient) {
  require(cone.dim() == ambient.dim(), ErrorCode::kDimensionMismatch, "cone and lattice dimension mismatch");
  require(cone.is_homogeneous(), ErrorCode::kPrecondition, "hilbert_basis: cone must be homogeneous");
  HilbertBasis out{{}, cone, ambient};
  const std::size_t r = ambient.rank();
  if (r == 0) return out;
  require(r <= kMaxHilbertRank, ErrorCode::kGuard, "hilbert_basis: rank exceeds desk-scale guard");
  Polyhedron local = cone.pullback(ambient.basis(), zeros(cone.dim()));
  require(local.is_pointed(), ErrorCode::kPrecondition, "hilbert_basis: cone is not pointed");
  auto rays = extreme_rays(local);
  if (rays.empty()) return out;
  IntVec c = positive_functional(local);
  IntVec lo(r, 0), hi(r, 0);
  for (const auto& ray : rays)
    for (std::size_t j = 0; j < r; ++j) {
      if (ray[j] < 0) lo[j] = checked_add(lo[j], ray[j]);
      if (ray[j] > 0) hi[j] = checked_add(hi[j], ray[j]);
    }
  Int total = 1;
  for (std::size_t j = 0; j < r; ++j) {
    total = checked_mul(total, hi[j] - lo[j] + 1);
    require(total <= kMaxBoxPoints, ErrorCode::kGuard, "hilbert_basis: enumeration box too large");
  }
  std::vector<IntVec> candidates;
  IntVec u = lo;
  while (true) {
    if (!is_zero(u) && local.contains(u)) candidates.push_back(u);
    std::size_t i = 0;
    for (; i < r; ++i) {
      if (++u[i] <= hi[i]) break;
      u[i] = lo[i];
    }
    if (i == r) break;
  }
  std::sort(candidates.begin(), candidates.end(), FunctionalOrder{c});
  std::vector<IntVec> accepted;
  for (const auto& x : candidates) {
    bool reducible = std::any_of(accepted.begin(), accepted.end(), [&](const IntVec& h) {
      return local.contains(sub(x, h));
    });
    if (!reducible) accepted.push_back(x);
  }
  for (const auto& a : accepted) out.generators.push_back(ambient.from_coordinates(a));
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

std::vector<IntVec> module_generators(const Polyhedron& p, const Lattice& ambient, const IntVec& shift) {
  require(p.dim() == ambient.dim() && shift.size() == p.dim(), ErrorCode::kDimensionMismatch,
          "module_generators: dimension mismatch");
  const std::size_t r = ambient.rank();
  Polyhedron local = tighten_integral(p.pullback(ambient.basis(), shift));
  if (r == 0) {
    if (local.contains(IntVec{})) return {shift};
    return {};
  }
  if (is_empty(local)) return {};
  require(local.recession_cone().is_pointed(), ErrorCode::kPrecondition, "module_generators: polyhedron is not pointed");
  Polyhedron h = homogenize(local);
  auto hb = hilbert_basis(h, Lattice::full(r + 1));
  std::vector<IntVec> gens;
  for (const auto& g : hb.generators) {
    if (g[r] != 1) continue;
    IntVec u(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(r));
    gens.push_back(add(shift, ambient.from_coordinates(u)));
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

std::vector<IntVec> module_generators(const Polyhedron& p, const Lattice& ambient) {
  return module_generators(p, ambient, zeros(p.dim()));
}

std::vector<IntVec> coset_module_generators(const Coset& c, const std::vector<IntVec>& ideal_gens,
                                            const HilbertBasis& a) {
  const std::size_t d = a.cone.dim();
  require(c.lattice.dim() == d && c.shift.size() == d, ErrorCode::kDimensionMismatch,
          "coset_module_generators: coset ambient mismatch");
  Lattice joint = lattice_intersect(c.lattice, a.lattice);
  std::set<IntVec> found;
  for (const auto& g : ideal_gens) {
    require(a.contains(g), ErrorCode::kPrecondition, "ideal generator " + to_string(g) + " is not in the semigroup");
    auto meet = coset_intersection(c, make_coset(g, a.lattice));
    if (!meet) continue;
    for (auto& m : module_generators(a.cone.translate(g), joint, meet->shift)) found.insert(m);
  }
  HilbertBasis over{{}, a.cone, joint};
  IntVec func = positive_functional(a.cone);
  std::vector<IntVec> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), FunctionalOrder{func});
  std::vector<IntVec> out;
  for (const auto& x : sorted) {
    bool covered = std::any_of(out.begin(), out.end(), [&](const IntVec& y) { return over.contains(sub(x, y)); });
    if (!covered) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lstrat
