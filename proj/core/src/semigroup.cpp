#include "lstrat/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "lstrat/face_decomposer.hpp"
#include "lstrat/linalg.hpp"

namespace lstrat {

namespace {

constexpr Int kMaxBoxPoints = 2000000;
constexpr Int kMaxConductorMultiple = 2000;
constexpr std::size_t kMaxFacets = 16;

// v is a nonnegative integer combination of gens; c is positive on every gen.
bool reachable(const std::vector<IntVec>& gens, const IntVec& c, const IntVec& v,
               std::unordered_set<IntVec, IntVecHash>& failed) {
  if (is_zero(v)) return true;
  if (dot(c, v) <= 0 || failed.count(v)) return false;
  for (const auto& g : gens) {
    IntVec w = sub(v, g);
    if (dot(c, w) < 0) continue;
    if (reachable(gens, c, w, failed)) return true;
  }
  failed.insert(v);
  return false;
}

std::vector<IntVec> box_points(const IntVec& lo, const IntVec& hi) {
  Int total = 1;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    total = checked_mul(total, hi[j] - lo[j] + 1);
    require(total <= kMaxBoxPoints, ErrorCode::kGuard, "enumeration box too large");
  }
  std::vector<IntVec> out;
  IntVec u = lo;
  while (true) {
    out.push_back(u);
    std::size_t i = 0;
    for (; i < u.size(); ++i) {
      if (++u[i] <= hi[i]) break;
      u[i] = lo[i];
    }
    if (i == u.size()) break;
  }
  return out;
}

// Bounding box of the zonotope sum [0,1] g.
void zonotope_box(const std::vector<IntVec>& gens, std::size_t d, IntVec& lo, IntVec& hi) {
  lo.assign(d, 0);
  hi.assign(d, 0);
  for (const auto& g : gens)
    for (std::size_t j = 0; j < d; ++j) {
      if (g[j] < 0) lo[j] = checked_add(lo[j], g[j]);
      if (g[j] > 0) hi[j] = checked_add(hi[j], g[j]);
    }
}

}  // namespace

AffineSemigroup::AffineSemigroup(std::size_t dim, std::vector<IntVec> gens) : dim_(dim) {
  std::set<IntVec> unique;
  for (auto& g : gens) {
    require(g.size() == dim, ErrorCode::kDimensionMismatch,
            "generator " + to_string(g) + " does not have dimension " + std::to_string(dim));
    if (!is_zero(g)) unique.insert(g);
  }
  gens_.assign(unique.begin(), unique.end());
  group_ = group_generated(gens_, dim);
  cone_ = cone_from_generators(gens_, dim);
  pointed_ = gens_.empty() || cone_.is_pointed();
  if (!pointed_) return;
  functional_ = positive_functional(cone_);
  // Minimal generating set: drop generators reachable from smaller ones.
  auto sorted = gens_;
  std::sort(sorted.begin(), sorted.end(), FunctionalOrder{functional_});
  std::vector<IntVec> kept;
  for (const auto& g : sorted) {
    std::unordered_set<IntVec, IntVecHash> failed;
    if (!reachable(kept, functional_, g, failed)) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  gens_ = std::move(kept);
  try {
    normal_ = hilbert_basis(cone_, group_).generators == gens_;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGuard) throw;
    normal_ = false;
  }
}

std::vector<IntVec> AffineSemigroup::facets() const {
  std::vector<IntVec> out;
  for (const auto& h : cone_.constraints()) {
    if (h.rel != Relation::kGe) continue;
    out.push_back(primitive_scaling(h.normal).vector);
  }
  return out;
}

bool AffineSemigroup::search(const IntVec& v) const {
  std::unordered_set<IntVec, IntVecHash> failed;
  return reachable(gens_, functional_, v, failed);
}

bool AffineSemigroup::contains(const IntVec& v) const {
  require(v.size() == dim_, ErrorCode::kDimensionMismatch, "point dimension mismatch");
  require(pointed_, ErrorCode::kPrecondition, "membership: semigroup is not pointed");
  if (!group_.contains(v) || !cone_.contains(v)) return false;
  if (normal_) return true;
  return search(v);
}

bool membership(const AffineSemigroup& a, const IntVec& v) { return a.contains(v); }

HilbertBasis saturation_monoid(const AffineSemigroup& a) {
  require(a.is_pointed(), ErrorCode::kPrecondition, "saturation: semigroup is not pointed");
  return hilbert_basis(a.cone(), a.group());
}

AffineSemigroup saturation_semigroup(const AffineSemigroup& a) {
  return AffineSemigroup(a.dim(), saturation_monoid(a).generators);
}

SaturationData saturation(const AffineSemigroup& a, bool minimize) {
  auto hb = saturation_monoid(a);
  SaturationData s;
  s.sat_gens = hb.generators;
  const std::size_t d = a.dim();
  if (a.is_normal()) {
    s.module_gens = {zeros(d)};
    s.conductor = zeros(d);
    return s;
  }
  IntVec lo, hi;
  zonotope_box(a.gens(), d, lo, hi);
  std::vector<IntVec> cands;
  for (auto& x : box_points(lo, hi))
    if (hb.contains(x)) cands.push_back(std::move(x));
  std::sort(cands.begin(), cands.end(), FunctionalOrder{a.functional()});
  for (const auto& x : cands) {
    bool covered = std::any_of(s.module_gens.begin(), s.module_gens.end(),
                               [&](const IntVec& g) { return a.contains(sub(x, g)); });
    if (!covered) s.module_gens.push_back(x);
  }
  auto works = [&](const IntVec& aa) {
    return std::all_of(s.module_gens.begin(), s.module_gens.end(),
                       [&](const IntVec& g) { return a.contains(add(aa, g)); });
  };
  IntVec sigma = zeros(d);
  for (const auto& g : a.gens()) sigma = add(sigma, g);
  IntVec multiple;
  for (Int k = 0; k <= kMaxConductorMultiple; ++k) {
    IntVec cand = scale(sigma, k);
    if (works(cand)) {
      multiple = cand;
      break;
    }
  }
  require(!multiple.empty(), ErrorCode::kGuard, "conductor search exceeded its budget");
  s.conductor = multiple;
  if (minimize) {
    // Elements of A up to the functional value of the multiple found.
    const IntVec& c = a.functional();
    Int cap = dot(c, multiple);
    std::set<IntVec> seen;
    std::vector<IntVec> stack{zeros(d)};
    while (!stack.empty()) {
      IntVec p = stack.back();
      stack.pop_back();
      if (dot(c, p) > cap || !seen.insert(p).second) continue;
      for (const auto& g : a.gens()) stack.push_back(add(p, g));
    }
    std::vector<IntVec> elems(seen.begin(), seen.end());
    std::sort(elems.begin(), elems.end(), FunctionalOrder{c});
    for (const auto& e : elems)
      if (works(e)) {
        s.conductor = e;
        break;
      }
  }
  return s;
}

bool check_conductor(const AffineSemigroup& a, const SaturationData& s) {
  if (!a.contains(s.conductor)) return false;
  return std::all_of(s.module_gens.begin(), s.module_gens.end(),
                     [&](const IntVec& g) { return a.contains(add(s.conductor, g)); });
}

std::vector<std::vector<IntVec>> faces(const AffineSemigroup& a) {
  auto psi = a.facets();
  require(psi.size() <= kMaxFacets, ErrorCode::kGuard, "too many facets for face enumeration");
  std::set<std::vector<IntVec>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << psi.size()); ++mask) {
    std::vector<IntVec> sel;
    for (const auto& g : a.gens()) {
      bool on = true;
      for (std::size_t j = 0; j < psi.size(); ++j)
        if ((mask >> j & 1) && dot(psi[j], g) != 0) on = false;
      if (on) sel.push_back(g);
    }
    out.insert(sel);
  }
  return {out.begin(), out.end()};
}

std::vector<TranslatedFace> complement_decompose(const AffineSemigroup& a, const SaturationData& s) {
  require(a.is_pointed(), ErrorCode::kPrecondition, "complement_decompose: semigroup is not pointed");
  require(s.conductor.size() == a.dim() && a.contains(s.conductor), ErrorCode::kPrecondition,
          "complement_decompose: conductor is not in the semigroup");
  const std::size_t d = a.dim();
  auto psi = a.facets();
  FaceDecomposer dec(a, true);
  std::vector<TranslatedFace> out;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    Polyhedron slab = a.cone();
    slab.add(make_halfspace(negate(psi[j]), 1 - dot(psi[j], s.conductor)));
    for (std::size_t i = 0; i < j; ++i) slab.add(make_halfspace(psi[i], dot(psi[i], s.conductor)));
    if (is_empty(slab)) continue;
    Region r{zeros(d), a.group(), slab};
    for (auto& t : dec.intersect(r, {zeros(d)}, dec.all_generators())) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SemigroupIdeal::contains(const IntVec& v) const {
  return std::any_of(gens.begin(), gens.end(), [&](const IntVec& g) { return parent.contains(sub(v, g)); });
}

SemigroupIdeal make_ideal(const AffineSemigroup& parent, std::vector<IntVec> gens) {
  for (const auto& g : gens)
    require(parent.contains(g), ErrorCode::kPrecondition, "ideal generator " + to_string(g) + " is not in the parent");
  std::sort(gens.begin(), gens.end(), FunctionalOrder{parent.functional()});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVec> kept;
  for (const auto& g : gens) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](const IntVec& k) { return parent.contains(sub(g, k)); });
    if (!covered) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return SemigroupIdeal{parent, kept};
}

namespace {

std::vector<IntVec> minimal_monomials(std::vector<IntVec> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVec> out;
  for (const auto& g : gens) {
    bool divisible = std::any_of(gens.begin(), gens.end(), [&](const IntVec& h) {
      if (h == g) return false;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (h[i] > g[i]) return false;
      return true;
    });
    if (!divisible) out.push_back(g);
  }
  return out;
}

// Ideal generated by `gens` (zero outside `split`) inside offset + N^(split ∪ free).
void stanley(std::vector<IntVec> gens, std::vector<std::size_t> split, std::vector<std::size_t> free, IntVec offset,
             std::vector<TranslatedFace>& out) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return;
  const std::size_t n = offset.size();
  auto emit = [&]() {
    std::vector<std::size_t> all = free;
    all.insert(all.end(), split.begin(), split.end());
    std::sort(all.begin(), all.end());
    std::vector<IntVec> face;
    for (auto i : all) face.push_back(unit(n, i));
    std::sort(face.begin(), face.end());
    out.push_back({offset, face});
  };
  if (std::any_of(gens.begin(), gens.end(), [](const IntVec& g) { return is_zero(g); })) {
    emit();
    return;
  }
  // Highest-index variable with a positive exponent.
  std::size_t var = n;
  for (auto it = split.rbegin(); it != split.rend(); ++it) {
    bool used = std::any_of(gens.begin(), gens.end(), [&](const IntVec& g) { return g[*it] > 0; });
    if (used) {
      var = *it;
      break;
    }
  }
  std::vector<std::size_t> rest;
  for (auto i : split)
    if (i != var) rest.push_back(i);
  Int top = 0;
  for (const auto& g : gens) top = std::max(top, g[var]);
  auto project = [&](Int k) {
    std::vector<IntVec> p;
    for (const auto& g : gens)
      if (g[var] <= k) {
        IntVec h = g;
        h[var] = 0;
        p.push_back(h);
      }
    return p;
  };
  for (Int k = 0; k < top; ++k) {
    IntVec off = offset;
    off[var] = checked_add(off[var], k);
    stanley(project(k), rest, free, off, out);
  }
  IntVec off = offset;
  off[var] = checked_add(off[var], top);
  auto f2 = free;
  f2.push_back(var);
  stanley(project(top), rest, f2, off, out);
}

}  // namespace

std::vector<TranslatedFace> stanley_decompose(const SemigroupIdeal& m) {
  const std::size_t n = m.parent.dim();
  std::vector<IntVec> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit(n, i));
  std::sort(units.begin(), units.end());
  require(m.parent.gens() == units, ErrorCode::kPrecondition, "stanley_decompose: parent is not N^n");
  std::vector<std::size_t> split(n);
  for (std::size_t i = 0; i < n; ++i) split[i] = i;
  std::vector<TranslatedFace> out;
  stanley(m.gens, split, {}, zeros(n), out);
  return out;
}

std::vector<TranslatedFace> ideal_stratify(const SemigroupIdeal& m) {
  if (m.gens.empty()) return {};
  const auto& a = m.parent;
  FaceDecomposer dec(a, true);
  Region whole{zeros(a.dim()), a.group(), a.cone()};
  auto out = dec.intersect(whole, m.gens, dec.all_generators());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalPiece> normal_pieces(const IntVec& f, const AffineSemigroup& a) {
  if (a.is_normal()) return {{f, HilbertBasis{a.gens(), a.cone(), a.group()}}};
  auto s = saturation(a, true);
  std::vector<NormalPiece> out{{add(f, s.conductor), saturation_monoid(a)}};
  for (const auto& t : complement_decompose(a, s)) {
    for (auto& p : normal_pieces(add(f, t.translate), AffineSemigroup(a.dim(), t.gens))) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lstrat
