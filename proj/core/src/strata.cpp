#include "lstrat/strata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lstrat/face_decomposer.hpp"

namespace lstrat {

bool Stratum::contains(const IntVec& v) const {
  for (const auto& f : translates)
    if (semigroup.contains(sub(v, f))) return true;
  return false;
}

bool AffineStratification::contains(const IntVec& v) const {
  require(v.size() == dim, ErrorCode::kDimensionMismatch, "point dimension differs from stratification");
  return std::any_of(strata.begin(), strata.end(), [&](const Stratum& s) { return s.contains(v); });
}

bool member(const AffineStratification& s, const IntVec& v) { return s.contains(v); }

std::vector<TranslatedSemigroup> units(const AffineStratification& s) {
  std::vector<TranslatedSemigroup> out;
  for (const auto& st : s.strata)
    for (const auto& f : st.translates) out.push_back({f, st.semigroup});
  return out;
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kCone: return "cone";
    case CertificateKind::kCoset: return "coset";
    case CertificateKind::kLattice: return "lattice";
    case CertificateKind::kOverlap: return "overlap";
  }
  return "unknown";
}

namespace {

HilbertBasis as_normal(const AffineSemigroup& a) {
  if (a.is_normal()) return {a.gens(), a.cone(), a.group()};
  return saturation_monoid(a);
}

struct PieceResult {
  CertificateKind kind;
  std::optional<IntVec> witness;
};

// (t1 + C1 ∩ L1) ∩ (t2 + C2 ∩ L2).
PieceResult piece_pair(const IntVec& t1, const HilbertBasis& n1, const IntVec& t2, const HilbertBasis& n2) {
  Polyhedron poly = n1.cone.translate(t1).intersect(n2.cone.translate(t2));
  if (is_empty(poly)) return {CertificateKind::kCone, std::nullopt};
  auto meet = coset_intersection(make_coset(t1, n1.lattice), make_coset(t2, n2.lattice));
  if (!meet) return {CertificateKind::kCoset, std::nullopt};
  auto g = module_generators(poly, meet->lattice, meet->shift);
  if (g.empty()) return {CertificateKind::kLattice, std::nullopt};
  return {CertificateKind::kOverlap, g.front()};
}

}  // namespace

PairCertificate certify_pair(const IntVec& f1, const AffineSemigroup& a1, const IntVec& f2, const AffineSemigroup& a2) {
  PairCertificate c;
  c.first_translate = f1;
  c.second_translate = f2;
  auto r = piece_pair(f1, as_normal(a1), f2, as_normal(a2));
  c.kind = r.kind;
  if (r.kind != CertificateKind::kOverlap) return c;
  if (a1.is_normal() && a2.is_normal()) {
    c.witness = r.witness;
    return c;
  }
  // The saturations meet; decide on the normal pieces.
  auto p1 = normal_pieces(f1, a1);
  auto p2 = normal_pieces(f2, a2);
  for (const auto& x : p1)
    for (const auto& y : p2) {
      auto q = piece_pair(x.translate, x.monoid, y.translate, y.monoid);
      if (q.kind == CertificateKind::kOverlap) {
        c.witness = q.witness;
        return c;
      }
    }
  c.kind = CertificateKind::kLattice;
  return c;
}

DisjointnessReport certify_disjoint(const AffineStratification& s) {
  DisjointnessReport rep;
  for (std::size_t i = 0; i < s.strata.size(); ++i)
    for (std::size_t j = i + 1; j < s.strata.size(); ++j)
      for (const auto& f1 : s.strata[i].translates)
        for (const auto& f2 : s.strata[j].translates) {
          auto c = certify_pair(f1, s.strata[i].semigroup, f2, s.strata[j].semigroup);
          c.first = i;
          c.second = j;
          if (c.kind == CertificateKind::kOverlap) {
            rep.disjoint = false;
            if (!rep.failure) rep.failure = c;
          }
          rep.pairs.push_back(std::move(c));
        }
  return rep;
}

VerifyReport verify_points(const AffineStratification& s, const std::function<bool(const IntVec&)>& oracle,
                           const std::vector<IntVec>& points, std::size_t max_witnesses) {
  VerifyReport rep;
  if (s.disjoint) rep.disjointness = certify_disjoint(s);
  for (const auto& x : points) {
    ++rep.points_checked;
    bool want = oracle(x), have = s.contains(x);
    if (want == have) continue;
    rep.equal = false;
    auto& bucket = want ? rep.missing : rep.extra;
    if (bucket.size() < max_witnesses) bucket.push_back(x);
  }
  return rep;
}

VerifyReport verify(const AffineStratification& s, const std::function<bool(const IntVec&)>& oracle, const Window& window,
                    std::size_t max_witnesses) {
  require(window.lo.size() == s.dim && window.hi.size() == s.dim, ErrorCode::kDimensionMismatch,
          "window dimension differs from stratification");
  std::vector<IntVec> points;
  bool empty = false;
  for (std::size_t i = 0; i < s.dim; ++i) empty = empty || window.lo[i] > window.hi[i];
  if (!empty) {
    IntVec x = window.lo;
    while (true) {
      points.push_back(x);
      std::size_t i = 0;
      while (i < s.dim && x[i] == window.hi[i]) x[i] = window.lo[i], ++i;
      if (i == s.dim) break;
      ++x[i];
    }
  }
  return verify_points(s, oracle, points, max_witnesses);
}

std::vector<Stratum> unify_lattices(const std::vector<Stratum>& strata) {
  if (strata.empty()) return {};
  const std::size_t d = strata.front().semigroup.dim();
  Lattice common = Lattice::full(d);
  for (const auto& s : strata) {
    require(s.semigroup.is_normal(), ErrorCode::kPrecondition, "lattice unification needs normal strata");
    common = lattice_intersect(common, complete_to_full_rank(s.semigroup.group()));
  }
  std::vector<Stratum> out;
  for (const auto& s : strata) {
    const auto& a = s.semigroup;
    Lattice fine = lattice_intersect(common, a.group());
    AffineSemigroup target(d, hilbert_basis(a.cone(), fine).generators);
    auto reps = coset_representatives(a.group(), fine);
    for (const auto& f : s.translates) {
      Polyhedron region = a.cone().translate(f);
      for (const auto& rho : reps) {
        auto gens = module_generators(region, fine, add(f, rho));
        if (gens.empty()) continue;
        out.push_back({gens, target, true});
      }
    }
  }
  return out;
}

void sort_strata(std::vector<Stratum>& strata) {
  for (auto& s : strata) std::sort(s.translates.begin(), s.translates.end());
  std::stable_sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.semigroup.cone_dim() != b.semigroup.cone_dim()) return a.semigroup.cone_dim() > b.semigroup.cone_dim();
    if (a.translates != b.translates) return a.translates < b.translates;
    return a.semigroup.gens() < b.semigroup.gens();
  });
}

namespace {

struct Piece {
  IntVec translate;
  HilbertBasis monoid;
  Polyhedron region;  // translate + cone
  Lattice completed;
};

bool unit_contains(const TranslatedSemigroup& big, const TranslatedSemigroup& small) {
  if (!big.semigroup.contains(sub(small.translate, big.translate))) return false;
  for (const auto& g : small.semigroup.gens())
    if (!big.semigroup.contains(g)) return false;
  return true;
}

void emit(std::vector<Stratum>& out, const std::vector<TranslatedFace>& faces, std::size_t d) {
  for (const auto& f : faces) out.push_back({{f.translate}, AffineSemigroup(d, f.gens), true});
}

// (mu + m) ∩ within ∖ union of the subtrahend regions, as translated normal faces.
void subtract_regions(std::vector<Stratum>& out, const IntVec& mu, const Lattice& m, const Polyhedron& within,
                      const std::vector<const Piece*>& subs, std::size_t d) {
  if (subs.empty()) {
    auto hb = hilbert_basis(within.recession_cone(), m);
    FaceDecomposer fd(AffineSemigroup(d, hb.generators));
    emit(out, fd.cover(Region{mu, m, within}), d);
    return;
  }
  std::vector<Hyperplane> hyperplanes;
  std::set<std::pair<RatVec, Rational>> seen;
  std::vector<Polyhedron> members;
  for (const auto* p : subs) {
    members.push_back(p->region);
    for (const auto& h : p->region.constraints()) {
      auto c = canonical_hyperplane(h.normal, h.bound);
      if (seen.insert({c.normal, c.bound}).second) hyperplanes.push_back(c);
    }
  }
  for (const auto& cell : arrangement_cells(hyperplanes, members, within)) {
    if (cell.inside || is_empty(cell.relint)) continue;
    auto hb = hilbert_basis(cell.relint.recession_cone(), m);
    FaceDecomposer fd(AffineSemigroup(d, hb.generators));
    emit(out, fd.cover(Region{mu, m, cell.relint}), d);
  }
}

}  // namespace

AffineStratification disjointify(const std::vector<TranslatedSemigroup>& input, std::size_t dim) {
  for (const auto& u : input) {
    require(u.translate.size() == dim && u.semigroup.dim() == dim, ErrorCode::kDimensionMismatch,
            "summand dimension differs");
    require(u.semigroup.is_pointed(), ErrorCode::kPrecondition, "summand semigroup is not pointed");
  }
  // Drop summands inside another one; of two equal ones the later goes.
  std::vector<bool> dropped(input.size(), false);
  for (std::size_t i = 0; i < input.size(); ++i)
    for (std::size_t k = 0; k < input.size() && !dropped[i]; ++k) {
      if (k == i || dropped[k]) continue;
      if (unit_contains(input[k], input[i]) && (k < i || !unit_contains(input[i], input[k]))) dropped[i] = true;
    }
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (dropped[i]) continue;
    for (auto& np : normal_pieces(input[i].translate, input[i].semigroup)) {
      Piece p{np.translate, np.monoid, np.monoid.cone.translate(np.translate), complete_to_full_rank(np.monoid.lattice)};
      pieces.push_back(std::move(p));
    }
  }
  std::vector<Stratum> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& pi = pieces[i];
    std::vector<const Piece*> relevant;
    for (std::size_t k = 0; k < i; ++k) {
      auto r = piece_pair(pi.translate, pi.monoid, pieces[k].translate, pieces[k].monoid);
      if (r.kind == CertificateKind::kOverlap) relevant.push_back(&pieces[k]);
    }
    if (relevant.empty()) {
      out.push_back({{pi.translate}, AffineSemigroup(dim, pi.monoid.generators), true});
      continue;
    }
    Lattice m = pi.monoid.lattice;
    for (const auto* p : relevant) m = lattice_intersect(m, p->completed);
    for (const auto& rho : coset_representatives(pi.monoid.lattice, m)) {
      IntVec mu = add(pi.translate, rho);
      std::vector<const Piece*> applicable;
      for (const auto* p : relevant)
        if (p->completed.contains(sub(mu, p->translate))) applicable.push_back(p);
      subtract_regions(out, mu, m, pi.region, applicable, dim);
    }
  }
  sort_strata(out);
  AffineStratification s{dim, std::move(out), true, 5};
  auto cert = certify_disjoint(s);
  require(cert.disjoint, ErrorCode::kInternal, "disjointify produced overlapping strata");
  return s;
}

AffineStratification map_image(const AffineStratification& s, const IntMatrix& map, std::size_t target_dim) {
  require(map.size() == target_dim, ErrorCode::kDimensionMismatch, "map row count differs from target dimension");
  for (const auto& row : map)
    require(row.size() == s.dim, ErrorCode::kDimensionMismatch, "map column count differs from source dimension");
  std::vector<TranslatedSemigroup> image;
  for (const auto& st : s.strata) {
    std::vector<IntVec> gens;
    for (const auto& g : st.semigroup.gens()) gens.push_back(mat_vec(map, g));
    AffineSemigroup a(target_dim, gens);
    require(a.is_pointed(), ErrorCode::kPrecondition, "image semigroup is not pointed");
    for (const auto& f : st.translates) image.push_back({mat_vec(map, f), a});
  }
  return disjointify(image, target_dim);
}

AffineStratification union_of(const std::vector<AffineStratification>& parts, std::size_t dim) {
  std::vector<TranslatedSemigroup> all;
  for (const auto& p : parts) {
    require(p.dim == dim, ErrorCode::kDimensionMismatch, "union of stratifications of different dimension");
    auto u = units(p);
    all.insert(all.end(), u.begin(), u.end());
  }
  return disjointify(all, dim);
}

bool is_hilbert_fixpoint(const AffineSemigroup& a) {
  if (!a.is_pointed()) return false;
  auto hb = hilbert_basis(a.cone(), a.group()).generators;
  auto g = a.gens();
  std::sort(hb.begin(), hb.end());
  std::sort(g.begin(), g.end());
  return hb == g;
}

AffineStratification convert(const AffineStratification& s, int form) {
  require(form >= 1 && form <= 6, ErrorCode::kPrecondition, "form must be between 1 and 6");
  const std::size_t d = s.dim;
  AffineStratification out{d, {}, false, form};
  switch (form) {
    case 2:
      out = s;
      out.form = 2;
      return out;
    case 3:
      for (const auto& u : units(s)) out.strata.push_back({{u.translate}, u.semigroup, u.semigroup.is_normal()});
      return out;
    case 4:
      for (const auto& u : units(s))
        for (const auto& p : normal_pieces(u.translate, u.semigroup))
          out.strata.push_back({{p.translate}, AffineSemigroup(d, p.monoid.generators), true});
      return out;
    default:
      break;
  }
  out = disjointify(units(s), d);
  out.form = form;
  if (form != 1) return out;
  std::vector<Stratum> grouped;
  for (auto& st : out.strata) {
    auto it = std::find_if(grouped.begin(), grouped.end(),
                           [&](const Stratum& g) { return g.semigroup == st.semigroup; });
    if (it == grouped.end())
      grouped.push_back(std::move(st));
    else
      it->translates.push_back(st.translates.front());
  }
  sort_strata(grouped);
  out.strata = std::move(grouped);
  return out;
}

bool check_form(const AffineStratification& s, std::string* why) {
  auto fail_with = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  if (s.form < 1 || s.form > 6) return fail_with("form tag out of range");
  const bool single = s.form >= 3;
  const bool normal = s.form == 4 || s.form == 5;
  const bool disjoint = s.form == 1 || s.form == 5 || s.form == 6;
  for (std::size_t i = 0; i < s.strata.size(); ++i) {
    const auto& st = s.strata[i];
    if (st.semigroup.dim() != s.dim) return fail_with("stratum " + std::to_string(i) + " has the wrong dimension");
    if (st.translates.empty()) return fail_with("stratum " + std::to_string(i) + " has no translates");
    if (single && st.translates.size() != 1)
      return fail_with("stratum " + std::to_string(i) + " has more than one translate");
    if ((normal || st.normal) && !is_hilbert_fixpoint(st.semigroup))
      return fail_with("stratum " + std::to_string(i) + " is not normal");
  }
  if (disjoint) {
    if (!s.disjoint) return fail_with("form requires the disjoint flag");
    auto c = certify_disjoint(s);
    if (!c.disjoint)
      return fail_with("strata " + std::to_string(c.failure->first) + " and " + std::to_string(c.failure->second) +
                       " meet at " + to_string(*c.failure->witness));
  } else if (s.disjoint && !certify_disjoint(s).disjoint) {
    return fail_with("disjoint flag set but strata overlap");
  }
  return true;
}

}  // namespace lstrat
