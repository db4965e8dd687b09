#include "lstrat/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "lstrat/linalg.hpp"

namespace lstrat {

bool Halfspace::contains(const RatVec& x) const {
  Rational v = dot(normal, x);
  switch (rel) {
    case Relation::kGe:
      return v >= bound;
    case Relation::kGt:
      return v > bound;
    case Relation::kEq:
      return v == bound;
  }
  return false;
}

bool Halfspace::contains(const IntVec& x) const {
  Rational v = dot(normal, x);
  switch (rel) {
    case Relation::kGe:
      return v >= bound;
    case Relation::kGt:
      return v > bound;
    case Relation::kEq:
      return v == bound;
  }
  return false;
}

Halfspace make_halfspace(const IntVec& normal, Int bound, Relation rel) {
  return Halfspace{to_rational(normal), Rational(static_cast<long>(bound)), rel};
}

Polyhedron::Polyhedron(std::size_t dim, std::vector<Halfspace> constraints) : dim_(dim) {
  for (auto& h : constraints) add(std::move(h));
}

void Polyhedron::add(Halfspace h) {
  require(h.normal.size() == dim_, ErrorCode::kDimensionMismatch,
          "constraint of length " + std::to_string(h.normal.size()) + " in dimension " + std::to_string(dim_));
  constraints_.push_back(std::move(h));
}

void Polyhedron::add_all(const Polyhedron& other) {
  require(other.dim_ == dim_, ErrorCode::kDimensionMismatch, "polyhedron dimension mismatch");
  for (const auto& h : other.constraints_) constraints_.push_back(h);
}

bool Polyhedron::contains(const RatVec& x) const {
  require(x.size() == dim_, ErrorCode::kDimensionMismatch, "point dimension mismatch");
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

bool Polyhedron::contains(const IntVec& x) const {
  require(x.size() == dim_, ErrorCode::kDimensionMismatch, "point dimension mismatch");
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

Polyhedron Polyhedron::recession_cone() const {
  Polyhedron c(dim_);
  for (const auto& h : constraints_) {
    if (is_zero(h.normal)) continue;
    c.add({h.normal, 0, h.rel == Relation::kEq ? Relation::kEq : Relation::kGe});
  }
  return c;
}

bool Polyhedron::is_pointed() const {
  std::vector<RatVec> rows;
  for (const auto& h : constraints_) rows.push_back(h.normal);
  return rank(rows, dim_) == dim_;
}

bool Polyhedron::is_homogeneous() const {
  return std::all_of(constraints_.begin(), constraints_.end(), [](const Halfspace& h) { return h.bound == 0; });
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  Polyhedron r = *this;
  r.add_all(other);
  return r;
}

Polyhedron Polyhedron::translate(const IntVec& t) const {
  Polyhedron r(dim_);
  for (const auto& h : constraints_) r.add({h.normal, h.bound + dot(h.normal, t), h.rel});
  return r;
}

Polyhedron Polyhedron::closure() const {
  Polyhedron r(dim_);
  for (const auto& h : constraints_) r.add({h.normal, h.bound, h.rel == Relation::kGt ? Relation::kGe : h.rel});
  return r;
}

Polyhedron Polyhedron::pullback(const IntMatrix& basis_rows, const IntVec& origin) const {
  require(origin.size() == dim_, ErrorCode::kDimensionMismatch, "origin dimension mismatch");
  Polyhedron r(basis_rows.size());
  for (const auto& h : constraints_) {
    RatVec a(basis_rows.size());
    for (std::size_t i = 0; i < basis_rows.size(); ++i) a[i] = dot(h.normal, basis_rows[i]);
    r.add({std::move(a), h.bound - dot(h.normal, origin), h.rel});
  }
  return r;
}

namespace {

// a . x  (>=, >, =)  b
struct Row {
  RatVec a;
  Rational b;
  Relation rel;
};

constexpr std::size_t kMaxRows = 50000;

// Scales so the first nonzero coefficient has magnitude one (inequalities) or
// equals one (equalities).
void normalize(Row& r) {
  for (const auto& x : r.a) {
    if (x == 0) continue;
    Rational s = r.rel == Relation::kEq ? x : abs(x);
    for (auto& y : r.a) y /= s;
    r.b /= s;
    return;
  }
}

// Drops satisfied constant rows and duplicates; returns false on a violated one.
bool simplify(std::vector<Row>& rows) {
  std::map<RatVec, std::pair<Rational, Relation>> ineq;
  std::map<RatVec, Rational> eq;
  for (auto& r : rows) {
    if (is_zero(r.a)) {
      bool ok = r.rel == Relation::kEq ? r.b == 0 : (r.rel == Relation::kGt ? r.b < 0 : r.b <= 0);
      if (!ok) return false;
      continue;
    }
    normalize(r);
    if (r.rel == Relation::kEq) {
      auto it = eq.find(r.a);
      if (it == eq.end()) {
        eq.emplace(r.a, r.b);
      } else if (it->second != r.b) {
        return false;
      }
      continue;
    }
    auto it = ineq.find(r.a);
    if (it == ineq.end()) {
      ineq.emplace(r.a, std::make_pair(r.b, r.rel));
    } else if (r.b > it->second.first || (r.b == it->second.first && r.rel == Relation::kGt)) {
      it->second = {r.b, r.rel};
    }
  }
  rows.clear();
  for (auto& [a, b] : eq) rows.push_back({a, b, Relation::kEq});
  for (auto& [a, br] : ineq) rows.push_back({a, br.first, br.second});
  return true;
}

// Eliminates variable k. Rows keep their full length; column k becomes zero.
std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t k) {
  std::vector<Row> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel != Relation::kEq || rows[i].a[k] == 0) continue;
    const Row& piv = rows[i];
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      Row r = rows[j];
      if (r.a[k] != 0) {
        Rational f = r.a[k] / piv.a[k];
        for (std::size_t c = 0; c < r.a.size(); ++c) r.a[c] -= f * piv.a[c];
        r.b -= f * piv.b;
      }
      out.push_back(std::move(r));
    }
    return out;
  }
  std::vector<const Row*> pos, neg;
  for (const auto& r : rows) {
    if (r.a[k] > 0) {
      pos.push_back(&r);
    } else if (r.a[k] < 0) {
      neg.push_back(&r);
    } else {
      out.push_back(r);
    }
  }
  require(out.size() + pos.size() * neg.size() <= kMaxRows, ErrorCode::kGuard,
          "elimination exceeded the row budget");
  for (const Row* p : pos) {
    for (const Row* n : neg) {
      Rational fp = 1 / p->a[k];
      Rational fn = -1 / n->a[k];
      Row r{RatVec(p->a.size()), fp * p->b + fn * n->b,
            (p->rel == Relation::kGt || n->rel == Relation::kGt) ? Relation::kGt : Relation::kGe};
      for (std::size_t c = 0; c < r.a.size(); ++c) r.a[c] = fp * p->a[c] + fn * n->a[c];
      r.a[k] = 0;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Row> to_rows(const Polyhedron& p) {
  std::vector<Row> rows;
  rows.reserve(p.constraints().size());
  for (const auto& h : p.constraints()) rows.push_back({h.normal, h.bound, h.rel});
  return rows;
}

// Systems after eliminating variables n-1, n-2, ..., keep. levels[j] involves
// only variables < keep + j... levels.back() involves only variables < keep.
// Returns nullopt when infeasibility is detected.
std::optional<std::vector<std::vector<Row>>> project(std::vector<Row> rows, std::size_t n, std::size_t keep) {
  std::vector<std::vector<Row>> levels;
  if (!simplify(rows)) return std::nullopt;
  levels.push_back(rows);
  for (std::size_t k = n; k-- > keep;) {
    rows = eliminate(rows, k);
    if (!simplify(rows)) return std::nullopt;
    levels.push_back(rows);
  }
  return levels;
}

struct Interval {
  std::optional<RangeBound> lo, hi;
  bool exact = false;
  Rational value;
  bool empty = false;
};

// Interval for variable k given values of variables < k.
Interval interval_for(const std::vector<Row>& rows, std::size_t k, const RatVec& x) {
  Interval iv;
  for (const auto& r : rows) {
    Rational coef = r.a[k];
    Rational rest = r.b;
    for (std::size_t c = 0; c < k; ++c) rest -= r.a[c] * x[c];
    if (coef == 0) {
      bool ok = r.rel == Relation::kEq ? rest == 0 : (r.rel == Relation::kGt ? rest < 0 : rest <= 0);
      if (!ok) iv.empty = true;
      continue;
    }
    Rational v = rest / coef;
    if (r.rel == Relation::kEq) {
      if (iv.exact && iv.value != v) iv.empty = true;
      iv.exact = true;
      iv.value = v;
      continue;
    }
    bool strict = r.rel == Relation::kGt;
    if (coef > 0) {
      if (!iv.lo || v > iv.lo->value || (v == iv.lo->value && strict)) iv.lo = RangeBound{v, strict};
    } else {
      if (!iv.hi || v < iv.hi->value || (v == iv.hi->value && strict)) iv.hi = RangeBound{v, strict};
    }
  }
  auto fits = [&](const Rational& v) {
    if (iv.lo && (v < iv.lo->value || (v == iv.lo->value && iv.lo->strict))) return false;
    if (iv.hi && (v > iv.hi->value || (v == iv.hi->value && iv.hi->strict))) return false;
    return true;
  };
  if (iv.exact && !fits(iv.value)) iv.empty = true;
  if (!iv.exact && iv.lo && iv.hi) {
    if (iv.lo->value > iv.hi->value) iv.empty = true;
    if (iv.lo->value == iv.hi->value && (iv.lo->strict || iv.hi->strict)) iv.empty = true;
  }
  return iv;
}

std::optional<Rational> pick(const Interval& iv) {
  if (iv.empty) return std::nullopt;
  if (iv.exact) return iv.value;
  auto fits = [&](const Rational& v) {
    if (iv.lo && (v < iv.lo->value || (v == iv.lo->value && iv.lo->strict))) return false;
    if (iv.hi && (v > iv.hi->value || (v == iv.hi->value && iv.hi->strict))) return false;
    return true;
  };
  if (fits(0)) return Rational(0);
  if (iv.lo) {
    Rational c(static_cast<long>(floor_of(iv.lo->value) + 1));
    Rational ce(static_cast<long>(ceil_of(iv.lo->value)));
    if (fits(ce)) return ce;
    if (fits(c)) return c;
  }
  if (iv.hi) {
    Rational f(static_cast<long>(floor_of(iv.hi->value)));
    Rational fm(static_cast<long>(ceil_of(iv.hi->value) - 1));
    if (fits(f)) return f;
    if (fits(fm)) return fm;
  }
  if (iv.lo && iv.hi) return (iv.lo->value + iv.hi->value) / 2;
  return std::nullopt;
}

}  // namespace

bool is_empty(const Polyhedron& p) {
  auto levels = project(to_rows(p), p.dim(), 0);
  return !levels.has_value();
}

std::optional<RatVec> sample_point(const Polyhedron& p) {
  const std::size_t n = p.dim();
  auto levels = project(to_rows(p), n, 0);
  if (!levels) return std::nullopt;
  // levels[j] involves variables < n - j.
  RatVec x(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& rows = (*levels)[n - 1 - k];
    auto v = pick(interval_for(rows, k, x));
    require(v.has_value(), ErrorCode::kInternal, "back-substitution failed");
    x[k] = *v;
  }
  return x;
}

std::vector<IntVec> lattice_points(const Polyhedron& p, std::size_t max_points) {
  const std::size_t n = p.dim();
  std::vector<IntVec> out;
  auto levels = project(to_rows(p), n, 0);
  if (!levels) return out;
  RatVec x(n, 0);
  IntVec xi(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == n) {
      out.push_back(xi);
      require(out.size() <= max_points, ErrorCode::kGuard, "lattice point enumeration exceeded its budget");
      return;
    }
    auto iv = interval_for((*levels)[n - 1 - k], k, x);
    if (iv.empty) return;
    Int lo, hi;
    if (iv.exact) {
      if (iv.value.get_den() != 1) return;
      lo = hi = floor_of(iv.value);
    } else {
      require(iv.lo && iv.hi, ErrorCode::kPrecondition, "lattice point enumeration needs a bounded polyhedron");
      lo = iv.lo->strict ? floor_of(iv.lo->value) + 1 : ceil_of(iv.lo->value);
      hi = iv.hi->strict ? ceil_of(iv.hi->value) - 1 : floor_of(iv.hi->value);
    }
    for (Int v = lo; v <= hi; ++v) {
      x[k] = Rational(static_cast<long>(v));
      xi[k] = v;
      walk(k + 1);
    }
    x[k] = 0;
  };
  walk(0);
  return out;
}

FunctionalRange functional_range(const Polyhedron& p, const RatVec& c) {
  require(c.size() == p.dim(), ErrorCode::kDimensionMismatch, "functional dimension mismatch");
  const std::size_t n = p.dim();
  // Variables: z, x_0 .. x_{n-1}, with z = c . x.
  std::vector<Row> rows;
  for (const auto& h : p.constraints()) {
    RatVec a(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) a[i + 1] = h.normal[i];
    rows.push_back({std::move(a), h.bound, h.rel});
  }
  RatVec a(n + 1, 0);
  a[0] = -1;
  for (std::size_t i = 0; i < n; ++i) a[i + 1] = c[i];
  rows.push_back({std::move(a), 0, Relation::kEq});
  FunctionalRange out;
  auto levels = project(std::move(rows), n + 1, 1);
  if (!levels) {
    out.empty = true;
    return out;
  }
  auto iv = interval_for(levels->back(), 0, RatVec(n + 1, 0));
  if (iv.empty) {
    out.empty = true;
    return out;
  }
  if (iv.exact) {
    out.lower = RangeBound{iv.value, false};
    out.upper = RangeBound{iv.value, false};
  } else {
    out.lower = iv.lo;
    out.upper = iv.hi;
  }
  return out;
}

FunctionalRange functional_range(const Polyhedron& p, const IntVec& c) {
  return functional_range(p, to_rational(c));
}

Polyhedron homogenize(const Polyhedron& p) {
  require(!is_empty(p), ErrorCode::kPrecondition, "homogenize: empty polyhedron");
  const std::size_t n = p.dim();
  Polyhedron h(n + 1);
  for (const auto& c : p.constraints()) {
    RatVec a = c.normal;
    a.push_back(-c.bound);
    h.add({std::move(a), 0, c.rel == Relation::kEq ? Relation::kEq : Relation::kGe});
  }
  RatVec t(n + 1, 0);
  t[n] = 1;
  h.add({std::move(t), 0, Relation::kGe});
  return h;
}

std::vector<std::size_t> implicit_equalities(const Polyhedron& p) {
  std::vector<std::size_t> out;
  if (is_empty(p)) return out;
  for (std::size_t i = 0; i < p.constraints().size(); ++i) {
    const auto& h = p.constraints()[i];
    if (h.rel != Relation::kGe) continue;
    Polyhedron q = p;
    q.add({h.normal, h.bound, Relation::kGt});
    if (is_empty(q)) out.push_back(i);
  }
  return out;
}

namespace {

Polyhedron infeasible(std::size_t dim) {
  Polyhedron r(dim);
  r.add({RatVec(dim, 0), 1, Relation::kGe});
  return r;
}

// Integral version of a single constraint; returns false if it has no
// integer solutions at all.
bool integral_constraint(const Halfspace& h, bool strict, Polyhedron& out) {
  auto ps = primitive_scaling(h.normal);
  if (is_zero(h.normal)) {
    if (!h.contains(RatVec(h.normal.size(), 0))) return false;
    return true;
  }
  Rational b = h.bound / ps.factor;
  if (h.rel == Relation::kEq) {
    if (b.get_den() != 1) return false;
    out.add(make_halfspace(ps.vector, floor_of(b), Relation::kEq));
    return true;
  }
  Int bound = strict ? floor_of(b) + 1 : ceil_of(b);
  out.add(make_halfspace(ps.vector, bound, Relation::kGe));
  return true;
}

}  // namespace

Polyhedron tighten_integral(const Polyhedron& p) {
  Polyhedron out(p.dim());
  for (const auto& h : p.constraints()) {
    if (!integral_constraint(h, h.rel == Relation::kGt, out)) return infeasible(p.dim());
  }
  return out;
}

Polyhedron interior_shift(const Polyhedron& p) {
  require(!is_empty(p), ErrorCode::kPrecondition, "interior_shift: empty polyhedron");
  auto implicit = implicit_equalities(p);
  Polyhedron out(p.dim());
  for (std::size_t i = 0; i < p.constraints().size(); ++i) {
    Halfspace h = p.constraints()[i];
    bool is_implicit = std::find(implicit.begin(), implicit.end(), i) != implicit.end();
    if (is_implicit) h.rel = Relation::kEq;
    if (!integral_constraint(h, h.rel != Relation::kEq, out)) return infeasible(p.dim());
  }
  return out;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

IntVec primitive_of(const RatVec& v) { return primitive_scaling(v).vector; }

}  // namespace

std::vector<IntVec> extreme_rays(const Polyhedron& cone) {
  require(cone.is_homogeneous(), ErrorCode::kPrecondition, "extreme_rays: cone must be homogeneous");
  const std::size_t d = cone.dim();
  std::vector<RatVec> eqs;
  std::vector<RatVec> ineqs;
  for (const auto& h : cone.constraints()) {
    if (h.rel == Relation::kEq) {
      eqs.push_back(h.normal);
    } else {
      ineqs.push_back(h.normal);
    }
  }
  std::size_t re = rank(eqs, d);
  std::set<IntVec> rays;
  if (re >= d) return {};
  std::size_t need = d - 1 - re;
  for_each_subset(ineqs.size(), need, [&](const std::vector<std::size_t>& sub) {
    auto rows = eqs;
    for (auto i : sub) rows.push_back(ineqs[i]);
    auto ns = nullspace(rows, d);
    if (ns.size() != 1) return;
    for (int s : {1, -1}) {
      RatVec v = ns[0];
      if (s < 0)
        for (auto& x : v) x = -x;
      bool ok = std::all_of(ineqs.begin(), ineqs.end(), [&](const RatVec& a) { return dot(a, v) >= 0; });
      if (ok) rays.insert(primitive_of(v));
    }
  });
  return {rays.begin(), rays.end()};
}

Polyhedron cone_from_generators(const std::vector<IntVec>& gens, std::size_t dim) {
  for (const auto& g : gens) require(g.size() == dim, ErrorCode::kDimensionMismatch, "generator dimension mismatch");
  std::vector<RatVec> rg;
  for (const auto& g : gens)
    if (!is_zero(g)) rg.push_back(to_rational(g));
  Polyhedron c(dim);
  auto perp = nullspace(rg, dim);
  for (const auto& n : perp) c.add({to_rational(primitive_of(n)), 0, Relation::kEq});
  std::size_t r = rank(rg, dim);
  if (r == 0) return c;
  std::set<IntVec> facets;
  for_each_subset(rg.size(), r - 1, [&](const std::vector<std::size_t>& sub) {
    std::vector<RatVec> rows = perp;
    for (auto i : sub) rows.push_back(rg[i]);
    auto ns = nullspace(rows, dim);
    if (ns.size() != 1) return;
    bool pos = false, neg = false;
    for (const auto& g : rg) {
      Rational v = dot(ns[0], g);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) return;
    RatVec n = ns[0];
    if (neg)
      for (auto& x : n) x = -x;
    facets.insert(primitive_of(n));
  });
  for (const auto& f : facets) c.add(make_halfspace(f, 0, Relation::kGe));
  return c;
}

Hyperplane canonical_hyperplane(const RatVec& normal, const Rational& bound) {
  auto ps = primitive_scaling(normal);
  require(!is_zero(normal), ErrorCode::kPrecondition, "hyperplane with zero normal");
  Rational b = bound / ps.factor;
  IntVec n = ps.vector;
  auto lead = std::find_if(n.begin(), n.end(), [](Int x) { return x != 0; });
  if (*lead < 0) {
    n = negate(n);
    b = -b;
  }
  return {to_rational(n), b};
}

std::vector<ArrangementCell> arrangement_cells(const std::vector<Hyperplane>& hyperplanes,
                                               const std::vector<Polyhedron>& members,
                                               const Polyhedron& within) {
  const std::size_t d = within.dim();
  std::vector<Hyperplane> canon;
  for (const auto& h : hyperplanes) {
    require(h.normal.size() == d, ErrorCode::kDimensionMismatch, "hyperplane dimension mismatch");
    canon.push_back(canonical_hyperplane(h.normal, h.bound));
  }
  // Member constraint -> (hyperplane index, orientation).
  struct Use {
    std::size_t plane;
    int orient;
    Relation rel;
  };
  std::vector<std::vector<Use>> uses(members.size());
  std::vector<bool> trivially_empty(members.size(), false);
  for (std::size_t m = 0; m < members.size(); ++m) {
    require(members[m].dim() == d, ErrorCode::kDimensionMismatch, "member dimension mismatch");
    for (const auto& c : members[m].constraints()) {
      if (is_zero(c.normal)) {
        if (!c.contains(RatVec(d, 0))) trivially_empty[m] = true;
        continue;
      }
      auto ch = canonical_hyperplane(c.normal, c.bound);
      auto lead = std::find_if(c.normal.begin(), c.normal.end(), [](const Rational& x) { return x != 0; });
      int orient = *lead > 0 ? 1 : -1;
      std::size_t found = canon.size();
      for (std::size_t i = 0; i < canon.size(); ++i) {
        if (canon[i].normal == ch.normal && canon[i].bound == ch.bound) {
          found = i;
          break;
        }
      }
      require(found < canon.size(), ErrorCode::kPrecondition, "arrangement member uses a hyperplane outside the list");
      uses[m].push_back({found, orient, c.rel});
    }
  }
  std::vector<ArrangementCell> cells;
  std::vector<int> signs;
  std::function<void(const Polyhedron&)> dfs = [&](const Polyhedron& current) {
    std::size_t k = signs.size();
    if (k == canon.size()) {
      ArrangementCell cell{signs, current, false};
      for (std::size_t m = 0; m < members.size() && !cell.inside; ++m) {
        if (trivially_empty[m]) continue;
        bool all = std::all_of(uses[m].begin(), uses[m].end(), [&](const Use& u) {
          int s = signs[u.plane] * u.orient;
          switch (u.rel) {
            case Relation::kGe:
              return s >= 0;
            case Relation::kGt:
              return s > 0;
            case Relation::kEq:
              return s == 0;
          }
          return false;
        });
        cell.inside = all;
      }
      cells.push_back(std::move(cell));
      return;
    }
    for (int s : {-1, 0, 1}) {
      Polyhedron next = current;
      RatVec n = canon[k].normal;
      Rational b = canon[k].bound;
      if (s < 0) {
        for (auto& x : n) x = -x;
        b = -b;
      }
      next.add({n, b, s == 0 ? Relation::kEq : Relation::kGt});
      if (is_empty(next)) continue;
      signs.push_back(s);
      dfs(next);
      signs.pop_back();
    }
  };
  if (!is_empty(within)) dfs(within);
  return cells;
}

}  // namespace lstrat
