#include "lstrat/fibers.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lstrat {

FiniteCommMonoid::FiniteCommMonoid(Table table, std::size_t identity) : table_(std::move(table)), identity_(identity) {
  const std::size_t m = table_.size();
  require(m > 0, ErrorCode::kPrecondition, "monoid needs at least one element");
  require(identity_ < m, ErrorCode::kPrecondition, "identity index out of range");
  auto at = [](std::size_t a, std::size_t b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; };
  for (std::size_t a = 0; a < m; ++a) {
    require(table_[a].size() == m, ErrorCode::kPrecondition, "operation table is not square");
    for (std::size_t b = 0; b < m; ++b)
      require(table_[a][b] < m, ErrorCode::kPrecondition, "operation table entry out of range at " + at(a, b));
  }
  for (std::size_t a = 0; a < m; ++a) {
    require(table_[identity_][a] == a, ErrorCode::kPrecondition, "identity law fails at " + std::to_string(a));
    for (std::size_t b = 0; b < m; ++b)
      require(table_[a][b] == table_[b][a], ErrorCode::kPrecondition, "not commutative at " + at(a, b));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        require(table_[table_[a][b]][c] == table_[a][table_[b][c]], ErrorCode::kPrecondition,
                "not associative at " + at(a, b) + " with " + std::to_string(c));
}

std::size_t FiniteCommMonoid::power(std::size_t a, Int k) const {
  require(k >= 0, ErrorCode::kPrecondition, "negative exponent");
  std::size_t r = identity_;
  while (k > 0) {
    if (k & 1) r = op(r, a);
    a = op(a, a);
    k >>= 1;
  }
  return r;
}

FiniteCommMonoid FiniteCommMonoid::cyclic(std::size_t k) {
  require(k > 0, ErrorCode::kPrecondition, "cyclic group order must be positive");
  Table t(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return {std::move(t), 0};
}

FiniteCommMonoid FiniteCommMonoid::truncation(std::size_t k) {
  Table t(k + 1, std::vector<std::size_t>(k + 1));
  for (std::size_t a = 0; a <= k; ++a)
    for (std::size_t b = 0; b <= k; ++b) t[a][b] = std::min(a + b, k);
  return {std::move(t), 0};
}

FiniteCommMonoid FiniteCommMonoid::product(const FiniteCommMonoid& left, const FiniteCommMonoid& right) {
  const std::size_t r = right.size(), m = left.size() * r;
  Table t(m, std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) t[x][y] = left.op(x / r, y / r) * r + right.op(x % r, y % r);
  return {std::move(t), left.identity() * r + right.identity()};
}

MonoidMorphism::MonoidMorphism(FiniteCommMonoid q, std::vector<std::size_t> imgs)
    : target(std::move(q)), images(std::move(imgs)) {
  for (auto i : images) require(i < target.size(), ErrorCode::kPrecondition, "generator image out of range");
}

std::size_t MonoidMorphism::eval(const IntVec& x) const {
  require(x.size() == images.size(), ErrorCode::kDimensionMismatch, "point dimension differs from morphism source");
  std::size_t r = target.identity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] >= 0, ErrorCode::kPrecondition, "morphism source is N^n");
    r = target.op(r, target.power(images[i], x[i]));
  }
  return r;
}

bool MonoidMorphism::surjective() const {
  std::vector<bool> seen(target.size(), false);
  std::vector<std::size_t> stack{target.identity()};
  seen[target.identity()] = true;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (auto g : images) {
      auto b = target.op(a, g);
      if (!seen[b]) seen[b] = true, stack.push_back(b);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<Periodicity> periodicity_profile(const MonoidMorphism& phi) {
  const auto& q = phi.target;
  std::vector<Periodicity> out;
  for (auto g : phi.images) {
    // Translation maps a -> a * g^k until one repeats.
    std::map<std::vector<std::size_t>, Int> first;
    std::vector<std::size_t> map(q.size());
    for (std::size_t a = 0; a < q.size(); ++a) map[a] = a;
    for (Int k = 0;; ++k) {
      auto [it, fresh] = first.emplace(map, k);
      if (!fresh) {
        out.push_back({it->second, k - it->second});
        break;
      }
      for (auto& a : map) a = q.op(a, g);
    }
  }
  return out;
}

FiberStratification fiber_stratify(const MonoidMorphism& phi, std::size_t q) {
  require(q < phi.target.size(), ErrorCode::kPrecondition, "fiber element out of range");
  const std::size_t n = phi.n();
  auto prof = periodicity_profile(phi);
  FiberStratification out;
  out.strata = {n, {}, true, 5};
  IntVec x(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      if (phi.eval(x) != q) return;
      std::vector<IntVec> gens;
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] >= prof[j].index) gens.push_back(scale(unit(n, j), prof[j].period));
      out.strata.strata.push_back({{x}, AffineSemigroup(n, gens), true});
      return;
    }
    for (Int v = 0; v < prof[i].index + prof[i].period; ++v) {
      x[i] = v;
      walk(i + 1);
    }
    x[i] = 0;
  };
  walk(0);
  sort_strata(out.strata.strata);
  out.in_image = !out.strata.strata.empty();
  return out;
}

FiberStratification semigroup_fiber_stratify(const std::vector<IntVec>& gens, std::size_t dim,
                                             const MonoidMorphism& phi, std::size_t q) {
  require(gens.size() == phi.n(), ErrorCode::kDimensionMismatch, "one image per generator is required");
  for (const auto& g : gens) require(g.size() == dim, ErrorCode::kDimensionMismatch, "generator dimension mismatch");
  require(AffineSemigroup(dim, gens).is_pointed(), ErrorCode::kPrecondition, "semigroup is not pointed");
  auto cells = fiber_stratify(phi, q);
  FiberStratification out;
  out.in_image = cells.in_image;
  IntMatrix h(dim, IntVec(gens.size(), 0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) h[i][j] = gens[j][i];
  out.strata = cells.in_image ? map_image(cells.strata, h, dim) : AffineStratification{dim, {}, true, 5};
  return out;
}

namespace {

using Map = std::vector<std::size_t>;

Map compose(const Map& first, const Map& then) {
  Map r(first.size());
  for (std::size_t a = 0; a < first.size(); ++a) r[a] = then[first[a]];
  return r;
}

constexpr std::size_t kMaxActionMonoid = 5000;

}  // namespace

GameStratification game_stratify(const LatticeGame& g, const MisereQuotient& mq) {
  require(mq.certified, ErrorCode::kPrecondition, "quotient is not certified: " + mq.note);
  const std::size_t d = g.rules.dim, k = mq.classes.size(), n = mq.generators.size();
  // Translation by each Hilbert basis element acts on the classes.
  std::vector<Map> gens(n, Map(k));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < n; ++j) gens[j][c] = mq.action[c][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(compose(gens[i], gens[j]) == compose(gens[j], gens[i]), ErrorCode::kPrecondition,
              "class actions of " + to_string(mq.generators[i]) + " and " + to_string(mq.generators[j]) +
                  " do not commute");
  Map id(k);
  for (std::size_t c = 0; c < k; ++c) id[c] = c;
  std::vector<Map> elems{id};
  std::map<Map, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& t : gens) {
      Map next = compose(elems[i], t);
      if (index.emplace(next, elems.size()).second) {
        elems.push_back(next);
        require(elems.size() <= kMaxActionMonoid, ErrorCode::kGuard, "class action monoid is too large");
      }
    }
  Table table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  GameStratification out;
  out.action_monoid = FiniteCommMonoid(std::move(table), 0);
  std::vector<std::size_t> images;
  for (const auto& t : gens) images.push_back(index.at(t));
  MonoidMorphism phi(out.action_monoid, images);

  std::vector<TranslatedSemigroup> units;
  for (std::size_t s = 0; s < mq.seeds.size(); ++s) {
    const IntVec& f = mq.seeds[s];
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (!mq.classes[elems[e][mq.seed_class[s]]].is_p) continue;
      for (const auto& cell : fiber_stratify(phi, e).strata.strata) {
        IntVec t = f;
        const IntVec& x = cell.translates.front();
        for (std::size_t j = 0; j < n; ++j) t = add(t, scale(mq.generators[j], x[j]));
        std::vector<IntVec> cg;
        for (const auto& c : cell.semigroup.gens()) {
          IntVec v = zeros(d);
          for (std::size_t j = 0; j < n; ++j) v = add(v, scale(mq.generators[j], c[j]));
          cg.push_back(v);
        }
        units.push_back({t, AffineSemigroup(d, cg)});
      }
    }
  }
  out.strata = disjointify(units, d);
  out.window = mq.window;

  auto pset = solve_p_positions(g, mq.window);
  auto inside = window_positions(g, mq.window);
  std::vector<IntVec> points;
  if (!inside.empty()) {
    IntVec lo = inside.front(), hi = inside.front();
    for (const auto& p : inside)
      for (std::size_t i = 0; i < d; ++i) lo[i] = std::min(lo[i], p[i]), hi[i] = std::max(hi[i], p[i]);
    IntVec x = lo;
    while (true) {
      if (g.rules.value(x) <= mq.window) points.push_back(x);
      std::size_t i = 0;
      while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
      if (i == d) break;
      ++x[i];
    }
  }
  out.report = verify_points(out.strata, [&](const IntVec& p) { return pset.contains(p); }, points);
  return out;
}

}  // namespace lstrat
