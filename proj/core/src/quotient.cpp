#include "lstrat/quotient.hpp"

#include <algorithm>
#include <unordered_map>

#include "lstrat/lattice.hpp"

namespace lstrat {

std::vector<IntVec> cone_offsets(const LatticeGame& g, Int radius) {
  Polyhedron q = g.board.ambient.recession_cone();
  q.add(make_halfspace(negate(g.rules.functional), -radius));
  auto pts = lattice_points(q);
  std::sort(pts.begin(), pts.end(), FunctionalOrder{g.rules.functional});
  return pts;
}

IndistinguishabilityWitness indistinguishable(const LatticeGame& g, const IntVec& p, const IntVec& q,
                                              const PositionSet& pset, Int radius) {
  require(g.board.in_lattice(p) && g.board.in_lattice(q), ErrorCode::kPrecondition,
          "positions must be lattice points of the board");
  const Int need = std::max(g.rules.value(p), g.rules.value(q)) + radius;
  require(pset.threshold >= need, ErrorCode::kPrecondition,
          "position set solved to " + std::to_string(pset.threshold) + " but the comparison needs " +
              std::to_string(need));
  IndistinguishabilityWitness w{p, q, Distinction::kIndistinguishable, std::nullopt, radius};
  for (const auto& r : cone_offsets(g, radius)) {
    if (pset.contains(add(p, r)) != pset.contains(add(q, r))) {
      w.status = Distinction::kDistinguished;
      w.offset = r;
      break;
    }
  }
  return w;
}

std::map<IntVec, std::size_t> MisereQuotient::class_index() const {
  std::map<IntVec, std::size_t> idx;
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (const auto& m : classes[k].members) idx.emplace(m, k);
  return idx;
}

namespace {

using Assignment = std::unordered_map<IntVec, std::size_t, IntVecHash>;

struct Partition {
  std::vector<IntVec> positions;  // (value, lex) order
  Assignment group;
};

// Groups window positions by their P-pattern over offsets up to `radius`.
Partition partition(const LatticeGame& g, Int window, Int radius, const PositionSet& pset) {
  Partition out;
  out.positions = window_positions(g, window);
  auto offsets = cone_offsets(g, radius);
  std::map<std::vector<bool>, std::size_t> ids;
  for (const auto& p : out.positions) {
    std::vector<bool> sig(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i) sig[i] = pset.contains(add(p, offsets[i]));
    auto it = ids.emplace(std::move(sig), ids.size()).first;
    out.group.emplace(p, it->second);
  }
  return out;
}

// Same partition of `positions` under both assignments.
bool same_partition(const std::vector<IntVec>& positions, const Assignment& a, const Assignment& b,
                    std::vector<IntVec>& witness) {
  std::unordered_map<std::size_t, IntVec> first_a, first_b;
  for (const auto& p : positions) {
    auto ga = a.at(p), gb = b.at(p);
    auto ia = first_a.emplace(ga, p).first;
    auto ib = first_b.emplace(gb, p).first;
    if (ia->second != ib->second) {
      witness = {p, ia->second, ib->second};
      return false;
    }
  }
  return true;
}

}  // namespace

Rederivation rederive(const MisereQuotient& q, const LatticeGame& g) {
  Rederivation out;
  auto known = q.class_index();
  std::unordered_map<IntVec, std::size_t, IntVecHash> cls;
  for (std::size_t i = 0; i < q.seeds.size(); ++i) cls.emplace(q.seeds[i], q.seed_class[i]);
  for (const auto& p : window_positions(g, q.window)) {
    std::optional<std::size_t> c;
    auto seeded = cls.find(p);
    if (seeded != cls.end()) c = seeded->second;
    for (std::size_t j = 0; j < q.generators.size() && out.consistent; ++j) {
      IntVec prev = sub(p, q.generators[j]);
      auto it = cls.find(prev);
      if (it == cls.end()) continue;
      std::size_t cand = q.action[it->second][j];
      if (c && *c != cand) {
        out.consistent = false;
        out.witness = {p, prev};
      }
      c = cand;
    }
    if (!out.consistent) return out;
    auto rec = known.find(p);
    if (!c || (rec != known.end() && rec->second != *c)) {
      out.consistent = false;
      out.witness = {p};
      return out;
    }
    cls.emplace(p, *c);
    if (g.board.on_board(p) && q.classes[*c].is_p) out.p_positions.push_back(p);
  }
  return out;
}

MisereQuotient build_quotient(const LatticeGame& g, const QuotientPolicy& policy) {
  require(policy.threshold >= 0 && policy.delta > 0, ErrorCode::kPrecondition, "threshold and delta must be positive");
  MisereQuotient q;
  Int t = policy.threshold;
  Partition fine;
  for (int round = 0;; ++round) {
    const Int big = t + policy.delta;
    auto pset = solve_p_positions(g, 2 * big);
    auto coarse = partition(g, t, t, pset);
    fine = partition(g, big, big, pset);
    std::vector<IntVec> w;
    if (same_partition(coarse.positions, coarse.group, fine.group, w)) {
      q.stabilized = true;
      break;
    }
    if (round >= policy.max_escalations) {
      q.note = "partition did not stabilize within the escalation budget";
      q.witness = w;
      break;
    }
    t = big;
  }
  q.window = t;
  q.radius = t + policy.delta;

  // Classes of the certification window, numbered by representative.
  std::map<std::size_t, std::size_t> renumber;
  auto pset = solve_p_positions(g, t);
  for (const auto& p : window_positions(g, t)) {
    auto grp = fine.group.at(p);
    auto it = renumber.find(grp);
    if (it == renumber.end()) {
      it = renumber.emplace(grp, q.classes.size()).first;
      q.classes.push_back({p, {}, false});
    }
    auto& k = q.classes[it->second];
    k.members.push_back(p);
    if (pset.contains(p)) k.is_p = true;
  }

  const std::size_t d = g.rules.dim;
  auto uncertified = [&](std::string why, std::vector<IntVec> w) {
    if (q.note.empty()) q.note = std::move(why);
    if (q.witness.empty()) q.witness = std::move(w);
  };
  q.generators = hilbert_basis(g.board.ambient.recession_cone(), Lattice::full(d)).generators;
  for (const auto& k : q.classes) {
    std::vector<std::size_t> row;
    for (const auto& h : q.generators) {
      IntVec next = add(k.rep, h);
      auto it = fine.group.find(next);
      auto r = it == fine.group.end() ? renumber.end() : renumber.find(it->second);
      if (r == renumber.end()) {
        uncertified("class action leaves the window or the class set", {k.rep, h});
        row.push_back(0);
      } else {
        row.push_back(r->second);
      }
    }
    q.action.push_back(std::move(row));
  }
  q.seeds = module_generators(g.board.ambient, Lattice::full(d));
  auto idx = q.class_index();
  for (const auto& f : q.seeds) {
    auto it = idx.find(f);
    if (it == idx.end()) {
      uncertified("module generator of the board outside the window", {f});
      q.seed_class.push_back(0);
    } else {
      q.seed_class.push_back(it->second);
    }
  }

  if (q.stabilized && q.note.empty()) {
    auto re = rederive(q, g);
    if (!re.consistent) {
      uncertified("class action is not consistent on the window", re.witness);
    } else if (re.p_positions != pset.members) {
      uncertified("re-derived P-positions differ from the solver", {});
    } else if (auto pure = purity_check(q, pset); !pure.pass) {
      uncertified("a class mixes P and non-P positions", pure.witness);
    } else {
      q.certified = true;
    }
  }
  if (g.board.is_monoid()) {
    try {
      q.table = monoid_structure(q, g).table;
    } catch (const Error& e) {
      q.certified = false;
      uncertified(e.what(), {});
    }
  }
  return q;
}

PurityVerdict purity_check(const MisereQuotient& q, const PositionSet& pset) {
  PurityVerdict v;
  for (const auto& k : q.classes) {
    if (k.members.empty()) continue;
    const IntVec& first = k.members.front();
    bool in = pset.contains(first);
    for (const auto& m : k.members) {
      if (pset.contains(m) == in) continue;
      v.pass = false;
      v.witness = {first, m};
      return v;
    }
  }
  return v;
}

MonoidTable monoid_structure(const MisereQuotient& q, const LatticeGame& g) {
  require(g.board.is_monoid(), ErrorCode::kPrecondition, "board is not a monoid");
  std::unordered_map<IntVec, std::size_t, IntVecHash> cls;
  for (std::size_t k = 0; k < q.classes.size(); ++k)
    for (const auto& m : q.classes[k].members) cls.emplace(m, k);
  auto find = [&](const IntVec& p) -> std::optional<std::size_t> {
    auto it = cls.find(p);
    if (it == cls.end()) return std::nullopt;
    return it->second;
  };
  MonoidTable out;
  const std::size_t n = q.classes.size();
  auto id = find(zeros(g.rules.dim));
  require(id.has_value(), ErrorCode::kPrecondition, "origin is not in the quotient window");
  out.identity = *id;
  out.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      IntVec s = add(q.classes[a].rep, q.classes[b].rep);
      auto c = find(s);
      require(c.has_value(), ErrorCode::kGuard, "product of representatives " + to_string(q.classes[a].rep) + " and " +
                                                    to_string(q.classes[b].rep) + " leaves the window");
      out.table[a][b] = *c;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& p : q.classes[a].members)
      for (std::size_t b = 0; b < n; ++b)
        for (const auto& r : q.classes[b].members) {
          auto c = find(add(p, r));
          if (c && *c != out.table[a][b])
            fail(ErrorCode::kPrecondition,
                 "class product is not well defined: witness " + to_string(p) + " " + to_string(r));
        }
  return out;
}

}  // namespace lstrat
