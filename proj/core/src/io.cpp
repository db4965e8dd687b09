#include "lstrat/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace lstrat::io {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& what) { fail(ErrorCode::kParse, path + ": " + what); }

json parse_doc(const std::string& text, const std::string& kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, kind + ": " + e.what());
  }
  if (!j.is_object()) bad(kind, "expected a JSON object");
  if (!j.contains("version")) bad(kind + ".version", "missing schema version");
  if (!j["version"].is_number_integer() || j["version"].get<Int>() != kSchemaVersion)
    bad(kind + ".version", "unsupported schema version " + j["version"].dump());
  return j;
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) bad(path + "." + key, "missing field");
  return j.at(key);
}

Int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<Int>();
}

std::size_t as_size(const json& j, const std::string& path) {
  Int v = as_int(j, path);
  if (v < 0) bad(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<Int>()));
  if (!j.is_string()) bad(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

IntVec as_point(const json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) bad(path, "expected an array of integers");
  if (j.size() != dim) bad(path, "expected " + std::to_string(dim) + " coordinates");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<IntVec> as_points(const json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) bad(path, "expected an array of points");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_point(j[i], path + "[" + std::to_string(i) + "]", dim));
  return out;
}

std::vector<std::size_t> as_indices(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_size(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Table as_table(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of rows");
  Table t;
  for (std::size_t i = 0; i < j.size(); ++i) t.push_back(as_indices(j[i], path + "[" + std::to_string(i) + "]"));
  return t;
}

ojson points_json(const std::vector<IntVec>& pts) {
  ojson a = ojson::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

const char* rel_name(Relation r) {
  switch (r) {
    case Relation::kGe: return ">=";
    case Relation::kGt: return ">";
    case Relation::kEq: return "=";
  }
  return ">=";
}

Polyhedron parse_polyhedron(const json& j, const std::string& path, std::size_t dim) {
  if (j.is_string()) {
    if (j.get<std::string>() != "orthant") bad(path, "unknown polyhedron shorthand");
    Polyhedron p(dim);
    for (std::size_t i = 0; i < dim; ++i) p.add(make_halfspace(unit(dim, i), 0));
    return p;
  }
  std::size_t d = as_size(field(j, "dim", path), path + ".dim");
  if (d != dim) bad(path + ".dim", "differs from the game dimension");
  const json& cs = field(j, "constraints", path);
  if (!cs.is_array()) bad(path + ".constraints", "expected an array");
  Polyhedron p(d);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string at = path + ".constraints[" + std::to_string(i) + "]";
    const json& n = field(cs[i], "normal", at);
    if (!n.is_array() || n.size() != d) bad(at + ".normal", "expected " + std::to_string(d) + " rationals");
    RatVec normal;
    for (std::size_t k = 0; k < d; ++k) normal.push_back(as_rational(n[k], at + ".normal[" + std::to_string(k) + "]"));
    Rational bound = as_rational(field(cs[i], "bound", at), at + ".bound");
    std::string rel = cs[i].contains("rel") ? as_string(cs[i]["rel"], at + ".rel") : ">=";
    Relation r = Relation::kGe;
    if (rel == ">")
      r = Relation::kGt;
    else if (rel == "=")
      r = Relation::kEq;
    else if (rel != ">=")
      bad(at + ".rel", "expected \">=\", \">\" or \"=\"");
    p.add({normal, bound, r});
  }
  return p;
}

ojson polyhedron_json(const Polyhedron& p) {
  ojson cs = ojson::array();
  for (const auto& h : p.constraints()) {
    ojson n = ojson::array();
    for (const auto& x : h.normal) n.push_back(to_string(x));
    cs.push_back({{"normal", n}, {"bound", to_string(h.bound)}, {"rel", rel_name(h.rel)}});
  }
  return {{"dim", p.dim()}, {"constraints", cs}};
}

ojson header() { return {{"version", kSchemaVersion}}; }

std::string finish(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kParse, path + ": cannot write file");
  out << text;
}

LatticeGame parse_game(const std::string& text) {
  json j = parse_doc(text, "game");
  const json& rules = field(j, "rules", "game");
  std::size_t d = as_size(field(rules, "dim", "game.rules"), "game.rules.dim");
  auto moves = as_points(field(rules, "moves", "game.rules"), "game.rules.moves", d);
  const json& board = field(j, "board", "game");
  GameBoard b{parse_polyhedron(field(board, "ambient", "game.board"), "game.board.ambient", d), {}};
  if (board.contains("defeated")) b.defeated = as_points(board["defeated"], "game.board.defeated", d);
  std::optional<std::vector<IntVec>> ends;
  if (j.contains("endpoints")) ends = as_points(j["endpoints"], "game.endpoints", d);
  Int t_check = j.contains("check_threshold") ? as_int(j["check_threshold"], "game.check_threshold") : 40;
  return make_game(moves, std::move(b), ends, t_check);
}

std::string write_game(const LatticeGame& g) {
  ojson j = header();
  j["rules"] = {{"dim", g.rules.dim}, {"moves", points_json(g.rules.moves)}, {"functional", g.rules.functional}};
  j["board"] = {{"ambient", polyhedron_json(g.board.ambient)}, {"defeated", points_json(g.board.defeated)}};
  j["endpoints"] = points_json(g.endpoints);
  j["check_threshold"] = g.checked_up_to;
  return finish(j);
}

PositionSet parse_positions(const std::string& text) {
  json j = parse_doc(text, "positions");
  Int t = as_int(field(j, "threshold", "positions"), "positions.threshold");
  const json& f = field(j, "functional", "positions");
  if (!f.is_array()) bad("positions.functional", "expected an array of integers");
  IntVec c = as_point(f, "positions.functional", f.size());
  auto pts = as_points(field(j, "positions", "positions"), "positions.positions", c.size());
  auto value = [&](const IntVec& p) { return dot(c, p); };
  std::sort(pts.begin(), pts.end(), [&](const IntVec& a, const IntVec& b) {
    Int va = value(a), vb = value(b);
    return va != vb ? va < vb : a < b;
  });
  return make_position_set(t, std::move(pts));
}

std::string write_positions(const PositionSet& s, const IntVec& functional) {
  ojson j = header();
  j["threshold"] = s.threshold;
  j["functional"] = functional;
  j["positions"] = points_json(sorted_lex(s));
  return finish(j);
}

MisereQuotient parse_quotient(const std::string& text) {
  json j = parse_doc(text, "quotient");
  MisereQuotient q;
  q.window = as_int(field(j, "window", "quotient"), "quotient.window");
  q.radius = as_int(field(j, "radius", "quotient"), "quotient.radius");
  const json& gens = field(j, "generators", "quotient");
  std::size_t d = gens.is_array() && !gens.empty() && gens[0].is_array() ? gens[0].size() : 0;
  q.generators = as_points(gens, "quotient.generators", d);
  const json& cls = field(j, "classes", "quotient");
  if (!cls.is_array()) bad("quotient.classes", "expected an array");
  for (std::size_t i = 0; i < cls.size(); ++i) {
    std::string at = "quotient.classes[" + std::to_string(i) + "]";
    QuotientClass k;
    k.rep = as_point(field(cls[i], "rep", at), at + ".rep", d);
    k.members = as_points(field(cls[i], "members_window", at), at + ".members_window", d);
    k.is_p = as_bool(field(cls[i], "is_p", at), at + ".is_p");
    q.classes.push_back(std::move(k));
  }
  q.action = as_table(field(j, "action", "quotient"), "quotient.action");
  q.seeds = as_points(field(j, "seeds", "quotient"), "quotient.seeds", d);
  q.seed_class = as_indices(field(j, "seed_class", "quotient"), "quotient.seed_class");
  if (j.contains("table")) q.table = as_table(j["table"], "quotient.table");
  q.stabilized = as_bool(field(j, "stabilized", "quotient"), "quotient.stabilized");
  q.certified = as_bool(field(j, "certified", "quotient"), "quotient.certified");
  if (j.contains("note")) q.note = as_string(j["note"], "quotient.note");
  if (j.contains("witness")) q.witness = as_points(j["witness"], "quotient.witness", d);
  const std::size_t k = q.classes.size();
  if (q.seed_class.size() != q.seeds.size()) bad("quotient.seed_class", "one class per seed is required");
  for (auto c : q.seed_class)
    if (c >= k) bad("quotient.seed_class", "class index out of range");
  if (q.action.size() != k) bad("quotient.action", "one row per class is required");
  for (const auto& row : q.action) {
    if (row.size() != q.generators.size()) bad("quotient.action", "one entry per generator is required");
    for (auto c : row)
      if (c >= k) bad("quotient.action", "class index out of range");
  }
  return q;
}

std::string write_quotient(const MisereQuotient& q) {
  ojson j = header();
  j["window"] = q.window;
  j["radius"] = q.radius;
  j["certified"] = q.certified;
  j["stabilized"] = q.stabilized;
  ojson cls = ojson::array();
  for (const auto& k : q.classes)
    cls.push_back({{"rep", k.rep}, {"members_window", points_json(k.members)}, {"is_p", k.is_p}});
  j["classes"] = cls;
  if (q.table) j["table"] = *q.table;
  j["generators"] = points_json(q.generators);
  j["action"] = q.action;
  j["seeds"] = points_json(q.seeds);
  j["seed_class"] = q.seed_class;
  j["note"] = q.note;
  j["witness"] = points_json(q.witness);
  return finish(j);
}

AffineStratification parse_stratification(const std::string& text) {
  json j = parse_doc(text, "stratification");
  AffineStratification s;
  s.dim = as_size(field(j, "dim", "stratification"), "stratification.dim");
  s.form = static_cast<int>(as_int(field(j, "form", "stratification"), "stratification.form"));
  if (s.form < 1 || s.form > 6) bad("stratification.form", "expected a form between 1 and 6");
  s.disjoint = as_bool(field(j, "disjoint", "stratification"), "stratification.disjoint");
  const json& st = field(j, "strata", "stratification");
  if (!st.is_array()) bad("stratification.strata", "expected an array");
  for (std::size_t i = 0; i < st.size(); ++i) {
    std::string at = "stratification.strata[" + std::to_string(i) + "]";
    auto translates = as_points(field(st[i], "translates", at), at + ".translates", s.dim);
    if (translates.empty()) bad(at + ".translates", "at least one translate is required");
    auto gens = as_points(field(st[i], "generators", at), at + ".generators", s.dim);
    bool normal = st[i].contains("normal") ? as_bool(st[i]["normal"], at + ".normal") : false;
    AffineSemigroup a(s.dim, gens);
    if (!a.is_pointed()) bad(at + ".generators", "semigroup is not pointed");
    s.strata.push_back({std::move(translates), std::move(a), normal});
  }
  return s;
}

std::string write_stratification(const AffineStratification& s) {
  ojson j = header();
  j["dim"] = s.dim;
  j["form"] = s.form;
  j["disjoint"] = s.disjoint;
  ojson st = ojson::array();
  for (const auto& x : s.strata)
    st.push_back({{"translates", points_json(x.translates)},
                  {"generators", points_json(x.semigroup.gens())},
                  {"normal", x.normal}});
  j["strata"] = st;
  return finish(j);
}

FiniteCommMonoid parse_monoid(const std::string& text) {
  json j = parse_doc(text, "monoid");
  std::size_t m = as_size(field(j, "size", "monoid"), "monoid.size");
  Table t = as_table(field(j, "table", "monoid"), "monoid.table");
  if (t.size() != m) bad("monoid.table", "expected " + std::to_string(m) + " rows");
  std::size_t id = as_size(field(j, "identity", "monoid"), "monoid.identity");
  try {
    return FiniteCommMonoid(std::move(t), id);
  } catch (const Error& e) {
    bad("monoid.table", e.what());
  }
}

std::string write_monoid(const FiniteCommMonoid& m) {
  ojson j = header();
  j["size"] = m.size();
  j["table"] = m.table();
  j["identity"] = m.identity();
  return finish(j);
}

MonoidMorphism parse_morphism(const std::string& text, const FiniteCommMonoid& target) {
  json j = parse_doc(text, "morphism");
  std::size_t n = as_size(field(j, "n", "morphism"), "morphism.n");
  auto images = as_indices(field(j, "images", "morphism"), "morphism.images");
  if (images.size() != n) bad("morphism.images", "expected " + std::to_string(n) + " images");
  for (std::size_t i = 0; i < n; ++i)
    if (images[i] >= target.size()) bad("morphism.images[" + std::to_string(i) + "]", "element out of range");
  return {target, images};
}

std::string write_morphism(const MonoidMorphism& phi) {
  ojson j = header();
  j["n"] = phi.n();
  j["images"] = phi.images;
  return finish(j);
}

std::vector<IntVec> parse_generators(const std::string& text, std::size_t* dim) {
  json j = parse_doc(text, "generators");
  std::size_t d = as_size(field(j, "dim", "generators"), "generators.dim");
  if (dim) *dim = d;
  return as_points(field(j, "generators", "generators"), "generators.generators", d);
}

std::string write_generators(const std::vector<IntVec>& gens, std::size_t dim) {
  ojson j = header();
  j["dim"] = dim;
  j["generators"] = points_json(gens);
  return finish(j);
}

}  // namespace lstrat::io
