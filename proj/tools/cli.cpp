#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <nlohmann/json.hpp>

#include "lstrat/io.hpp"

namespace lstrat::cli {

namespace {

using ojson = nlohmann::ordered_json;

template <class T>
const T& need(const std::optional<T>& v, const std::string& flag, const std::string& command) {
  if (!v) fail(ErrorCode::kPrecondition, command + " requires " + flag);
  return *v;
}

Int capped_threshold(const std::optional<Int>& t, Int fallback, const Limits& limits, const std::string& flag) {
  Int v = t.value_or(fallback);
  require(v >= 0, ErrorCode::kPrecondition, flag + " must be nonnegative");
  require(v <= limits.max_threshold, ErrorCode::kGuard,
          flag + " " + std::to_string(v) + " exceeds LSTRAT_MAX_THRESHOLD=" + std::to_string(limits.max_threshold));
  return v;
}

ojson points_json(const std::vector<IntVec>& pts) {
  ojson a = ojson::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

ojson verify_json(const VerifyReport& r) {
  ojson j;
  j["pass"] = r.pass();
  j["disjoint"] = r.disjointness.disjoint;
  j["equal"] = r.equal;
  j["points_checked"] = r.points_checked;
  j["missing"] = points_json(r.missing);
  j["extra"] = points_json(r.extra);
  if (r.disjointness.failure) {
    const auto& f = *r.disjointness.failure;
    ojson o;
    o["first"] = f.first;
    o["second"] = f.second;
    if (f.witness) o["witness"] = *f.witness;
    j["overlap"] = o;
  }
  return j;
}

std::string verify_summary(const VerifyReport& r) {
  if (r.pass()) return "verified " + std::to_string(r.points_checked) + " points";
  if (!r.disjointness.disjoint) return "strata overlap";
  std::string s = "mismatch: " + std::to_string(r.missing.size()) + " missing, " + std::to_string(r.extra.size()) + " extra";
  if (!r.missing.empty()) s += ", first missing " + to_string(r.missing.front());
  if (!r.extra.empty()) s += ", first extra " + to_string(r.extra.front());
  return s;
}

// Integer points of the bounding box of the window that lie in it.
std::vector<IntVec> window_box(const LatticeGame& g, Int t) {
  auto inside = window_positions(g, t);
  std::vector<IntVec> points;
  if (inside.empty()) return points;
  const std::size_t d = g.rules.dim;
  IntVec lo = inside.front(), hi = inside.front();
  for (const auto& p : inside)
    for (std::size_t i = 0; i < d; ++i) lo[i] = std::min(lo[i], p[i]), hi[i] = std::max(hi[i], p[i]);
  IntVec x = lo;
  while (true) {
    if (g.rules.value(x) <= t) points.push_back(x);
    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == d) break;
    ++x[i];
  }
  return points;
}

MonoidMorphism load_morphism(const CommandRequest& req) {
  auto q = io::parse_monoid(io::read_file(need(req.monoid, "--monoid", req.command)));
  return io::parse_morphism(io::read_file(need(req.morphism, "--morphism", req.command)), q);
}

QuotientPolicy policy(const CommandRequest& req, const Limits& limits) {
  QuotientPolicy p;
  p.threshold = capped_threshold(req.threshold, 20, limits, "--threshold");
  p.delta = req.delta.value_or(10);
  require(p.delta > 0, ErrorCode::kPrecondition, "--delta must be positive");
  p.max_escalations = limits.max_escalations;
  require(p.threshold + p.delta * (p.max_escalations + 1) <= limits.max_threshold || p.max_escalations == 0,
          ErrorCode::kGuard, "escalated window would exceed LSTRAT_MAX_THRESHOLD");
  return p;
}

void solve(const CommandRequest& req, const Limits& limits, Report& r, ojson& d) {
  auto g = io::parse_game(io::read_file(need(req.game, "--game", req.command)));
  Int t = capped_threshold(req.threshold, 20, limits, "--threshold");
  auto p = solve_p_positions(g, t);
  r.artifact = io::write_positions(p, g.rules.functional);
  r.summary = std::to_string(p.members.size()) + " P-positions with value <= " + std::to_string(t);
  d["threshold"] = t;
  d["count"] = p.members.size();
}

void quotient(const CommandRequest& req, const Limits& limits, Report& r, ojson& d) {
  auto g = io::parse_game(io::read_file(need(req.game, "--game", req.command)));
  auto q = build_quotient(g, policy(req, limits));
  r.artifact = io::write_quotient(q);
  d["classes"] = q.classes.size();
  d["window"] = q.window;
  d["stabilized"] = q.stabilized;
  d["certified"] = q.certified;
  d["note"] = q.note;
  d["witness"] = points_json(q.witness);
  if (q.certified) {
    r.summary = "certified quotient with " + std::to_string(q.classes.size()) + " classes at window " +
                std::to_string(q.window);
  } else {
    r.exit_code = 1;
    r.summary = "quotient not certified: " + q.note;
  }
}

void stratify_game(const CommandRequest& req, const Limits& limits, Report& r, ojson& d) {
  auto g = io::parse_game(io::read_file(need(req.game, "--game", req.command)));
  auto q = build_quotient(g, policy(req, limits));
  d["window"] = q.window;
  d["certified"] = q.certified;
  if (!q.certified) {
    r.exit_code = 1;
    r.summary = "quotient not certified: " + q.note;
    d["note"] = q.note;
    d["witness"] = points_json(q.witness);
    return;
  }
  auto s = game_stratify(g, q);
  r.artifact = io::write_stratification(s.strata);
  d["strata"] = s.strata.strata.size();
  d["action_monoid"] = s.action_monoid.size();
  d["verify"] = verify_json(s.report);
  r.exit_code = s.report.pass() ? 0 : 1;
  r.summary = std::to_string(s.strata.strata.size()) + " strata; " + verify_summary(s.report);
}

void fiber(const CommandRequest& req, const Limits&, Report& r, ojson& d) {
  auto phi = load_morphism(req);
  std::size_t q = need(req.element, "--element", req.command);
  require(q < phi.target.size(), ErrorCode::kPrecondition, "--element out of range");
  FiberStratification f;
  if (req.generators) {
    std::size_t dim = 0;
    auto gens = io::parse_generators(io::read_file(*req.generators), &dim);
    f = semigroup_fiber_stratify(gens, dim, phi, q);
  } else {
    f = fiber_stratify(phi, q);
  }
  r.artifact = io::write_stratification(f.strata);
  d["in_image"] = f.in_image;
  d["strata"] = f.strata.strata.size();
  r.summary = f.in_image ? std::to_string(f.strata.strata.size()) + " strata in the fiber of " + std::to_string(q)
                         : "element " + std::to_string(q) + " is not in the image";
}

void convert_cmd(const CommandRequest& req, const Limits&, Report& r, ojson& d) {
  auto s = io::parse_stratification(io::read_file(need(req.strata, "--strata", req.command)));
  int form = need(req.form, "--form", req.command);
  require(form >= 1 && form <= 6, ErrorCode::kPrecondition, "--form must be between 1 and 6");
  auto out = convert(s, form);
  std::string why;
  require(check_form(out, &why), ErrorCode::kInternal, "converted output fails its form check: " + why);
  r.artifact = io::write_stratification(out);
  d["form"] = form;
  d["strata"] = out.strata.size();
  r.summary = "form " + std::to_string(form) + " with " + std::to_string(out.strata.size()) + " strata";
}

void verify_cmd(const CommandRequest& req, const Limits& limits, Report& r, ojson& d) {
  auto s = io::parse_stratification(io::read_file(need(req.strata, "--strata", req.command)));
  VerifyReport rep;
  if (req.game) {
    auto g = io::parse_game(io::read_file(*req.game));
    require(g.rules.dim == s.dim, ErrorCode::kDimensionMismatch, "stratification and game dimensions differ");
    Int t = capped_threshold(req.threshold, 20, limits, "--threshold");
    auto p = solve_p_positions(g, t);
    rep = verify_points(s, [&](const IntVec& x) { return p.contains(x); }, window_box(g, t));
    d["against"] = "game";
    d["threshold"] = t;
  } else if (req.monoid || req.morphism) {
    require(!req.generators, ErrorCode::kPrecondition, "verify supports fibers over N^n only");
    auto phi = load_morphism(req);
    std::size_t q = need(req.element, "--element", req.command);
    require(s.dim == phi.n(), ErrorCode::kDimensionMismatch, "stratification and morphism dimensions differ");
    Int w = capped_threshold(req.window, 30, limits, "--window");
    auto inside = [&](const IntVec& x) {
      for (auto v : x)
        if (v < 0) return false;
      return phi.eval(x) == q;
    };
    rep = verify(s, inside, {IntVec(s.dim, -1), IntVec(s.dim, w)});
    d["against"] = "fiber";
    d["window"] = w;
  } else {
    fail(ErrorCode::kPrecondition, "verify requires --game or --monoid with --morphism");
  }
  d["verify"] = verify_json(rep);
  r.exit_code = rep.pass() ? 0 : 1;
  r.summary = verify_summary(rep);
}

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kGuard: return "guard";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

template <class T>
std::optional<T> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  long long x = std::strtoll(v, &end, 10);
  if (*end != '\0' || x < 0) return std::nullopt;
  return static_cast<T>(x);
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kPrecondition:
      return 2;
    default:
      return 1;
  }
}

Limits limits_from_env() {
  Limits l;
  if (auto t = env_number<Int>("LSTRAT_MAX_THRESHOLD")) l.max_threshold = *t;
  if (auto e = env_number<int>("LSTRAT_MAX_ESCALATIONS")) l.max_escalations = *e;
  return l;
}

Report run(const CommandRequest& req, const Limits& limits) {
  Report r;
  ojson details = ojson::object();
  ojson j;
  j["command"] = req.command;
  auto start = std::chrono::steady_clock::now();
  try {
    if (req.command == "solve")
      solve(req, limits, r, details);
    else if (req.command == "quotient")
      quotient(req, limits, r, details);
    else if (req.command == "stratify-game")
      stratify_game(req, limits, r, details);
    else if (req.command == "fiber")
      fiber(req, limits, r, details);
    else if (req.command == "convert")
      convert_cmd(req, limits, r, details);
    else if (req.command == "verify")
      verify_cmd(req, limits, r, details);
    else
      fail(ErrorCode::kPrecondition, "unknown command " + req.command);
    j["status"] = r.exit_code == 0 ? "ok" : "fail";
  } catch (const Error& e) {
    r.exit_code = exit_code_for(e.code());
    r.artifact.clear();
    r.summary = std::string("error: ") + e.what();
    j["status"] = "error";
    j["error"] = {{"code", code_name(e.code())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.artifact.clear();
    r.summary = std::string("error: ") + e.what();
    j["status"] = "error";
    j["error"] = {{"code", "internal"}, {"message", e.what()}};
  }
  j["exit_code"] = r.exit_code;
  j["summary"] = r.summary;
  j["details"] = details;
  j["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.json = j.dump(2) + "\n";
  return r;
}

}  // namespace lstrat::cli
