#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"
#include "lstrat/io.hpp"

int main(int argc, char** argv) {
  using lstrat::cli::CommandRequest;
  CLI::App app{"lstrat: lattice games, misere quotients and affine stratifications"};
  app.require_subcommand(1);
  CommandRequest req;
  std::string out, report;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", out, "write the artifact here instead of stdout");
    c->add_option("--report", report, "write a JSON run report here");
  };
  auto game_opts = [&](CLI::App* c, bool quotient) {
    c->add_option("--game", req.game, "game JSON")->required();
    c->add_option("--threshold", req.threshold, "window threshold on the functional (default 20)");
    if (quotient) c->add_option("--delta", req.delta, "stabilization step (default 10)");
  };
  auto fiber_opts = [&](CLI::App* c, bool required) {
    auto* m = c->add_option("--monoid", req.monoid, "finite commutative monoid JSON");
    auto* p = c->add_option("--morphism", req.morphism, "generator images JSON");
    auto* e = c->add_option("--element", req.element, "monoid element whose fiber is wanted");
    if (required) m->required(), p->required(), e->required();
  };

  auto* solve = app.add_subcommand("solve", "P-positions up to a threshold");
  game_opts(solve, false);
  auto* quotient = app.add_subcommand("quotient", "detect and certify the misere quotient");
  game_opts(quotient, true);
  auto* strat = app.add_subcommand("stratify-game", "affine stratification of the P-positions");
  game_opts(strat, true);
  auto* fiber = app.add_subcommand("fiber", "fiber of a monoid morphism as a stratification");
  fiber_opts(fiber, true);
  fiber->add_option("--generators", req.generators, "map the fiber into the semigroup these generate");
  auto* conv = app.add_subcommand("convert", "rewrite a stratification in another form");
  conv->add_option("--strata", req.strata, "stratification JSON")->required();
  conv->add_option("--form", req.form, "target form 1-6")->required();
  auto* ver = app.add_subcommand("verify", "check a stratification against a game or a fiber");
  ver->add_option("--strata", req.strata, "stratification JSON")->required();
  ver->add_option("--game", req.game, "game JSON");
  ver->add_option("--threshold", req.threshold, "window threshold for --game (default 20)");
  fiber_opts(ver, false);
  ver->add_option("--window", req.window, "box [0, W]^n for fibers (default 30)");
  for (auto* c : {solve, quotient, strat, fiber, conv, ver}) add_common(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  req.command = app.get_subcommands().front()->get_name();

  auto r = lstrat::cli::run(req);
  try {
    if (!r.artifact.empty()) {
      if (out.empty())
        std::cout << r.artifact;
      else
        lstrat::io::write_file(out, r.artifact);
    }
    if (!report.empty()) lstrat::io::write_file(report, r.json);
  } catch (const lstrat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << r.summary << "\n";
  return r.exit_code;
}
