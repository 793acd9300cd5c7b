#include <CLI11.hpp>

#include "vortex/cli/cli.hpp"

namespace vortex::cli {

std::string to_string(Verb verb) {
  switch (verb) {
    case Verb::chambers: return "chambers";
    case Verb::strata: return "strata";
    case Verb::wall_report: return "wall-report";
    case Verb::flip_chain: return "flip-chain";
    case Verb::pair_eval: return "pair-eval";
    case Verb::poincare: return "poincare";
  }
  return "chambers";
}

Command parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact calculator for walls, strata and flips of tau-stable pair moduli", "vortexcalc"};
  app.set_version_flag("--version", "vortexcalc 0.1.0");
  app.set_config("--config", "", "Plain key=value file; explicit flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Command cmd;
  std::string verb;
  std::string wall;
  std::string format = "json";
  std::string kind = "sym";

  const std::map<std::string, Verb> verbs{{"chambers", Verb::chambers},     {"strata", Verb::strata},
                                          {"wall-report", Verb::wall_report}, {"flip-chain", Verb::flip_chain},
                                          {"pair-eval", Verb::pair_eval},   {"poincare", Verb::poincare}};
  app.add_option("verb", verb, "chambers | strata | wall-report | flip-chain | pair-eval | poincare")
      ->required()
      ->check(CLI::IsMember({"chambers", "strata", "wall-report", "flip-chain", "pair-eval", "poincare"}))
      ->configurable(false);
  app.add_option("-R,--rank", cmd.input.rank, "Rank R >= 2")->check(CLI::Range(2, 1000));
  app.add_option("-d,--degree", cmd.input.degree, "Degree d");
  app.add_option("-g,--genus", cmd.input.genus, "Genus g >= 2")->check(CLI::Range(2, 1000));
  app.add_flag("--fixed-det", cmd.input.fixed_det, "Fix the determinant line bundle");
  app.add_flag("--allow-low-degree", cmd.input.allow_low_degree, "Permit d <= R(2g-2)");
  app.add_option("--wall", wall, "Critical value p/q");
  app.add_option("--pair", cmd.pair_file, "JSON file holding a formal pair");
  app.add_option("--format", format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("-o,--output", cmd.output, "Write the report here instead of stdout");
  app.add_option("--kind", kind, "poincare: sym | jac | proj")->check(CLI::IsMember({"sym", "jac", "proj"}));
  app.add_option("-n", cmd.poincare_n, "poincare: symmetric power or projective dimension")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested("vortexcalc 0.1.0\n");
  } catch (const CLI::Success&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cmd.verb = verbs.at(verb);
  cmd.format = format == "markdown" ? Format::markdown : Format::json;
  cmd.poincare_kind = kind == "jac" ? PoincareKind::jac : kind == "proj" ? PoincareKind::proj : PoincareKind::sym;

  if (!wall.empty()) {
    try {
      cmd.wall = Rational::parse(wall);
    } catch (const Error& e) {
      throw UsageError(std::string("--wall: ") + e.what());
    }
  }
  if ((cmd.verb == Verb::strata || cmd.verb == Verb::wall_report) && !cmd.wall) {
    throw UsageError(to_string(cmd.verb) + " requires --wall");
  }
  if (cmd.verb == Verb::pair_eval && !cmd.pair_file) throw UsageError("pair-eval requires --pair");
  if (cmd.verb == Verb::flip_chain && cmd.input.rank != 2) throw UsageError("flip-chain requires R = 2");
  return cmd;
}

}  // namespace vortex::cli
