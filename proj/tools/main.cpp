#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "experiments.hpp"

using namespace holo;
using namespace holo::exp;

namespace {

void add_group_options(CLI::App *cmd, RunConfig &cfg, std::string &strategy)
{
  cmd->add_option("--preset", cfg.preset, "gp, hp, free_c2_exp_p (free), abelian")
    ->capture_default_str();
  cmd->add_option("-p,--prime", cfg.p, "odd prime")->capture_default_str();
  cmd->add_option("-n,--rank", cfg.rank, "rank for the free preset")->capture_default_str();
  cmd->add_option("--factors", cfg.factors, "invariant factors for the abelian preset")
    ->delimiter(',');
  cmd->add_option("--file", cfg.file, "presentation file (JSON), overrides --preset")
    ->check(CLI::ExistingFile);
  cmd->add_option("--strategy", strategy, "auto, generic, delta, both")->capture_default_str();
}

void emit(const nlohmann::json &j, const std::string &out)
{
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f)
    raise(ErrorKind::InvalidArgument, "cannot write " + out);
  f << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Multiple holomorphs of finite class-two p-groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string strategy = "auto";
  if (const char *dir = std::getenv("HOLO_CACHE_DIR"))
    cfg.cache_dir = dir;
  app.add_option("--cap", cfg.order_cap, "largest group order to build")->capture_default_str();
  app.add_option("--budget", cfg.budget, "search node budget")->capture_default_str();
  app.add_option("--cache", cfg.cache_dir, "Aut(G) cache directory (default $HOLO_CACHE_DIR)");
  app.add_option("--out", cfg.out, "write JSON here instead of stdout");

  auto *build = app.add_subcommand("build", "build G and print its invariants");
  auto *jc = app.add_subcommand("jc", "regular subgroups of Hol(G) normalised by Hol(G)");
  auto *hc = app.add_subcommand("hc", "members of J(G) isomorphic to G");
  auto *tg = app.add_subcommand("tgroup", "structure of NHol(G)/Hol(G)");
  for (auto *c : {build, jc, hc, tg})
    add_group_options(c, cfg, strategy);

  auto *repro = app.add_subcommand("repro", "recompute the tabulated values");
  std::vector<std::string> suites;
  bool as_json = false;
  repro->add_option("suite", suites, "gp, hp, free, powers, big-delta-dim, abelian or all")
    ->required();
  repro->add_flag("--json", as_json, "JSON lines instead of a table");
  repro->add_flag("--with-p7", cfg.with_p7, "include p = 7 in the gp suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    cfg.strategy = parse_strategy(strategy);
    if (repro->parsed()) {
      if (suites.size() == 1 && suites[0] == "all")
        suites = suite_names();
      bool all_match = true;
      nlohmann::json lines = nlohmann::json::array();
      for (auto const &s : suites)
        for (auto const &r : run_suite(s, cfg, std::cerr)) {
          all_match = all_match && r.match;
          if (as_json || !cfg.out.empty())
            lines.push_back(to_json(r));
          if (as_json && cfg.out.empty())
            std::cout << to_json(r).dump() << "\n";
          else if (!as_json)
            std::cout << (r.match ? "ok    " : "DIFF  ") << std::left << std::setw(44) << r.check
                      << " expected " << r.expected.dump() << ", computed " << r.computed.dump()
                      << "  (" << r.claim << ")\n";
        }
      if (!cfg.out.empty())
        emit(lines, cfg.out);
      return all_match ? 0 : exit_code(ErrorKind::MismatchFound);
    }
    nlohmann::json j;
    if (build->parsed())
      j = cmd_build(cfg, std::cerr);
    else if (jc->parsed())
      j = cmd_jc(cfg, std::cerr);
    else if (hc->parsed())
      j = cmd_hc(cfg, std::cerr);
    else
      j = cmd_tgroup(cfg, std::cerr);
    emit(j, cfg.out);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
