#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cli.hpp"

namespace nbcube {

/// Parses argv-style arguments (program name excluded) and runs the
/// selected command. Lives apart from main so tests can drive the full
/// command surface in-process.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"neighbor connectivity of k-ary n-cubes: tables, witnesses, path certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* table = app.add_subcommand("table", "compare the closed-form value with exhaustive search");
  table->add_option("--n", cfg.ns, "n values, e.g. 1..4 or 1,3");
  table->add_option("--k", cfg.ks, "k values, e.g. 2..5");
  table->add_option("--budget", cfg.budget, "largest fault set size the search tries");
  table->add_option("--format", cfg.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--workers", cfg.workers, "search worker threads")
      ->envname("NBCUBE_WORKERS");
  table->add_flag("--no-symmetry", cfg.no_symmetry,
                  "search all fault sets instead of pinning vertex 0");
  table->callback([&] { cfg.command = "table"; });

  CLI::App* witness = app.add_subcommand("witness", "build the pairing fault set that meets ceil(degree/2)");
  witness->add_option("--cube", cfg.cube, "cube as n,k");
  witness->add_option("--group", cfg.group, "abelian group as Z6 or Z3xZ3");
  witness->add_option("--gens", cfg.gens, "generator element ids, comma separated");
  witness->callback([&] { cfg.command = "witness"; });

  CLI::App* paths = app.add_subcommand("paths", "build disjoint healthy paths and certify them");
  paths->add_option("--cube", cfg.cube, "cube as n,k")->required();
  paths->add_option("--faults", cfg.faults, "fault vertex ids, comma separated");
  paths->add_option("--x", cfg.x, "source vertex id")->required();
  paths->add_option("--y", cfg.y, "target vertex id")->required();
  paths->add_option("--out", cfg.out_path, "write the certificate JSON here");
  paths->callback([&] { cfg.command = "paths"; });

  CLI::App* verify = app.add_subcommand("verify", "re-check a path certificate from scratch");
  verify->add_option("certificate", cfg.input, "certificate JSON file")->required();
  verify->callback([&] { cfg.command = "verify"; });

  CLI::App* lemmas = app.add_subcommand("check-lemmas", "exhaustively test the counting laws on one cube");
  lemmas->add_option("--cube", cfg.cube, "cube as n,k")->required();
  lemmas->add_option("--lmax", cfg.lmax, "largest fault set size to sweep");
  lemmas->callback([&] { cfg.command = "check-lemmas"; });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace nbcube
