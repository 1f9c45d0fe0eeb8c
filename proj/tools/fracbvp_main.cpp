#include <CLI11.hpp>

#include "fracbvp/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "fracbvp: series solution of a nonlocal conjugation problem for a "
      "degenerate even-order equation with Caputo fractional derivatives"};

  fracbvp::RunOptions options;
  bool seedless = false;
  app.add_option("--config", options.config_path, "configuration file (key = value lines)")
      ->required();
  app.add_option("--out", options.out_dir, "output directory for solution.csv, modes.csv, report.json");
  app.add_flag("--strict", options.strict, "exit 4 when verification thresholds are exceeded");
  app.add_flag("--dry-run", options.dry_run, "parse, print the resolved config, write nothing");
  app.add_option("--verify-steps", options.verify_steps, "Caputo oracle mesh size (>= 64)")
      ->check(CLI::Range(64, 1 << 20));
  app.add_flag("--seedless", seedless,
               "accepted for compatibility; the pipeline is deterministic and uses no randomness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }
  return fracbvp::run(options);
}
