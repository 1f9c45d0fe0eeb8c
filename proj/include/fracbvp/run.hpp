#pragma once

#include <string>

namespace fracbvp {

struct RunOptions {
  std::string config_path;
  std::string out_dir = ".";
  bool strict = false;
  bool dry_run = false;
  int verify_steps = 4096;
};

/// Exit-code contract:
///   0 success, 2 resonant-unsolvable instance,
///   3 configuration/setup error, 4 verification threshold failure (--strict).
/// Writes solution.csv, modes.csv, report.json into out_dir.
/// Errors print one machine-parsable line "error: <reason>" on stderr.
/// Fully deterministic: no randomness anywhere in the pipeline.
int run(const RunOptions& options);

}  // namespace fracbvp
