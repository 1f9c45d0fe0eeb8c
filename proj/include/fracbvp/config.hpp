#pragma once

#include <iosfwd>
#include <string>

#include "fracbvp/solver.hpp"

namespace fracbvp {

/// Parsed line-oriented configuration file (`key = value`, `#` comments).
/// Strict thresholds gate exit code 4 under --strict.
struct FileConfig {
  int k = 1;
  double m = 0.0;
  double alpha = 0.5;
  double beta = 1.5;
  double a = 1.0;
  double b = 1.0;
  std::string phi_family = "poly";
  std::vector<double> phi_coefficients = {1.0};
  int phi_index = 1;
  int modes = 20;
  int quad_order = 128;
  int grid_nx = 33;
  int grid_ny = 33;
  double resonance_tol = 0.0;        // 0: scaled default
  double strict_interface_tol = 1e-9;
  double strict_nonlocal_tol = 1e-4;
  double strict_pde_tol = 5e-3;
  double strict_closure_tol = 1e-9;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError on unknown keys, malformed lines or bad values.
FileConfig parse_config(std::istream& in);
FileConfig parse_config_file(const std::string& path);

/// Serialization in the same key = value format; parse(serialize(c)) == c.
std::string serialize_config(const FileConfig& c);

/// Validated ProblemConfig; throws ConfigError on domain violations.
ProblemConfig resolve_config(const FileConfig& c);

}  // namespace fracbvp
