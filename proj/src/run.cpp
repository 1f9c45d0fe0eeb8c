#include "fracbvp/run.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "fracbvp/config.hpp"

namespace fracbvp {

namespace {

int output_precision() {
  const char* env = std::getenv("FRACBVP_OUTPUT_PRECISION");
  if (!env) return 17;
  int p = std::atoi(env);
  return (p >= 6 && p <= 17) ? p : 17;
}

std::string fmt(double v, int prec) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

void write_solution_csv(const std::string& path, const SolutionField& field, int prec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << "x,y,branch,u\n";
  for (size_t r = 0; r < field.rows.size(); ++r) {
    const auto& row = field.rows[r];
    // the interface pair is written at +-1e-9 so the two branch rows stay
    // distinct in the y column; their values are the one-sided limits
    double y = row.y;
    std::string branch;
    if (row.interface) {
      y = row.side == InterfaceSide::upper ? 1e-9 : -1e-9;
      branch = "boundary";
    } else {
      branch = row.side == InterfaceSide::upper ? "+" : "-";
    }
    for (size_t i = 0; i < field.x.size(); ++i)
      out << fmt(field.x[i], prec) << ',' << fmt(y, prec) << ',' << branch << ','
          << fmt(field.u[r][i], prec) << '\n';
  }
}

void write_modes_csv(const std::string& path, const SolutionField& field, int prec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << "n,lambda,phi_n,delta_n,status\n";
  for (size_t n = 0; n < field.diagnostics.size(); ++n) {
    const auto& d = field.diagnostics[n];
    out << (n + 1) << ',' << fmt(d.lambda, prec) << ',' << fmt(d.phi_n, prec) << ','
        << fmt(d.delta_n, prec) << ',' << to_string(d.status) << '\n';
  }
}

void write_report_json(const std::string& path, const VerificationReport& rep,
                       const UniquenessReport& uni, bool strict_pass, bool strict) {
  nlohmann::ordered_json j;
  j["pde_residual_sup"] = rep.pde_residual_sup;
  j["pde_residual_upper"] = rep.pde_residual_upper;
  j["pde_residual_lower"] = rep.pde_residual_lower;
  j["conjugation_value_gap"] = rep.conjugation_value_gap;
  j["conjugation_flux_gap"] = rep.conjugation_flux_gap;
  j["nonlocal_gap_sup"] = rep.nonlocal_gap_sup;
  j["mode_closure_sup"] = rep.mode_closure_sup;
  j["bessel_ok"] = rep.bessel_ok;
  j["coefficient_decay"] = rep.coefficient_decay;
  nlohmann::ordered_json uj;
  uj["delta_limit"] = uni.limit;
  uj["separation_delta"] = uni.separation_delta;
  uj["tolerance"] = uni.tolerance;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : uni.entries) {
    entries.push_back({{"mode", e.mode},
                       {"lambda", e.lambda},
                       {"delta", e.delta},
                       {"flagged", e.flagged}});
  }
  uj["modes"] = entries;
  j["uniqueness"] = uj;
  if (strict) j["strict_pass"] = strict_pass;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace

int run(const RunOptions& options) {
  FileConfig fc;
  ProblemConfig pc;
  try {
    fc = parse_config_file(options.config_path);
    pc = resolve_config(fc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }

  if (options.dry_run) {
    std::cout << serialize_config(fc);
    return 0;
  }

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec || !std::filesystem::is_directory(options.out_dir)) {
    std::cerr << "error: output directory '" << options.out_dir << "' is not writable\n";
    return 3;
  }

  try {
    PreparedProblem prepared = prepare_problem(pc);
    SolutionField field = assemble(prepared);
    VerificationReport rep = verify(prepared, field, options.verify_steps);

    bool strict_pass =
        rep.conjugation_value_gap <= fc.strict_interface_tol &&
        rep.nonlocal_gap_sup <= fc.strict_nonlocal_tol &&
        rep.pde_residual_sup <= fc.strict_pde_tol &&
        rep.mode_closure_sup <= fc.strict_closure_tol && rep.bessel_ok;

    int prec = output_precision();
    auto dir = std::filesystem::path(options.out_dir);
    write_solution_csv((dir / "solution.csv").string(), field, prec);
    write_modes_csv((dir / "modes.csv").string(), field, prec);
    write_report_json((dir / "report.json").string(), rep, prepared.uniqueness,
                      strict_pass, options.strict);

    if (options.strict && !strict_pass) {
      std::cerr << "error: verification thresholds exceeded under --strict\n";
      return 4;
    }
    return 0;
  } catch (const UnsolvableInstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace fracbvp
