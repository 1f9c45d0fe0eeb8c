#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracbvp/phi.hpp"
#include "fracbvp/spectral.hpp"
#include "fracbvp/temporal.hpp"

namespace fracbvp {

/// Full problem instance.
struct ProblemConfig {
  GreenSpec spec;
  TemporalConfig temporal;
  PhiSpec phi;
  int modes = 20;
  int quad_order = 128;
  int grid_nx = 33;
  int grid_ny = 33;
  double resonance_tol = 0.0;  // 0: use resonance_tolerance(temporal)

  void validate() const;
};

/// Basis, per-mode temporal solves and diagnostics, computed once and shared
/// by assembly, verification and the CLI writers. Immutable after prepare.
struct PreparedProblem {
  ProblemConfig config;
  EigenBasis basis;
  std::vector<ModeSolution> modes;
  UniquenessReport uniqueness;
  std::function<double(double)> phi;
  std::optional<PowerSum> phi_symbolic;
};

/// Raised by assemble when a resonant-unsolvable mode is present
/// (the orthogonality condition of the solvability remark is violated).
class UnsolvableInstanceError : public std::runtime_error {
 public:
  UnsolvableInstanceError(std::string msg, std::vector<int> modes_in)
      : std::runtime_error(std::move(msg)), modes(std::move(modes_in)) {}
  std::vector<int> modes;  // offending 1-based mode indices
};

PreparedProblem prepare_problem(const ProblemConfig& config);

/// Truncated series u(x,y) on the rectangular grid. The interface appears as
/// two rows evaluated through the lower and the upper branch respectively;
/// value continuity of the conjugation condition is the equality of those
/// rows. Rows run from y = -a to y = b.
struct SolutionField {
  struct Row {
    double y;
    InterfaceSide side;     // which branch evaluated this row
    bool interface = false; // one of the +-0 pair
  };
  std::vector<double> x;                  // size nx, x[0] = 0, x[nx-1] = 1
  std::vector<Row> rows;
  std::vector<std::vector<double>> u;     // [row][col]
  int modes_used = 0;
  struct ModeDiag {
    double lambda, phi_n, delta_n;
    ModeStatus status;
  };
  std::vector<ModeDiag> diagnostics;
};

SolutionField assemble(const PreparedProblem& prepared);

struct VerificationReport {
  double pde_residual_sup = 0.0;        // max over both subdomains
  double pde_residual_upper = 0.0;
  double pde_residual_lower = 0.0;
  double conjugation_value_gap = 0.0;
  double conjugation_flux_gap = 0.0;
  double nonlocal_gap_sup = 0.0;        // sup_x |u(x,b) - u(x,-a) - phi(x)|
  double mode_closure_sup = 0.0;        // per-mode |Y(b) - Y(-a) - phi_n|
  bool bessel_ok = false;
  std::vector<double> coefficient_decay;  // |lambda_n^3 phi_n|
};

/// PDE residual via the spectral identity for the 2k-th x-derivative with the
/// L1/L2 Caputo oracle in y; for k = 1 a finite-difference second derivative
/// replaces the spectral identity at nine interior points.
VerificationReport verify(const PreparedProblem& prepared, const SolutionField& field,
                          int caputo_steps);

/// |lambda_n^3 phi_n| for n <= N.
std::vector<double> coefficient_decay(const PreparedProblem& prepared);

/// Numerical two-sided check of the series bound chain at (x, y < 0):
/// lhs = |sum lambda_n^2 phi_n/Delta_n X_n(x) E_{beta,2}(-lambda_n (-y)^beta)|,
/// rhs = M/min|Delta| sqrt(sum (X_n/lambda_n)^2) sqrt(sum (lambda_n^3 phi_n)^2).
struct SeriesBound {
  double lhs = 0.0;
  double rhs = 0.0;
};
SeriesBound series_bound_check(const PreparedProblem& prepared, double x, double y);

}  // namespace fracbvp
