#pragma once

#include <vector>

#include "fracbvp/spectral.hpp"

namespace fracbvp {

/// Fractional orders and extents of the two-sided temporal problem.
struct TemporalConfig {
  double alpha = 0.5;  // Caputo order above the interface, (0,1)
  double beta = 1.5;   // Caputo order below the interface, (1,2)
  double a = 1.0;      // lower extent, y in (-a, 0)
  double b = 1.0;      // upper extent, y in (0, b)

  void validate() const;
};

enum class ModeStatus { regular, resonant_solvable, resonant_unsolvable };

const char* to_string(ModeStatus s);

/// Per-mode temporal solution
///   Y(y) = c1 E_{alpha,1}(-lambda y^alpha),                       y > 0,
///   Y(y) = c2 E_{beta,1}(-lambda (-y)^beta)
///        + c3 (-y) E_{beta,2}(-lambda (-y)^beta),                 y < 0,
/// with c1 = c2, c3 = lambda c1, c1 = phi_n / Delta(n) on the regular branch.
struct ModeSolution {
  double lambda = 0.0;
  double phi_n = 0.0;
  double delta_n = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  ModeStatus status = ModeStatus::regular;
};

/// Delta(n) = E_{alpha,1}(-lambda b^alpha)
///          - E_{beta,1}(-lambda a^beta) - a lambda E_{beta,2}(-lambda a^beta).
double delta_n(double lambda, const TemporalConfig& cfg);

/// lim_{lambda->inf} Delta = -1 / (a^(beta-1) Gamma(2-beta)).
double delta_limit(const TemporalConfig& cfg);

/// Scaled resonance threshold 1e-10 (1 + |delta_limit|).
double resonance_tolerance(const TemporalConfig& cfg);

/// Branches on |Delta(n)| <= tol: regular solve, or the orthogonality
/// fallback (zero mode) when phi_n also vanishes, or an explicit
/// resonant-unsolvable status otherwise.
ModeSolution solve_mode(double lambda, double phi_n, const TemporalConfig& cfg, double tol);

enum class InterfaceSide { upper, lower };

/// Y(y); y = 0 returns c1 (upper-limit convention).
double y_eval(const ModeSolution& sol, const TemporalConfig& cfg, double y);

/// Y at the interface approached from one side: c1 from above, c2 from below.
double y_eval_interface(const ModeSolution& sol, InterfaceSide side);

/// Numerical Caputo derivative of the analytic mode profile at y != 0:
/// graded-mesh L1 scheme (order alpha) above the interface, L2-type scheme
/// (order beta) below, `steps` >= 64 intervals. Serves as the independent
/// oracle for the mode ODE  _CD Y = -lambda Y.
double caputo_of_mode(const ModeSolution& sol, const TemporalConfig& cfg, double y, int steps);

struct UniquenessEntry {
  int mode = 0;            // 1-based
  double lambda = 0.0;
  double delta = 0.0;
  bool flagged = false;    // |Delta| < tol: uniqueness-violating candidate
};

struct UniquenessReport {
  std::vector<UniquenessEntry> entries;
  double limit = 0.0;          // asymptotic target of Delta(n)
  double separation_delta = 0.0;  // |limit| minus the 10% margin
  double tolerance = 0.0;
};

/// Delta(n) over every retained mode, flagging |Delta| < tol as
/// uniqueness-violating candidates.
UniquenessReport uniqueness_report(const EigenBasis& basis, const TemporalConfig& cfg,
                                   double tol);

}  // namespace fracbvp
