#pragma once

#include <optional>

namespace fracbvp {

/// Point query for the two-parameter Mittag-Leffler function E_{mu,eta}(z).
/// The solver only needs mu in (0,1) and (1,2); the evaluator accepts (0,2]
/// so the classical identities at mu = 1, 2 stay available as test oracles.
struct MLQuery {
  double mu;
  double eta;
  double z;

  void validate() const;  // throws std::domain_error
};

/// E_{mu,eta}(z) on the real line.
///
/// Taylor summation (in compensated double-double arithmetic) for
/// |z| <= 38^mu, inverse-power asymptotics plus the residue exponential
/// term beyond. Relative error <= 1e-10 for |z| <= 50 away from zeros.
double ml_eval(const MLQuery& q);

/// Same value as ml_eval for z <= 0, additionally asserting the
/// |E| <= M/(1+|z|) envelope with the calibrated M of the (mu,eta) pair.
/// An envelope violation throws std::logic_error: it means the evaluator
/// itself is broken, not that the input is bad.
double ml_eval_bounded(const MLQuery& q);

/// Calibrated envelope constant M(mu,eta) = max (1+|z|)|E_{mu,eta}(z)| over
/// a dense logarithmic grid z in [-1e6, 0]. Cached after first computation.
double ml_envelope_constant(double mu, double eta);

/// Outcome of the real-zero scan of t -> E_{beta,eta}(-t), t > 0.
struct ZeroCertificate {
  double beta = 0.0;
  double eta = 0.0;
  std::optional<double> largest_zero;  // empty: no sign change in (0, scan_bound]
  double bracket_lo = 0.0;             // evaluator changes sign across [lo, hi]
  double bracket_hi = 0.0;
  int zero_count_scanned = 0;
  double scan_bound = 0.0;
};

/// Heuristic scan window 10 * Gamma(2-beta)^(-1/beta).
double default_zero_scan_bound(double beta);

/// Scan (0, scan_bound] in steps of 0.01 for sign changes of
/// E_{beta,eta}(-t), refine the largest by bisection to 1e-10.
/// beta in (1,2]; beta = 2 admitted for the sin(sqrt t)/sqrt t oracle.
ZeroCertificate ml_largest_real_zero(double beta, double eta,
                                     std::optional<double> scan_bound = std::nullopt);

}  // namespace fracbvp
