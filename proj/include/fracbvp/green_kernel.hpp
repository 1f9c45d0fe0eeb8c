#pragma once

#include <vector>

namespace fracbvp {

/// Parameters of the degenerate 2k-order spatial operator.
struct GreenSpec {
  int k = 1;        // half the spatial order, k >= 1 (k <= 30 supported)
  double m = 0.0;   // degeneracy exponent, 0 <= m < k, m not a positive integer

  void validate() const;  // throws std::domain_error
};

/// Evaluator for the explicit Green's function of the two-point problem
///   X^(2k) = (-1)^k lambda x^-m X,  X^(j)(0) = X^(j)(1) = 0, j < k,
/// and the symmetrized weighted kernel of its integral-equation form.
///
/// Binomial tables are exact 64-bit integers (2k-1 <= 60); the 1/(2k-1)!
/// prefactor is applied once in floating point. Stateless after
/// construction, safe for concurrent use.
class GreenKernel {
 public:
  explicit GreenKernel(GreenSpec spec);

  /// Raw G(x,xi): the G1 branch for x <= xi, G2 for xi <= x.
  double green(double x, double xi) const;

  /// (-1)^k G(x,xi); the positive-semidefinite display.
  double positive_green(double x, double xi) const;

  /// Gbar(x,xi) = xi^(-m/2) (-1)^k G(x,xi) x^(-m/2), extended by 0 at the
  /// endpoints (continuity: k > m/2 cancels the weight singularities).
  double kernel(double x, double xi) const;

  const GreenSpec& spec() const { return spec_; }

 private:
  double branch_sum(double lo, double hi) const;  // G1(lo,hi) without sign/prefactor

  GreenSpec spec_;
  std::vector<double> outer_binom_;               // C(2k-1, i), i = 0..k-1
  std::vector<std::vector<double>> inner_binom_;  // per i: C(k-1+j, j), j = 0..k-1-i
  double inv_factorial_ = 1.0;                    // 1/(2k-1)!
};

/// Free-function forms used by the CLI and bindings.
double green_eval(const GreenSpec& spec, double x, double xi);
double kernel_eval(const GreenSpec& spec, double x, double xi);

}  // namespace fracbvp
