#pragma once

#include <functional>
#include <vector>

#include "fracbvp/green_kernel.hpp"
#include "fracbvp/quadrature.hpp"

namespace fracbvp {

/// Discrete eigenpairs of the symmetric kernel equation
///   Xbar(x) = lambda int_0^1 Gbar(x,xi) Xbar(xi) dxi.
///
/// eigvecs[n] holds Xbar_{n+1} at the quadrature nodes, scaled to the
/// weighted normalization int x^-m X_n^2 dx = 1 (discretely:
/// sum_j w_j Xbar_n(xi_j) Xbar_p(xi_j) = delta_np) with the first
/// nonzero coordinate positive. Immutable after construction; all
/// read operations are safe to run concurrently.
struct EigenBasis {
  GreenSpec spec;
  Quadrature quadrature;
  std::vector<double> lambdas;              // ascending, all > 0
  std::vector<std::vector<double>> eigvecs; // [mode][node]
  int count = 0;
  std::vector<double> barycentric;          // Lagrange weights of the nodes
};

/// Builds the symmetric Nystrom matrix and its full eigendecomposition.
/// Matrix entries are Galerkin averages of Gbar against the Lagrange basis
/// of the nodes, integrated panel-exactly across the diagonal kink (the
/// pointwise kernel samples converge only at order^-2 for k = 1, which is
/// useless against the analytic eigenvalues). Kernel eigenvalues mu_n are
/// kept while mu_n > 1e-12 mu_max; lambda_n = 1/mu_n.
/// Throws std::runtime_error when fewer than `count` positive eigenvalues
/// survive the cutoff, std::domain_error when count > quadrature.order.
EigenBasis compute_basis(const GreenSpec& spec, const Quadrature& quadrature, int count);

/// Nystrom/product-integration extension of Xbar_mode off the nodes
/// through the identity Xbar(x) = lambda int Gbar(x,xi) Xbar(xi) dxi.
/// mode is 1-based; endpoints return exactly 0.
double nystrom_extend(const EigenBasis& basis, int mode, double x);

/// All modes at once (one kernel row shared across modes).
std::vector<double> nystrom_extend_all(const EigenBasis& basis, double x);

/// X_n(x) = x^(m/2) Xbar_n(x).
double eigenfunction(const EigenBasis& basis, int mode, double x);

/// phi_n = int_0^1 x^-m phi(x) X_n(x) dx, evaluated as
/// sum_j w_j xi_j^(-m/2) phi(xi_j) Xbar_n(xi_j).
/// Applies the heuristic endpoint-vanishing screen on phi
/// (|phi| <= 1e-2 max|phi| at x = 1e-3 and 1 - 1e-3).
double fourier_coefficient(const EigenBasis& basis,
                           const std::function<double(double)>& phi, int mode);

/// Left side sum_{n<=N} (X_n(x)/lambda_n)^2 and right side
/// int_0^1 xi^-m G^2(x,xi) dxi of the Bessel inequality; the right side is
/// integrated with the diagonal split so the comparison is not polluted by
/// kink quadrature error.
struct BesselCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};
BesselCheck bessel_check(const EigenBasis& basis, double x);

}  // namespace fracbvp
