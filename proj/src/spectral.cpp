#include "fracbvp/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracbvp {

namespace {

// Lagrange barycentric weights of the quadrature nodes, normalized by the
// largest magnitude (the common factor cancels in the barycentric formula).
std::vector<double> barycentric_weights(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<long double> lw(n);
  long double mx = 0.0L;
  for (int i = 0; i < n; ++i) {
    long double p = 1.0L;
    for (int j = 0; j < n; ++j)
      if (j != i) p *= static_cast<long double>(x[i] - x[j]);
    lw[i] = 1.0L / p;
    mx = std::max(mx, std::abs(lw[i]));
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<double>(lw[i] / mx);
  return out;
}

void lagrange_all(const std::vector<double>& x, const std::vector<double>& bw,
                  double t, std::vector<double>& out) {
  const int n = static_cast<int>(x.size());
  out.assign(n, 0.0);
  for (int i = 0; i < n; ++i)
    if (t == x[i]) {
      out[i] = 1.0;
      return;
    }
  double denom = 0.0;
  for (int i = 0; i < n; ++i) denom += bw[i] / (t - x[i]);
  for (int i = 0; i < n; ++i) out[i] = (bw[i] / (t - x[i])) / denom;
}

struct Panel {
  double a, b;
  int points;
};

// Panels of [a,b]. With a weight singularity at 0 the panels refine
// dyadically toward `a`; point counts track the local oscillation count of
// degree-(n-1) Lagrange polynomials (~ n sqrt(x) nodes below x).
std::vector<Panel> make_panels(double a, double b, bool graded, int n, int k) {
  std::vector<Panel> panels;
  if (!(b - a > 1e-300)) return panels;
  if (!graded) {
    panels.push_back({a, b, n + 2 * k + 4});
    return panels;
  }
  std::vector<double> cuts;
  double len = b - a;
  double cur = len;
  for (int i = 0; i < 44; ++i) {
    cur *= 0.5;
    if (cur < 1e-13 * len || a + cur <= a * (1.0 + 1e-12)) break;
    cuts.push_back(a + cur);
  }
  std::sort(cuts.begin(), cuts.end());
  double prev = a;
  for (double c : cuts) {
    if (c > prev) {
      panels.push_back({prev, c, 0});
      prev = c;
    }
  }
  panels.push_back({prev, b, 0});
  for (auto& p : panels)
    p.points = 10 + 2 * k + static_cast<int>(std::ceil(0.8 * n * std::sqrt(p.b)));
  return panels;
}

// int_lo^hi f with a per-panel Gauss rule.
template <typename F>
double integrate_panels(const std::vector<Panel>& panels, const F& f) {
  std::vector<double> xs, ws;
  double acc = 0.0;
  for (const auto& p : panels) {
    gauss_legendre_panel(p.points, p.a, p.b, xs, ws);
    for (size_t r = 0; r < xs.size(); ++r) acc += ws[r] * f(xs[r]);
  }
  return acc;
}

}  // namespace

EigenBasis compute_basis(const GreenSpec& spec, const Quadrature& quadrature, int count) {
  spec.validate();
  const int n = quadrature.order;
  if (count < 1 || count > n)
    throw std::domain_error("compute_basis: count must lie in [1, order], got " +
                            std::to_string(count));

  GreenKernel kern(spec);
  const auto& x = quadrature.nodes;
  const auto& w = quadrature.weights;
  std::vector<double> bw = barycentric_weights(x);
  const bool graded = spec.m > 0.0;
  const int k = spec.k;

  // T_ij = int_0^1 l_i(x) [ int_x^1 Gbar(x,xi) l_j(xi) dxi ] dx over the
  // upper triangle; the lower triangle is its transpose by symmetry of Gbar.
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> li, lj, inner(n), xs, ws, xs2, ws2;
  auto outer_panels = make_panels(0.0, 1.0, graded, 2 * n + 4 * k, k);
  if (!graded) outer_panels.front().points = n + 2 * k + 4;

  for (const auto& op : outer_panels) {
    gauss_legendre_panel(op.points, op.a, op.b, xs, ws);
    for (size_t q = 0; q < xs.size(); ++q) {
      const double xx = xs[q];
      lagrange_all(x, bw, xx, li);
      std::fill(inner.begin(), inner.end(), 0.0);
      auto inner_panels = make_panels(xx, 1.0, graded && xx < 0.25, n, k);
      if (!graded) inner_panels.front().points = n / 2 + k + 4;
      for (const auto& ip : inner_panels) {
        gauss_legendre_panel(ip.points, ip.a, ip.b, xs2, ws2);
        for (size_t r = 0; r < xs2.size(); ++r) {
          const double xi = xs2[r];
          const double kv = ws2[r] * kern.kernel(xx, xi);
          if (kv == 0.0) continue;
          lagrange_all(x, bw, xi, lj);
          for (int j = 0; j < n; ++j) inner[j] += kv * lj[j];
        }
      }
      for (int i = 0; i < n; ++i) {
        const double c = ws[q] * li[i];
        if (c == 0.0) continue;
        for (int j = 0; j < n; ++j) T(i, j) += c * inner[j];
      }
    }
  }

  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) = (T(i, j) + T(j, i)) / std::sqrt(w[i] * w[j]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("compute_basis: eigendecomposition failed");

  const double mu_max = es.eigenvalues()(n - 1);
  if (!(mu_max > 0.0))
    throw std::runtime_error("compute_basis: kernel matrix has no positive eigenvalues");
  const double cutoff = 1e-12 * mu_max;
  int available = 0;
  while (available < n && es.eigenvalues()(n - 1 - available) > cutoff) ++available;
  if (available < count)
    throw std::runtime_error("compute_basis: only " + std::to_string(available) +
                             " positive kernel eigenvalues above cutoff, need " +
                             std::to_string(count));

  EigenBasis basis;
  basis.spec = spec;
  basis.quadrature = quadrature;
  basis.count = count;
  basis.barycentric = std::move(bw);
  basis.lambdas.resize(count);
  basis.eigvecs.assign(count, std::vector<double>(n));
  for (int mode = 0; mode < count; ++mode) {
    const int col = n - 1 - mode;
    basis.lambdas[mode] = 1.0 / es.eigenvalues()(col);
    double scale = 1.0;
    double maxabs = 0.0;
    for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, std::abs(es.eigenvectors()(j, col)));
    for (int j = 0; j < n; ++j) {
      if (std::abs(es.eigenvectors()(j, col)) > 1e-12 * maxabs) {
        scale = es.eigenvectors()(j, col) > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    for (int j = 0; j < n; ++j)
      basis.eigvecs[mode][j] = scale * es.eigenvectors()(j, col) / std::sqrt(w[j]);
  }
  return basis;
}

std::vector<double> nystrom_extend_all(const EigenBasis& basis, double x) {
  const int n = basis.quadrature.order;
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("nystrom_extend: x must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return std::vector<double>(basis.count, 0.0);

  GreenKernel kern(basis.spec);
  const bool graded = basis.spec.m > 0.0;
  const int k = basis.spec.k;
  std::vector<double> row(n, 0.0), lj, xs, ws;

  auto absorb = [&](const std::vector<Panel>& panels) {
    for (const auto& p : panels) {
      gauss_legendre_panel(p.points, p.a, p.b, xs, ws);
      for (size_t r = 0; r < xs.size(); ++r) {
        const double kv = ws[r] * kern.kernel(x, xs[r]);
        if (kv == 0.0) continue;
        lagrange_all(basis.quadrature.nodes, basis.barycentric, xs[r], lj);
        for (int j = 0; j < n; ++j) row[j] += kv * lj[j];
      }
    }
  };
  auto left = make_panels(0.0, x, graded, n, k);
  if (!graded && !left.empty()) left.front().points = n / 2 + k + 4;
  auto right = make_panels(x, 1.0, graded && x < 0.25, n, k);
  if (!graded && !right.empty()) right.front().points = n / 2 + k + 4;
  absorb(left);
  absorb(right);

  std::vector<double> values(basis.count, 0.0);
  for (int mode = 0; mode < basis.count; ++mode) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * basis.eigvecs[mode][j];
    values[mode] = basis.lambdas[mode] * acc;
  }
  return values;
}

double nystrom_extend(const EigenBasis& basis, int mode, double x) {
  if (mode < 1 || mode > basis.count)
    throw std::domain_error("nystrom_extend: mode out of range");
  return nystrom_extend_all(basis, x)[mode - 1];
}

double eigenfunction(const EigenBasis& basis, int mode, double x) {
  double v = nystrom_extend(basis, mode, x);
  if (basis.spec.m == 0.0) return v;
  return std::pow(x, 0.5 * basis.spec.m) * v;
}

double fourier_coefficient(const EigenBasis& basis,
                           const std::function<double(double)>& phi, int mode) {
  if (mode < 1 || mode > basis.count)
    throw std::domain_error("fourier_coefficient: mode out of range");
  const auto& x = basis.quadrature.nodes;
  const auto& w = basis.quadrature.weights;
  double maxabs = 0.0;
  for (double xi : x) {
    double v = phi(xi);
    if (!std::isfinite(v))
      throw std::invalid_argument("fourier_coefficient: phi is not finite at node " +
                                  std::to_string(xi));
    maxabs = std::max(maxabs, std::abs(v));
  }
  if (maxabs > 0.0) {
    // endpoint-vanishing screen; derivative conditions are structural in the
    // poly family and are not probed numerically
    for (double edge : {1e-3, 1.0 - 1e-3}) {
      if (std::abs(phi(edge)) > 1e-2 * maxabs)
        throw std::invalid_argument(
            "fourier_coefficient: phi does not vanish toward the endpoints "
            "(admissibility screen at x = " + std::to_string(edge) + ")");
    }
  }
  const double halfm = 0.5 * basis.spec.m;
  double acc = 0.0;
  for (size_t j = 0; j < x.size(); ++j) {
    double weight = (halfm == 0.0) ? 1.0 : std::pow(x[j], -halfm);
    acc += w[j] * weight * phi(x[j]) * basis.eigvecs[mode - 1][j];
  }
  return acc;
}

BesselCheck bessel_check(const EigenBasis& basis, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("bessel_check: x must lie in [0, 1]");
  BesselCheck out;
  if (x == 0.0 || x == 1.0) return out;

  auto values = nystrom_extend_all(basis, x);
  const double xm = std::pow(x, 0.5 * basis.spec.m);
  for (int mode = 0; mode < basis.count; ++mode) {
    double xn = xm * values[mode];
    out.lhs += (xn / basis.lambdas[mode]) * (xn / basis.lambdas[mode]);
  }

  GreenKernel kern(basis.spec);
  const double m = basis.spec.m;
  auto f = [&](double xi) {
    double g = kern.green(x, xi);
    double weight = (m == 0.0) ? 1.0 : std::pow(xi, -m);
    return weight * g * g;
  };
  const int k = basis.spec.k;
  const bool graded = m > 0.0;
  auto left = make_panels(0.0, x, graded, 4 * k + 16, k);
  auto right = make_panels(x, 1.0, graded && x < 0.25, 4 * k + 16, k);
  if (!graded) {
    if (!left.empty()) left.front().points = 4 * k + 16;
    if (!right.empty()) right.front().points = 4 * k + 16;
  }
  out.rhs = integrate_panels(left, f) + integrate_panels(right, f);
  return out;
}

}  // namespace fracbvp
