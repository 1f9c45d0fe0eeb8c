#include "fracbvp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracbvp/mittag_leffler.hpp"

namespace fracbvp {

void ProblemConfig::validate() const {
  spec.validate();
  temporal.validate();
  phi.validate();
  if (modes < 1) throw std::domain_error("ProblemConfig: modes must be >= 1");
  if (modes > quad_order)
    throw std::domain_error("ProblemConfig: modes must not exceed quad_order");
  if (grid_nx < 2 || grid_ny < 2)
    throw std::domain_error("ProblemConfig: grid dimensions must be >= 2");
  if (resonance_tol < 0.0)
    throw std::domain_error("ProblemConfig: resonance_tol must be nonnegative");
}

PreparedProblem prepare_problem(const ProblemConfig& config) {
  config.validate();
  PreparedProblem p;
  p.config = config;
  Quadrature quad = build_quadrature(config.quad_order);
  p.basis = compute_basis(config.spec, quad, config.modes);
  p.phi = make_phi(config.phi, config.spec, &p.basis);
  p.phi_symbolic = phi_power_sum(config.phi, config.spec);

  double tol = config.resonance_tol > 0.0 ? config.resonance_tol
                                          : resonance_tolerance(config.temporal);
  p.modes.reserve(config.modes);
  for (int mode = 1; mode <= config.modes; ++mode) {
    double phi_n = fourier_coefficient(p.basis, p.phi, mode);
    p.modes.push_back(solve_mode(p.basis.lambdas[mode - 1], phi_n, config.temporal, tol));
  }
  p.uniqueness = uniqueness_report(p.basis, config.temporal, tol);
  return p;
}

namespace {

std::vector<SolutionField::Row> build_rows(const TemporalConfig& t, int ny) {
  // rows span [-a, b] with the interface stored twice: once as the last
  // lower-branch row, once as the first upper-branch row
  int n_low = std::max(2, static_cast<int>(std::lround(ny * t.a / (t.a + t.b))));
  int n_up = std::max(2, ny - n_low);
  std::vector<SolutionField::Row> rows;
  rows.reserve(n_low + n_up);
  for (int i = 0; i < n_low; ++i) {
    double y = -t.a + (t.a * i) / (n_low - 1);
    if (i == n_low - 1) y = 0.0;
    rows.push_back({y, InterfaceSide::lower, i == n_low - 1});
  }
  for (int i = 0; i < n_up; ++i) {
    double y = (t.b * i) / (n_up - 1);
    if (i == 0) y = 0.0;
    rows.push_back({y, InterfaceSide::upper, i == 0});
  }
  return rows;
}

double y_value(const ModeSolution& sol, const TemporalConfig& cfg,
               const SolutionField::Row& row) {
  if (row.interface) return y_eval_interface(sol, row.side);
  return y_eval(sol, cfg, row.y);
}

}  // namespace

SolutionField assemble(const PreparedProblem& prepared) {
  const auto& cfg = prepared.config;
  std::vector<int> bad;
  for (int i = 0; i < static_cast<int>(prepared.modes.size()); ++i)
    if (prepared.modes[i].status == ModeStatus::resonant_unsolvable) bad.push_back(i + 1);
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "assemble: resonant-unsolvable modes (Delta(n) = 0 with phi_n != 0):";
    for (int m : bad) msg << ' ' << m;
    throw UnsolvableInstanceError(msg.str(), bad);
  }

  SolutionField field;
  field.modes_used = cfg.modes;
  field.x.resize(cfg.grid_nx);
  for (int i = 0; i < cfg.grid_nx; ++i)
    field.x[i] = static_cast<double>(i) / (cfg.grid_nx - 1);
  field.rows = build_rows(cfg.temporal, cfg.grid_ny);

  // spatial factors X_n(x) per column, one kernel row per x
  const double halfm = 0.5 * cfg.spec.m;
  std::vector<std::vector<double>> xn(field.x.size());
  for (size_t i = 0; i < field.x.size(); ++i) {
    xn[i] = nystrom_extend_all(prepared.basis, field.x[i]);
    if (halfm != 0.0 && field.x[i] > 0.0) {
      double w = std::pow(field.x[i], halfm);
      for (auto& v : xn[i]) v *= w;
    }
  }
  // temporal factors Y_n per row
  std::vector<std::vector<double>> yn(field.rows.size(),
                                      std::vector<double>(cfg.modes));
  for (size_t r = 0; r < field.rows.size(); ++r)
    for (int n = 0; n < cfg.modes; ++n)
      yn[r][n] = y_value(prepared.modes[n], cfg.temporal, field.rows[r]);

  field.u.assign(field.rows.size(), std::vector<double>(field.x.size(), 0.0));
  for (size_t r = 0; r < field.rows.size(); ++r)
    for (size_t i = 0; i < field.x.size(); ++i) {
      double acc = 0.0;
      for (int n = 0; n < cfg.modes; ++n) acc += xn[i][n] * yn[r][n];
      field.u[r][i] = acc;
    }

  for (const auto& mode : prepared.modes)
    field.diagnostics.push_back({mode.lambda, mode.phi_n, mode.delta_n, mode.status});
  return field;
}

VerificationReport verify(const PreparedProblem& prepared, const SolutionField& field,
                          int caputo_steps) {
  const auto& cfg = prepared.config;
  if (field.modes_used != cfg.modes ||
      static_cast<int>(field.x.size()) != cfg.grid_nx)
    throw std::invalid_argument("verify: field does not match the configuration");

  VerificationReport rep;
  const auto& t = cfg.temporal;
  const int nmodes = cfg.modes;

  // ---- conjugation: value continuity between the two interface rows
  size_t lower_if = 0, upper_if = 0;
  for (size_t r = 0; r < field.rows.size(); ++r)
    if (field.rows[r].interface)
      (field.rows[r].side == InterfaceSide::lower ? lower_if : upper_if) = r;
  for (size_t i = 0; i < field.x.size(); ++i)
    rep.conjugation_value_gap = std::max(
        rep.conjugation_value_gap,
        std::abs(field.u[upper_if][i] - field.u[lower_if][i]));

  // sample abscissae for the pointwise residuals
  const std::vector<double> xs = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<std::vector<double>> xn(xs.size());
  const double halfm = 0.5 * cfg.spec.m;
  for (size_t i = 0; i < xs.size(); ++i) {
    xn[i] = nystrom_extend_all(prepared.basis, xs[i]);
    if (halfm != 0.0) {
      double w = std::pow(xs[i], halfm);
      for (auto& v : xn[i]) v *= w;
    }
  }

  // ---- conjugation: flux. _CD^alpha u(x,+0) = sum X_n (-lambda_n c1_n),
  // u_y(x,-0) = sum X_n (-c3_n); both reduce to the coefficient identity.
  for (size_t i = 0; i < xs.size(); ++i) {
    double flux_up = 0.0, flux_low = 0.0;
    for (int n = 0; n < nmodes; ++n) {
      flux_up += xn[i][n] * (-prepared.modes[n].lambda * prepared.modes[n].c1);
      flux_low += xn[i][n] * (-prepared.modes[n].c3);
    }
    rep.conjugation_flux_gap = std::max(rep.conjugation_flux_gap,
                                        std::abs(flux_up - flux_low));
  }

  // ---- nonlocal condition on grid columns
  {
    size_t top = field.rows.size() - 1;  // y = b
    for (size_t i = 0; i < field.x.size(); ++i) {
      double gap = field.u[top][i] - field.u[0][i] - prepared.phi(field.x[i]);
      rep.nonlocal_gap_sup = std::max(rep.nonlocal_gap_sup, std::abs(gap));
    }
  }

  // ---- per-mode nonlocal closure
  for (const auto& mode : prepared.modes) {
    double gap = y_eval(mode, t, t.b) - y_eval(mode, t, -t.a) - mode.phi_n;
    rep.mode_closure_sup = std::max(rep.mode_closure_sup, std::abs(gap));
  }

  // ---- PDE residual. Caputo oracle per (mode, y); spatial term through the
  // spectral identity (-1)^k x^m d^2k u/dx^2k = sum lambda_n X_n Y_n.
  const std::vector<double> ys_up = {0.35 * t.b, 0.7 * t.b};
  const std::vector<double> ys_low = {-0.35 * t.a, -0.7 * t.a};
  auto residual_at = [&](double y) {
    std::vector<double> cap(nmodes), yv(nmodes);
    for (int n = 0; n < nmodes; ++n) {
      cap[n] = caputo_of_mode(prepared.modes[n], t, y, caputo_steps);
      yv[n] = y_eval(prepared.modes[n], t, y);
    }
    double worst = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      double r = 0.0;
      for (int n = 0; n < nmodes; ++n)
        r += xn[i][n] * (cap[n] + prepared.modes[n].lambda * yv[n]);
      worst = std::max(worst, std::abs(r));
    }
    // k = 1: independent finite-difference cross-check of u_xx
    if (cfg.spec.k == 1) {
      const double h = 1e-3;
      for (size_t i = 0; i < xs.size(); ++i) {
        double x = xs[i];
        auto u_at = [&](double xq) {
          auto vals = nystrom_extend_all(prepared.basis, xq);
          double acc = 0.0;
          double w = (halfm != 0.0 && xq > 0.0) ? std::pow(xq, halfm) : 1.0;
          for (int n = 0; n < nmodes; ++n) acc += w * vals[n] * yv[n];
          return acc;
        };
        double uxx = (u_at(x + h) - 2.0 * u_at(x) + u_at(x - h)) / (h * h);
        double caputo_u = 0.0;
        for (int n = 0; n < nmodes; ++n) caputo_u += xn[i][n] * cap[n];
        double xm = (cfg.spec.m == 0.0) ? 1.0 : std::pow(x, cfg.spec.m);
        worst = std::max(worst, std::abs(caputo_u - xm * uxx));
      }
    }
    return worst;
  };
  for (double y : ys_up)
    rep.pde_residual_upper = std::max(rep.pde_residual_upper, residual_at(y));
  for (double y : ys_low)
    rep.pde_residual_lower = std::max(rep.pde_residual_lower, residual_at(y));
  rep.pde_residual_sup = std::max(rep.pde_residual_upper, rep.pde_residual_lower);

  // ---- Bessel inequality at the sample abscissae
  rep.bessel_ok = true;
  for (double x : xs) {
    auto bc = bessel_check(prepared.basis, x);
    if (bc.lhs > bc.rhs + 1e-8) rep.bessel_ok = false;
  }

  rep.coefficient_decay = coefficient_decay(prepared);
  return rep;
}

std::vector<double> coefficient_decay(const PreparedProblem& prepared) {
  std::vector<double> seq;
  seq.reserve(prepared.modes.size());
  for (const auto& mode : prepared.modes) {
    double l = mode.lambda;
    seq.push_back(std::abs(l * l * l * mode.phi_n));
  }
  return seq;
}

SeriesBound series_bound_check(const PreparedProblem& prepared, double x, double y) {
  if (!(y < 0.0))
    throw std::domain_error("series_bound_check: y must lie in the lower subdomain");
  const auto& t = prepared.config.temporal;
  SeriesBound out;
  auto values = nystrom_extend_all(prepared.basis, x);
  const double xm = std::pow(x, 0.5 * prepared.config.spec.m);
  double sum_x = 0.0, sum_phi = 0.0, min_delta = std::numeric_limits<double>::max();
  double lhs = 0.0;
  double s = -y;
  for (size_t n = 0; n < prepared.modes.size(); ++n) {
    const auto& mode = prepared.modes[n];
    double xnv = xm * values[n];
    double e2 = ml_eval({t.beta, 2.0, -mode.lambda * std::pow(s, t.beta)});
    lhs += mode.lambda * mode.lambda * (mode.phi_n / mode.delta_n) * xnv * e2;
    sum_x += (xnv / mode.lambda) * (xnv / mode.lambda);
    double l3phi = mode.lambda * mode.lambda * mode.lambda * mode.phi_n;
    sum_phi += l3phi * l3phi;
    min_delta = std::min(min_delta, std::abs(mode.delta_n));
  }
  out.lhs = std::abs(lhs);
  double env = ml_envelope_constant(t.beta, 2.0);
  out.rhs = env / min_delta * std::sqrt(sum_x) * std::sqrt(sum_phi);
  return out;
}

}  // namespace fracbvp
