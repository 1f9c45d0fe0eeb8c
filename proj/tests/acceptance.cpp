// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run through ctest as `acceptance` or directly from the build tree.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fracbvp/config.hpp"
#include "fracbvp/gamma.hpp"
#include "fracbvp/mittag_leffler.hpp"
#include "fracbvp/solver.hpp"
#include "support/oracles.hpp"

using namespace fracbvp;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("%-4s %s  %s\n", id.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

// --- criterion 1: second-order eigenvalues against (n pi)^2 ---------------
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  EigenBasis basis = compute_basis({1, 0.0}, build_quadrature(128), 10);
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    double exact = (n * M_PI) * (n * M_PI);
    worst = std::max(worst, std::abs(basis.lambdas[n - 1] - exact) / exact);
  }
  double dt = seconds_since(t0);
  report("AC1", worst <= 1e-8 && dt < 5.0,
         fmt("lambda_n vs (n pi)^2, n<=10: worst rel %.3e (tol 1e-8), %.2f s (limit 5 s)",
             worst, dt));
}

// --- criterion 2: fourth-order eigenvalue against the beam oracle ---------
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  double root = oracles::clamped_beam_root();
  double exact = root * root * root * root;
  EigenBasis basis = compute_basis({2, 0.0}, build_quadrature(128), 1);
  double rel = std::abs(basis.lambdas[0] - exact) / exact;
  double dt = seconds_since(t0);
  report("AC2", rel <= 1e-6 && dt < 10.0,
         fmt("lambda_1 = %.7f vs root^4 = %.7f: rel %.3e (tol 1e-6), %.2f s (limit 10 s)",
             basis.lambdas[0], exact, rel, dt));
}

// --- criterion 3: kernel symmetry and positivity ---------------------------
void criterion3() {
  double worst_sym = 0.0;
  for (int k : {1, 2, 3}) {
    std::vector<double> ms = {0.0, 0.5};
    if (k >= 2) ms.push_back(1.5);
    for (double m : ms) {
      GreenKernel g({k, m});
      for (int i = 1; i < 50; ++i)
        for (int j = 1; j < 50; ++j) {
          double x = i / 50.0, xi = j / 50.0;
          worst_sym = std::max(worst_sym, std::abs(g.kernel(x, xi) - g.kernel(xi, x)));
        }
    }
  }
  double min_eig = 0.0;
  for (int order : {64, 128, 256}) {
    Quadrature q = build_quadrature(order);
    for (auto [k, m] : std::vector<std::pair<int, double>>{{1, 0.0}, {2, 0.5}, {3, 1.5}}) {
      GreenKernel g({k, m});
      Eigen::MatrixXd gram(order, order);
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
          gram(i, j) = std::sqrt(q.weights[i]) * g.kernel(q.nodes[i], q.nodes[j]) *
                       std::sqrt(q.weights[j]);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
      min_eig = std::min(min_eig, es.eigenvalues()(0));
    }
  }
  report("AC3", worst_sym <= 1e-13 && min_eig >= -1e-10,
         fmt("symmetry worst %.3e (tol 1e-13); Gram min eigenvalue %.3e (tol -1e-10)",
             worst_sym, min_eig));
}

// --- criterion 4: Mittag-Leffler identities --------------------------------
void criterion4() {
  double worst_closed = 0.0;
  for (double z = -25.0; z <= 25.0; z += 0.5) {
    double e = std::abs(ml_eval({1.0, 1.0, z}) / std::exp(z) - 1.0);
    worst_closed = std::max(worst_closed, e);
    double c = (z >= 0.0) ? std::cosh(std::sqrt(z)) : std::cos(std::sqrt(-z));
    if (std::abs(c) > 1e-8)
      worst_closed = std::max(worst_closed, std::abs(ml_eval({2.0, 1.0, z}) / c - 1.0));
    double r = std::sqrt(std::abs(z));
    double s = (z == 0.0) ? 1.0 : ((z > 0.0) ? std::sinh(r) / r : std::sin(r) / r);
    if (std::abs(s) > 1e-8)
      worst_closed = std::max(worst_closed, std::abs(ml_eval({2.0, 2.0, z}) / s - 1.0));
  }

  double worst_rec = 0.0;
  int points = 0;
  for (double mu : {0.3, 0.6, 0.9, 1.2, 1.7}) {
    for (double eta : {0.8, 1.0, 2.0, 3.1}) {
      for (double z : {-22.0, -7.0, -1.0, -0.05, 1.5}) {
        double lhs = ml_eval({mu, eta, z});
        double rhs = reciprocal_gamma(eta) + z * ml_eval({mu, mu + eta, z});
        worst_rec = std::max(worst_rec,
                             std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        ++points;
      }
    }
  }

  double worst_asym = 0.0;
  bool asym_ok = true;
  for (double alpha : {0.3, 0.5, 0.8}) {
    for (double t : {1e4, 1e5, 1e6}) {
      double dev = std::abs(ml_eval({alpha, 1.0, -t}) * t * gamma_fn(1.0 - alpha) - 1.0);
      worst_asym = std::max(worst_asym, dev * t / 10.0);
      if (dev > 10.0 / t) asym_ok = false;
    }
  }
  report("AC4",
         worst_closed <= 1e-10 && worst_rec <= 1e-9 && points >= 100 && asym_ok,
         fmt("closed forms worst %.3e (tol 1e-10); recurrence worst %.3e over %d pts "
             "(tol 1e-9); asymptotic margin %.3f of allowance",
             worst_closed, worst_rec, points, worst_asym));
}

// --- criterion 5: Delta tail ------------------------------------------------
void criterion5() {
  TemporalConfig cfg{0.5, 1.5, 1.0, 1.0};
  double limit = delta_limit(cfg);
  bool limit_ok = std::abs(limit - (-0.5641895835)) < 1e-9;
  double e3 = std::abs(delta_n(1e3, cfg) - limit);
  double e4 = std::abs(delta_n(1e4, cfg) - limit);
  double e5 = std::abs(delta_n(1e5, cfg) - limit);
  bool shrink = (e4 <= 1.5 * e3 / 10.0) && (e5 <= 1.5 * e4 / 10.0);
  report("AC5", limit_ok && shrink,
         fmt("limit %.10f; |Delta-limit| at 1e3/1e4/1e5: %.3e %.3e %.3e (>= linear decay)",
             limit, e3, e4, e5));
}

// --- criteria 6 and 7: end-to-end reference instance -----------------------
void criteria6and7() {
  auto t0 = std::chrono::steady_clock::now();
  ProblemConfig pc;
  pc.spec = {1, 0.0};
  pc.temporal = {0.5, 1.5, 1.0, 1.0};
  pc.phi.family = PhiSpec::Family::poly;
  pc.phi.coefficients = {1.0};  // phi = x(1-x)
  pc.modes = 20;
  pc.quad_order = 128;
  pc.grid_nx = 33;
  pc.grid_ny = 33;
  PreparedProblem prepared = prepare_problem(pc);
  SolutionField field = assemble(prepared);
  VerificationReport rep = verify(prepared, field, 4096);
  double dt = seconds_since(t0);
  bool pass6 = rep.conjugation_value_gap <= 1e-9 && rep.nonlocal_gap_sup <= 1e-4 &&
               rep.mode_closure_sup <= 1e-9 && rep.pde_residual_sup <= 5e-3 && dt < 60.0;
  report("AC6", pass6,
         fmt("interface %.2e (1e-9); nonlocal %.2e (1e-4); closure %.2e (1e-9); "
             "pde %.2e (5e-3); %.1f s (60 s)",
             rep.conjugation_value_gap, rep.nonlocal_gap_sup, rep.mode_closure_sup,
             rep.pde_residual_sup, dt));

  // criterion 7: Bessel inequality at ten interior points; decay partial sums
  bool bessel_ok = true;
  double worst_gap = -1e300;
  for (int i = 1; i <= 10; ++i) {
    double x = i / 11.0;
    auto bc = bessel_check(prepared.basis, x);
    worst_gap = std::max(worst_gap, bc.lhs - bc.rhs);
    if (bc.lhs > bc.rhs + 1e-8) bessel_ok = false;
  }
  // reference phi: partial sums of (lambda^3 phi_n)^2 finite and nondecreasing
  auto seq = coefficient_decay(prepared);
  bool finite_ok = true;
  double partial = 0.0;
  std::vector<double> partials;
  for (double v : seq) {
    if (!std::isfinite(v)) finite_ok = false;
    partial += v * v;
    partials.push_back(partial);
  }
  bool nondecreasing = true;
  for (size_t i = 1; i < partials.size(); ++i)
    if (partials[i] < partials[i - 1]) nondecreasing = false;

  // admissible family member x^5 (1-x)^5: partial sums bounded by the
  // weighted norm of the third-chain derivative
  ProblemConfig pc2 = pc;
  pc2.phi.coefficients = {0, 0, 0, 0, 1, -4, 6, -4, 1};
  PreparedProblem prepared2 = prepare_problem(pc2);
  auto bound = decay_bound(pc2.phi, pc2.spec);
  auto seq2 = coefficient_decay(prepared2);
  double sum2 = 0.0;
  for (double v : seq2) sum2 += v * v;
  bool bound_ok = bound.has_value() && bound->chain_ok && sum2 <= bound->rhs;
  report("AC7", bessel_ok && finite_ok && nondecreasing && bound_ok,
         fmt("bessel worst lhs-rhs %.3e (<= 1e-8 at 10 pts); decay partial sums "
             "nondecreasing; admissible-family sum %.4e <= bound %.4e",
             worst_gap, sum2, bound ? bound->rhs : 0.0));
}

// --- criterion 8: uniqueness branch logic -----------------------------------
void criterion8(const std::string& cli) {
  TemporalConfig cfg{0.5, 1.5, 1.0, 1.0};
  ModeSolution bad = solve_mode(10.0, 0.5, cfg, 1e99);   // injected Delta = 0
  ModeSolution good = solve_mode(10.0, 0.0, cfg, 1e99);
  bool branch_ok = bad.status == ModeStatus::resonant_unsolvable &&
                   good.status == ModeStatus::resonant_solvable && good.c1 == 0.0 &&
                   good.c2 == 0.0 && good.c3 == 0.0;

  fs::path dir = fs::temp_directory_path() / "fracbvp_acceptance_resonant";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "config.txt");
    out << "k = 1\nm = 0\nalpha = 0.5\nbeta = 1.5\na = 1\nb = 1\n"
        << "phi_family = poly\nphi_coefficients = 1\n"
        << "modes = 4\nquad_order = 16\ngrid_nx = 5\ngrid_ny = 5\n"
        << "resonance_tol = 1e99\n";
  }
  std::string cmd = cli + " --config " + (dir / "config.txt").string() + " --out " +
                    (dir / "out").string() + " --verify-steps 256 >" +
                    (dir / "log").string() + " 2>&1";
  int rc = WEXITSTATUS(std::system(cmd.c_str()));
  report("AC8", branch_ok && rc == 2,
         fmt("solve_mode branches %s; assemble via CLI exited %d (want 2)",
             branch_ok ? "correct" : "WRONG", rc));
}

// --- criterion 9: determinism ------------------------------------------------
void criterion9(const std::string& cli) {
  fs::path dir = fs::temp_directory_path() / "fracbvp_acceptance_det";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "config.txt");
    out << "k = 1\nm = 0\nalpha = 0.5\nbeta = 1.5\na = 1\nb = 1\n"
        << "phi_family = poly\nphi_coefficients = 1\n"
        << "modes = 20\nquad_order = 128\ngrid_nx = 33\ngrid_ny = 33\n";
  }
  auto run_once = [&](const std::string& tag) {
    std::string cmd = cli + " --config " + (dir / "config.txt").string() + " --out " +
                      (dir / tag).string() + " --verify-steps 64 >" +
                      (dir / (tag + ".log")).string() + " 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  int r1 = run_once("r1");
  int r2 = run_once("r2");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string s1 = slurp(dir / "r1" / "solution.csv");
  std::string s2 = slurp(dir / "r2" / "solution.csv");
  report("AC9", r1 == 0 && r2 == 0 && !s1.empty() && s1 == s2,
         fmt("two runs: exit %d/%d, solution.csv byte-identical: %s (%zu bytes)", r1, r2,
             s1 == s2 ? "yes" : "NO", s1.size()));
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = (argc > 1) ? argv[1] : FRACBVP_CLI_PATH;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criteria6and7();
  criterion8(cli);
  criterion9(cli);
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
