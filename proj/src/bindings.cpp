#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracbvp/config.hpp"
#include "fracbvp/gamma.hpp"
#include "fracbvp/green_kernel.hpp"
#include "fracbvp/mittag_leffler.hpp"
#include "fracbvp/run.hpp"
#include "fracbvp/solver.hpp"

namespace py = pybind11;
using namespace fracbvp;

namespace {

py::dict report_to_dict(const VerificationReport& rep) {
  py::dict d;
  d["pde_residual_sup"] = rep.pde_residual_sup;
  d["pde_residual_upper"] = rep.pde_residual_upper;
  d["pde_residual_lower"] = rep.pde_residual_lower;
  d["conjugation_value_gap"] = rep.conjugation_value_gap;
  d["conjugation_flux_gap"] = rep.conjugation_flux_gap;
  d["nonlocal_gap_sup"] = rep.nonlocal_gap_sup;
  d["mode_closure_sup"] = rep.mode_closure_sup;
  d["bessel_ok"] = rep.bessel_ok;
  d["coefficient_decay"] = rep.coefficient_decay;
  return d;
}

ProblemConfig config_from_kwargs(int k, double m, double alpha, double beta, double a,
                                 double b, const std::string& phi_family,
                                 const std::vector<double>& phi_coefficients, int phi_index,
                                 int modes, int quad_order, int grid_nx, int grid_ny,
                                 double resonance_tol) {
  ProblemConfig pc;
  pc.spec = {k, m};
  pc.temporal = {alpha, beta, a, b};
  if (phi_family == "poly") {
    pc.phi.family = PhiSpec::Family::poly;
    pc.phi.coefficients = phi_coefficients;
  } else if (phi_family == "eigenmode") {
    pc.phi.family = PhiSpec::Family::eigenmode;
    pc.phi.index = phi_index;
  } else {
    throw std::invalid_argument("phi_family must be 'poly' or 'eigenmode'");
  }
  pc.modes = modes;
  pc.quad_order = quad_order;
  pc.grid_nx = grid_nx;
  pc.grid_ny = grid_ny;
  pc.resonance_tol = resonance_tol;
  return pc;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Series solver for a nonlocal conjugation problem with Caputo "
              "fractional derivatives; spectral core bindings";

  mod.def("gamma", &gamma_fn, py::arg("x"), "Gamma function (Lanczos)");
  mod.def("reciprocal_gamma", &reciprocal_gamma, py::arg("x"));

  mod.def(
      "ml_eval",
      [](double mu, double eta, double z) { return ml_eval({mu, eta, z}); },
      py::arg("mu"), py::arg("eta"), py::arg("z"),
      "Two-parameter Mittag-Leffler function E_{mu,eta}(z) on the real line");
  mod.def(
      "ml_eval_bounded",
      [](double mu, double eta, double z) { return ml_eval_bounded({mu, eta, z}); },
      py::arg("mu"), py::arg("eta"), py::arg("z"));
  mod.def("ml_envelope_constant", &ml_envelope_constant, py::arg("mu"), py::arg("eta"));
  mod.def(
      "ml_largest_real_zero",
      [](double beta, double eta, std::optional<double> scan_bound) {
        auto cert = ml_largest_real_zero(beta, eta, scan_bound);
        py::dict d;
        d["beta"] = cert.beta;
        d["eta"] = cert.eta;
        d["largest_zero"] = cert.largest_zero ? py::cast(*cert.largest_zero) : py::none();
        d["bracket"] = py::make_tuple(cert.bracket_lo, cert.bracket_hi);
        d["zero_count_scanned"] = cert.zero_count_scanned;
        d["scan_bound"] = cert.scan_bound;
        return d;
      },
      py::arg("beta"), py::arg("eta"), py::arg("scan_bound") = py::none());

  mod.def(
      "green_eval",
      [](int k, double m, double x, double xi) { return green_eval({k, m}, x, xi); },
      py::arg("k"), py::arg("m"), py::arg("x"), py::arg("xi"));
  mod.def(
      "kernel_eval",
      [](int k, double m, double x, double xi) { return kernel_eval({k, m}, x, xi); },
      py::arg("k"), py::arg("m"), py::arg("x"), py::arg("xi"));

  py::class_<Quadrature>(mod, "Quadrature")
      .def_readonly("nodes", &Quadrature::nodes)
      .def_readonly("weights", &Quadrature::weights)
      .def_readonly("order", &Quadrature::order);
  mod.def("build_quadrature", &build_quadrature, py::arg("order"));

  py::class_<EigenBasis>(mod, "EigenBasis")
      .def_property_readonly("lambdas", [](const EigenBasis& b) { return b.lambdas; })
      .def_property_readonly("count", [](const EigenBasis& b) { return b.count; })
      .def("nystrom_extend",
           [](const EigenBasis& b, int mode, double x) { return nystrom_extend(b, mode, x); },
           py::arg("mode"), py::arg("x"))
      .def("eigenfunction",
           [](const EigenBasis& b, int mode, double x) { return eigenfunction(b, mode, x); },
           py::arg("mode"), py::arg("x"))
      .def("fourier_coefficient",
           [](const EigenBasis& b, const std::function<double(double)>& phi, int mode) {
             return fourier_coefficient(b, phi, mode);
           },
           py::arg("phi"), py::arg("mode"))
      .def("bessel_check",
           [](const EigenBasis& b, double x) {
             auto bc = bessel_check(b, x);
             return py::make_tuple(bc.lhs, bc.rhs);
           },
           py::arg("x"));
  mod.def(
      "compute_basis",
      [](int k, double m, const Quadrature& quad, int count) {
        return compute_basis({k, m}, quad, count);
      },
      py::arg("k"), py::arg("m"), py::arg("quadrature"), py::arg("count"));

  mod.def(
      "delta_n",
      [](double lam, double alpha, double beta, double a, double b) {
        return delta_n(lam, {alpha, beta, a, b});
      },
      py::arg("lam"), py::arg("alpha"), py::arg("beta"), py::arg("a"), py::arg("b"));
  mod.def(
      "delta_limit",
      [](double alpha, double beta, double a, double b) {
        return delta_limit({alpha, beta, a, b});
      },
      py::arg("alpha"), py::arg("beta"), py::arg("a"), py::arg("b"));

  py::class_<ModeSolution>(mod, "ModeSolution")
      .def_readonly("lam", &ModeSolution::lambda)
      .def_readonly("phi_n", &ModeSolution::phi_n)
      .def_readonly("delta_n", &ModeSolution::delta_n)
      .def_readonly("c1", &ModeSolution::c1)
      .def_readonly("c2", &ModeSolution::c2)
      .def_readonly("c3", &ModeSolution::c3)
      .def_property_readonly("status",
                             [](const ModeSolution& s) { return std::string(to_string(s.status)); });
  mod.def(
      "solve_mode",
      [](double lam, double phi_n, double alpha, double beta, double a, double b, double tol) {
        return solve_mode(lam, phi_n, {alpha, beta, a, b}, tol);
      },
      py::arg("lam"), py::arg("phi_n"), py::arg("alpha"), py::arg("beta"), py::arg("a"),
      py::arg("b"), py::arg("tol"));
  mod.def(
      "y_eval",
      [](const ModeSolution& sol, double alpha, double beta, double a, double b, double y) {
        return y_eval(sol, {alpha, beta, a, b}, y);
      },
      py::arg("sol"), py::arg("alpha"), py::arg("beta"), py::arg("a"), py::arg("b"),
      py::arg("y"));
  mod.def(
      "caputo_of_mode",
      [](const ModeSolution& sol, double alpha, double beta, double a, double b, double y,
         int steps) { return caputo_of_mode(sol, {alpha, beta, a, b}, y, steps); },
      py::arg("sol"), py::arg("alpha"), py::arg("beta"), py::arg("a"), py::arg("b"),
      py::arg("y"), py::arg("steps") = 4096);

  mod.def(
      "solve",
      [](int k, double m, double alpha, double beta, double a, double b,
         const std::string& phi_family, const std::vector<double>& phi_coefficients,
         int phi_index, int modes, int quad_order, int grid_nx, int grid_ny,
         double resonance_tol, int verify_steps, bool do_verify) {
        ProblemConfig pc =
            config_from_kwargs(k, m, alpha, beta, a, b, phi_family, phi_coefficients,
                               phi_index, modes, quad_order, grid_nx, grid_ny, resonance_tol);
        PreparedProblem prepared = prepare_problem(pc);
        SolutionField field = assemble(prepared);
        py::dict out;
        out["x"] = field.x;
        std::vector<double> ys;
        std::vector<std::string> branch;
        for (const auto& row : field.rows) {
          ys.push_back(row.y);
          branch.push_back(row.interface ? "boundary"
                                         : (row.side == InterfaceSide::upper ? "+" : "-"));
        }
        out["y"] = ys;
        out["branch"] = branch;
        out["u"] = field.u;
        out["lambdas"] = prepared.basis.lambdas;
        if (do_verify)
          out["report"] = report_to_dict(verify(prepared, field, verify_steps));
        return out;
      },
      py::arg("k") = 1, py::arg("m") = 0.0, py::arg("alpha") = 0.5, py::arg("beta") = 1.5,
      py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("phi_family") = "poly",
      py::arg("phi_coefficients") = std::vector<double>{1.0}, py::arg("phi_index") = 1,
      py::arg("modes") = 10, py::arg("quad_order") = 64, py::arg("grid_nx") = 17,
      py::arg("grid_ny") = 17, py::arg("resonance_tol") = 0.0,
      py::arg("verify_steps") = 1024, py::arg("verify") = false);

  mod.def(
      "run_cli",
      [](const std::string& config_path, const std::string& out_dir, bool strict,
         bool dry_run, int verify_steps) {
        RunOptions opt;
        opt.config_path = config_path;
        opt.out_dir = out_dir;
        opt.strict = strict;
        opt.dry_run = dry_run;
        opt.verify_steps = verify_steps;
        return run(opt);
      },
      py::arg("config_path"), py::arg("out_dir"), py::arg("strict") = false,
      py::arg("dry_run") = false, py::arg("verify_steps") = 4096);
}
