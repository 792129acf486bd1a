#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dbarg/classify.hpp"
#include "dbarg/coherent.hpp"
#include "dbarg/mellin.hpp"
#include "dbarg/psi.hpp"
#include "dbarg/qspecial.hpp"
#include "dbarg/report.hpp"
#include "dbarg/verify.hpp"

namespace py = pybind11;
using namespace dbarg;

namespace {

ExpQVariant variant_from(const std::string& s) {
  if (s == "bracket") return ExpQVariant::Bracket;
  if (s == "paren") return ExpQVariant::Paren;
  throw InvalidParameter("variant must be 'bracket' or 'paren'");
}

PochhammerForm poch_from(const std::string& s) {
  if (s == "q_pow_minus_one") return PochhammerForm::QPowMinusOne;
  if (s == "one_minus_q_neg2") return PochhammerForm::OneMinusQNeg2;
  throw InvalidParameter("form must be 'q_pow_minus_one' or 'one_minus_q_neg2'");
}

Direction direction_from(const std::string& s) {
  if (s == "+inf") return Direction::PlusInfinity;
  if (s == "-inf") return Direction::MinusInfinity;
  throw InvalidParameter("direction must be '+inf' or '-inf'");
}

py::dict entry_dict(const CheckEntry& e) {
  py::dict d;
  d["name"] = e.name;
  d["target"] = e.target;
  d["computed"] = e.computed;
  d["abs_err"] = e.abs_err;
  d["rel_err"] = e.rel_err;
  d["tolerance"] = e.tolerance;
  d["pass"] = e.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(dbarg, m) {
  m.doc() = "Deformed-oscillator coherent states and Bargmann weight functions";

  py::register_exception<Error>(m, "DbargError");

  py::class_<PsiSpec>(m, "PsiSpec")
      .def_static("affine", &PsiSpec::affine, py::arg("sigma"), py::arg("mu") = 0.0)
      .def_static("q_linear", &PsiSpec::q_linear, py::arg("lambda_minus"),
                  py::arg("lambda_plus"), py::arg("c"), py::arg("q"), py::arg("mu") = 0.0)
      .def_static("exp_poly", &PsiSpec::exp_poly, py::arg("coeffs"), py::arg("mu") = 0.0)
      .def_static("q_bracket", &PsiSpec::q_bracket_family, py::arg("q"),
                  py::arg("mu") = 0.0)
      .def_static("q_paren", &PsiSpec::q_paren_family, py::arg("q"), py::arg("mu") = 0.0)
      .def_static("poly_product", &PsiSpec::poly_product, py::arg("coeffs"),
                  py::arg("mu") = 0.0)
      .def("__call__", &PsiSpec::operator())
      .def_property_readonly("mu", &PsiSpec::mu)
      .def("shifted", &PsiSpec::shifted)
      .def("reflected", &PsiSpec::reflected)
      .def("describe", &PsiSpec::describe)
      .def("__repr__", [](const PsiSpec& p) { return "<PsiSpec " + p.describe() + ">"; });

  m.def("q_bracket", &q_bracket, py::arg("x"), py::arg("q"));
  m.def("q_paren", &q_paren, py::arg("x"), py::arg("q"));
  m.def("generalized_factorial", &generalized_factorial, py::arg("psi"), py::arg("n"));
  m.def(
      "exp_q",
      [](double x, double q, const std::string& variant, double tol) {
        return exp_q(x, q, variant_from(variant), tol);
      },
      py::arg("x"), py::arg("q"), py::arg("variant") = "bracket", py::arg("tol") = 1e-15);
  m.def("bernoulli_poly", &bernoulli_poly, py::arg("m"), py::arg("rho"));
  m.def(
      "q_pochhammer_factor",
      [](long n, double q, const std::string& form) {
        return q_pochhammer_factor(n, q, poch_from(form));
      },
      py::arg("n"), py::arg("q"), py::arg("form") = "q_pow_minus_one");

  py::class_<SpectrumDescriptor>(m, "SpectrumDescriptor")
      .def_property_readonly("kind",
                             [](const SpectrumDescriptor& s) { return to_string(s.kind); })
      .def_readonly("nu_minus", &SpectrumDescriptor::nu_minus)
      .def_readonly("nu_plus", &SpectrumDescriptor::nu_plus)
      .def_readonly("mu", &SpectrumDescriptor::mu)
      .def("__repr__", [](const SpectrumDescriptor& s) {
        return "<SpectrumDescriptor " + to_string(s.kind) + ">";
      });

  py::class_<CoherentDomain>(m, "CoherentDomain")
      .def_property_readonly("ladder",
                             [](const CoherentDomain& d) { return to_string(d.ladder); })
      .def_readonly("inner_r2", &CoherentDomain::inner_r2)
      .def_readonly("outer_r2", &CoherentDomain::outer_r2)
      .def_readonly("origin_included", &CoherentDomain::origin_included);

  m.def("classify", &classify);
  m.def("coherent_domain", &coherent_domain);
  m.def("describe_domain", &describe_domain);
  m.def(
      "find_lattice_zeros",
      [](const PsiSpec& psi, long lo, long hi, double tol) {
        const LatticeZeros z = find_lattice_zeros(psi, lo, hi, tol);
        return py::make_tuple(z.zeros, z.sign_change_without_zero);
      },
      py::arg("psi"), py::arg("n_min"), py::arg("n_max"), py::arg("zero_tol") = 1e-10);
  m.def(
      "asymptote",
      [](const PsiSpec& psi, const std::string& d) {
        return asymptote(psi, direction_from(d));
      },
      py::arg("psi"), py::arg("direction"));
  m.def("real_zeros", &real_zeros);

  py::class_<CoherentState>(m, "CoherentState")
      .def_readonly("n_low", &CoherentState::n_low)
      .def_readonly("n_high", &CoherentState::n_high)
      .def_readonly("amplitudes", &CoherentState::amplitudes)
      .def_readonly("z", &CoherentState::z)
      .def_readonly("tail_bound", &CoherentState::tail_bound);

  m.def("coherent_coefficients", &coherent_coefficients, py::arg("psi"), py::arg("spec"),
        py::arg("z"), py::arg("tol") = 1e-14);
  m.def(
      "norm_squared",
      [](const PsiSpec& psi, const SpectrumDescriptor& spec, double r2, double tol) {
        const NormSum ns = norm_squared(psi, spec, r2, tol);
        return py::make_tuple(ns.value, ns.converged, ns.terms);
      },
      py::arg("psi"), py::arg("spec"), py::arg("r2"), py::arg("tol") = 1e-14);
  m.def("kernel_G", &kernel_G, py::arg("psi"), py::arg("u"), py::arg("tol") = 1e-14);
  m.def("kernel_residual", &kernel_residual, py::arg("psi"), py::arg("u"),
        py::arg("n_terms"));

  py::class_<Atom>(m, "Atom")
      .def_readonly("x", &Atom::x)
      .def_readonly("w", &Atom::w);

  py::class_<MellinSolution>(m, "MellinSolution")
      .def_property_readonly("hat_form",
                             [](const MellinSolution& s) { return to_string(s.hat_form); })
      .def_property_readonly(
          "weight_kind", [](const MellinSolution& s) { return to_string(s.weight_kind); })
      .def_readonly("normalization", &MellinSolution::normalization)
      .def_readonly("reflected", &MellinSolution::reflected)
      .def_readonly("atoms", &MellinSolution::atoms)
      .def_readonly("grid_x", &MellinSolution::grid_x)
      .def_readonly("grid_f", &MellinSolution::grid_f)
      .def_property_readonly("psi", [](const MellinSolution& s) { return s.psi; })
      .def("__repr__", [](const MellinSolution& s) {
        return "<MellinSolution " + to_string(s.hat_form) + ">";
      });

  m.def("solve_mellin", &solve_mellin);
  m.def("hat_eval", &hat_eval, py::arg("sol"), py::arg("rho"));
  m.def("weight_eval", &weight_eval, py::arg("sol"), py::arg("x"));
  m.def(
      "invert_mellin_numeric",
      [](const MellinSolution& sol, double x, double c, double t_max, long n_points) {
        const Inversion inv = invert_mellin_numeric(sol, x, c, t_max, n_points);
        py::dict diag;
        diag["t_max"] = inv.diag.t_max;
        diag["n_points"] = inv.diag.n_points;
        diag["edge_magnitude"] = inv.diag.edge_magnitude;
        diag["oscillation"] = inv.diag.oscillation;
        return py::make_tuple(inv.value, diag);
      },
      py::arg("sol"), py::arg("x"), py::arg("contour_re") = 1.5, py::arg("t_max") = 0.0,
      py::arg("n_points") = 0);
  m.def(
      "inversion_feasibility",
      [](const MellinSolution& sol, double c, std::vector<double> probes) {
        return to_string(inversion_feasibility(sol, c, std::move(probes)));
      },
      py::arg("sol"), py::arg("contour_re") = 1.5,
      py::arg("t_probe") = std::vector<double>{});
  m.def(
      "positivity_scan",
      [](const MellinSolution& sol, const std::vector<double>& grid) {
        const PositivityScan s = positivity_scan(sol, grid);
        return py::make_tuple(s.min_value, s.argmin);
      },
      py::arg("sol"), py::arg("x_grid"));
  m.def("log_grid", &log_grid, py::arg("lo"), py::arg("hi"), py::arg("n"));

  py::class_<TruncatedRep>(m, "TruncatedRep")
      .def_readonly("dim", &TruncatedRep::dim)
      .def_readonly("offset", &TruncatedRep::offset)
      .def_readonly("a", &TruncatedRep::a)
      .def_readonly("a_dagger", &TruncatedRep::a_dagger)
      .def_readonly("n_op", &TruncatedRep::n_op);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("entries",
                             [](const VerificationReport& r) {
                               py::list out;
                               for (const auto& e : r.entries) out.append(entry_dict(e));
                               return out;
                             })
      .def("all_pass", &VerificationReport::all_pass)
      .def("to_json", [](const VerificationReport& r) { return to_json(r).dump(); });

  m.def("build_truncated_rep", &build_truncated_rep, py::arg("psi"), py::arg("spec"),
        py::arg("dim"), py::arg("offset"));
  m.def("algebra_residuals", &algebra_residuals, py::arg("rep"),
        py::arg("tolerance") = 1e-12);
  m.def(
      "moment_check",
      [](const MellinSolution& sol, const PsiSpec& psi, long lo, long hi, double rel_tol) {
        return moment_check(sol, psi, lo, hi, {}, rel_tol);
      },
      py::arg("sol"), py::arg("psi"), py::arg("n_lo"), py::arg("n_hi"),
      py::arg("rel_tol") = 1e-8);
  m.def(
      "resolution_identity_check",
      [](const MellinSolution& sol, const PsiSpec& psi, long mm, long nn) {
        return resolution_identity_check(sol, psi, mm, nn);
      },
      py::arg("sol"), py::arg("psi"), py::arg("m"), py::arg("n"));
  m.def("weight_ode_residual", &weight_ode_residual, py::arg("sol"), py::arg("x"));
}
