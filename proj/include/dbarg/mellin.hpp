#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dbarg/classify.hpp"
#include "dbarg/psi.hpp"
#include "dbarg/quadrature.hpp"

namespace dbarg {

enum class HatForm {
  Gamma,         // hat F = scale^(rho-1) Gamma(rho+sigma)/Gamma(1+sigma)
  LogGaussian,   // hat F = lambda^(rho-1) exp(-(rho^2-rho)/2 ln q), q < 1
  BernoulliExp,  // hat F = exp(sum a_n/(n+1) [B_{n+1}(rho) - B_{n+1}(1)])
  AtomicProduct, // hat F = phi a^rho prod_{p>=0}(1 + (lambda/a) q^(rho-p-1))
  BracketForm,   // hat F = phi q^(rho(rho-1)/2) (q-1/q)^(-rho) fhat(rho)
  ParenForm,     // weight 1/Exp_q(qx); hat by quadrature
};

enum class WeightKind { Density, AtomicMeasure, NumericDensity };

enum class Feasibility { Decaying, Diverging, Inconclusive };

struct Atom {
  double x = 0.0;
  double w = 0.0;
};

// Solution of hat F(rho+1) = psi(rho) hat F(rho) with hat F(1) = 1, carrying
// a closed-form evaluator for hat F and whatever weight representation the
// family admits: a density, an atomic measure, or numeric samples.
struct MellinSolution {
  PsiSpec psi;              // normalized problem (a-ladder, mu = 0)
  SpectrumDescriptor spec;  // classification of the normalized psi
  bool reflected = false;   // true if the original ladder was a-dagger
  HatForm hat_form = HatForm::Gamma;
  WeightKind weight_kind = WeightKind::Density;
  double normalization = 1.0;  // phi with hat F(1) = 1

  // form parameters
  double sigma = 0.0, scale = 1.0;          // Gamma
  double lambda = 0.0, q = 0.0;             // LogGaussian / Bracket / Paren
  std::vector<double> exp_coeffs;           // BernoulliExp exponent
  double atom_a = 0.0, atom_lambda = 0.0;   // AtomicProduct

  std::vector<Atom> atoms;                  // AtomicMeasure, masses normalized
  Feasibility feasibility = Feasibility::Decaying;
  std::vector<double> grid_x, grid_f;       // NumericDensity samples
};

MellinSolution solve_mellin(const PsiSpec& psi);

// Closed-form (or quadrature, for ParenForm) evaluation of hat F.  Throws
// OutOfDomain below the abscissa of convergence.
std::complex<double> hat_eval(const MellinSolution& sol, std::complex<double> rho);

// Density value F(x), x > 0.  Atomic measures have no density; use atoms.
double weight_eval(const MellinSolution& sol, double x);

struct InvertDiagnostics {
  double t_max = 0.0;
  long n_points = 0;
  double edge_magnitude = 0.0;  // |integrand(t_max)| relative to |integrand(0)|
  double oscillation = 0.0;     // sign changes of the real part per point
};

struct Inversion {
  double value = 0.0;
  InvertDiagnostics diag;
};

// Trapezoid Mellin inversion (1/2pi) int hat F(c+it) x^(-c-it) dt on
// [-t_max, t_max].  Pass t_max = 0 / n_points = 0 to size the contour
// automatically (|hat F(c+it_max)| < 1e-12 |hat F(c)|).
Inversion invert_mellin_numeric(const MellinSolution& sol, double x,
                                double contour_re = 1.5, double t_max = 0.0,
                                long n_points = 0);

// Probe |hat F(c+it)| along increasing t and classify the trend.
Feasibility inversion_feasibility(const MellinSolution& sol, double contour_re = 1.5,
                                  std::vector<double> t_probe = {});

struct PositivityScan {
  double min_value = 0.0;
  double argmin = 0.0;
};

PositivityScan positivity_scan(const MellinSolution& sol, const std::vector<double>& x_grid);

std::vector<double> log_grid(double lo, double hi, int n);

std::string to_string(HatForm form);
std::string to_string(WeightKind kind);
std::string to_string(Feasibility f);

}  // namespace dbarg
