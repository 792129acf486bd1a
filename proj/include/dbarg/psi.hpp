#pragma once

#include <string>
#include <vector>

#include "dbarg/errors.hpp"

namespace dbarg {

enum class PsiFamily { Affine, QLinear, ExpPoly, QBracket, QParen, PolyProduct };

// Structure function psi of a deformed oscillator algebra, as a typed family
// with parameters.  Values on the lattice mu + Z determine the
// representation; the asymptotes determine where coherent states live.
//
// Families:
//   Affine(sigma)                    psi(x) = x + sigma
//   QLinear(lm, lp, c, q)            psi(x) = lm q^-x + lp q^x + c
//   ExpPoly(a_0..a_d)                psi(x) = exp(sum a_n x^n), d odd, a_d > 0
//   QBracket(q)                      psi(x) = (q^x - q^-x)/(q - q^-1)
//   QParen(q)                        psi(x) = (q^x - 1)/(q - 1)
//   PolyProduct(c_0..c_d)            psi(x) = sum c_n x^n
class PsiSpec {
 public:
  PsiSpec() = default;  // psi(x) = x, the usual oscillator

  static PsiSpec affine(double sigma, double mu = 0.0);
  static PsiSpec q_linear(double lambda_minus, double lambda_plus, double c,
                          double q, double mu = 0.0);
  static PsiSpec exp_poly(std::vector<double> coeffs, double mu = 0.0);
  // q < 1 is normalized to 1/q (the bracket is symmetric under q -> 1/q).
  static PsiSpec q_bracket_family(double q, double mu = 0.0);
  static PsiSpec q_paren_family(double q, double mu = 0.0);
  static PsiSpec poly_product(std::vector<double> coeffs, double mu = 0.0);

  PsiFamily family() const { return family_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double lambda_minus() const { return lambda_minus_; }
  double lambda_plus() const { return lambda_plus_; }
  double constant() const { return c_; }
  double q() const { return q_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(double x) const;

  // psi'(x) = psi(x + s).  Family-closed: Affine stays Affine, QLinear stays
  // QLinear, QBracket/QParen become the equivalent QLinear, polynomials are
  // Taylor-shifted.
  PsiSpec shifted(double s) const;

  // psi'(x) = psi(s - x).  Used to map upper-bounded ladders onto the
  // lower-bounded machinery.
  PsiSpec reflected(double s) const;

  PsiSpec with_mu(double mu) const;

  std::string describe() const;

 private:
  PsiFamily family_ = PsiFamily::Affine;
  double sigma_ = 0.0;
  double lambda_minus_ = 0.0;
  double lambda_plus_ = 0.0;
  double c_ = 0.0;
  double q_ = 0.0;
  std::vector<double> coeffs_;
  double mu_ = 0.0;
};

double evaluate(const PsiSpec& psi, double x);

struct LatticeZeros {
  std::vector<long> zeros;  // n with |psi(mu+n)| <= zero_tol, ascending
  bool sign_change_without_zero = false;
};

LatticeZeros find_lattice_zeros(const PsiSpec& psi, long n_min, long n_max,
                                double zero_tol = 1e-10);

enum class Direction { PlusInfinity, MinusInfinity };

// Limit of psi(x) as x -> +-infinity, as an extended real (+-HUGE_VAL for
// divergent limits).
double asymptote(const PsiSpec& psi, Direction direction);

// Real zeros of psi, ascending.  Exact structural knowledge for every
// family (Affine/QBracket/QParen roots, the quadratic in q^x for QLinear,
// companion-matrix roots for PolyProduct); ExpPoly has none.
std::vector<double> real_zeros(const PsiSpec& psi);

}  // namespace dbarg
