#pragma once

#include <complex>
#include <cstdint>

#include "dbarg/errors.hpp"

namespace dbarg {

class PsiSpec;

// q-bracket [x] = (q^x - q^-x)/(q - q^-1).  Odd in x, invariant under
// q -> 1/q.  Computed as sinh(x ln q)/sinh(ln q), which makes the symmetry
// exact and stays stable for q near 1.
double q_bracket(double x, double q);

// q-paren (x) = (q^x - 1)/(q - 1), requires q > 1.
double q_paren(double x, double q);

// Generalized factorial psi(n)! over the lattice mu + Z:
//   n >= 1: product psi(mu+1) * ... * psi(mu+n)
//   n == 0: 1
//   n <  0: product psi(mu+n+1) * ... * psi(mu+0)
// The negative branch is the product convention, so psi(-1)! = psi(mu) and
// the moment sequence hat{F}(n+1) = psi(n)! (n>=0), 1/psi(n)! (n<0) obeys
// one uniform recursion hat{F}(n+1) = psi(n) hat{F}(n).
double generalized_factorial(const PsiSpec& psi, long n);

enum class ExpQVariant : std::uint8_t { Bracket, Paren };

// Series sum_{n>=0} x^n / [n]!  (Bracket) or x^n / (n)!  (Paren).
// q < 1 is mapped to 1/q for the bracket variant; the paren variant
// requires q > 1.  Both factorials grow superexponentially for q > 1 so the
// series are entire in x.
double exp_q(double x, double q, ExpQVariant variant, double tol = 1e-15);

// Bernoulli polynomial B_m(rho), exact-coefficient expansion in powers of
// rho.  Satisfies B_m(rho+1) - B_m(rho) = m rho^{m-1}.
std::complex<double> bernoulli_poly(int m, std::complex<double> rho);

// Bernoulli number B_m (B_1 = -1/2 convention).
double bernoulli_number(int m);

enum class PochhammerForm : std::uint8_t {
  QPowMinusOne,   // (q-1)(q^2-1)...(q^n-1)
  OneMinusQNeg2,  // (1-q^-2)(1-q^-4)...(1-q^-2n)
};

double q_pochhammer_factor(long n, double q, PochhammerForm form);

// log Gamma(z) for complex z (Lanczos, ~1e-13 relative accuracy), used for
// Mellin evaluation on vertical contours.
std::complex<double> complex_log_gamma(std::complex<double> z);

}  // namespace dbarg
