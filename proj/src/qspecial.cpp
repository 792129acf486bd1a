#include "dbarg/qspecial.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "dbarg/psi.hpp"

namespace dbarg {

double q_bracket(double x, double q) {
  if (!(q > 0.0) || q == 1.0) {
    throw InvalidParameter("q_bracket: q must be > 0 and != 1");
  }
  const double lq = std::log(q);
  return std::sinh(x * lq) / std::sinh(lq);
}

double q_paren(double x, double q) {
  if (!(q > 1.0)) {
    throw InvalidParameter("q_paren: q must be > 1");
  }
  return std::expm1(x * std::log(q)) / (q - 1.0);
}

double generalized_factorial(const PsiSpec& psi, long n) {
  const double mu = psi.mu();
  double prod = 1.0;
  if (n >= 0) {
    for (long k = 1; k <= n; ++k) prod *= psi(mu + static_cast<double>(k));
    return prod;
  }
  for (long k = n + 1; k <= 0; ++k) {
    const double f = psi(mu + static_cast<double>(k));
    if (f == 0.0) {
      throw ZeroFactor("generalized_factorial: psi vanishes at lattice point " +
                       std::to_string(k) + " inside a negative-index product");
    }
    prod *= f;
  }
  return prod;
}

double exp_q(double x, double q, ExpQVariant variant, double tol) {
  if (!(q > 0.0) || q == 1.0) {
    throw InvalidParameter("exp_q: q must be > 0 and != 1");
  }
  if (variant == ExpQVariant::Bracket && q < 1.0) {
    q = 1.0 / q;  // bracket factorials are q <-> 1/q symmetric
  }
  if (variant == ExpQVariant::Paren && q < 1.0) {
    throw InvalidParameter("exp_q: paren variant requires q > 1");
  }

  double sum = 1.0;  // n = 0 term
  double term = 1.0;
  int quiet = 0;
  const long cap = 1000000;
  for (long n = 1; n <= cap; ++n) {
    const double fac = (variant == ExpQVariant::Bracket)
                           ? q_bracket(static_cast<double>(n), q)
                           : q_paren(static_cast<double>(n), q);
    term *= x / fac;
    sum += term;
    if (std::abs(term) < tol * (1.0 + std::abs(sum))) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw NonConvergence("exp_q: series did not settle within the term cap");
}

double bernoulli_number(int m) {
  if (m < 0) throw InvalidParameter("bernoulli_number: m must be >= 0");
  static const std::vector<double> table = [] {
    // B_j via sum_{j=0}^{m} C(m+1, j) B_j = 0; exact in double for this range.
    const int max_m = 40;
    std::vector<double> b(max_m + 1, 0.0);
    b[0] = 1.0;
    for (int mm = 1; mm <= max_m; ++mm) {
      double acc = 0.0;
      double binom = 1.0;  // C(mm+1, 0)
      for (int j = 0; j < mm; ++j) {
        acc += binom * b[j];
        binom = binom * static_cast<double>(mm + 1 - j) / static_cast<double>(j + 1);
      }
      b[mm] = -acc / (static_cast<double>(mm) + 1.0);
    }
    return b;
  }();
  if (m >= static_cast<int>(table.size())) {
    throw InvalidParameter("bernoulli_number: m out of supported range");
  }
  return table[m];
}

std::complex<double> bernoulli_poly(int m, std::complex<double> rho) {
  if (m < 0) throw InvalidParameter("bernoulli_poly: m must be >= 0");
  // B_m(x) = sum_k C(m,k) B_k x^{m-k}; Horner over descending powers.
  std::vector<double> coeff(m + 1);  // coeff[j] multiplies x^j
  double binom = 1.0;                // C(m, 0)
  for (int k = 0; k <= m; ++k) {
    coeff[m - k] = binom * bernoulli_number(k);
    binom = binom * static_cast<double>(m - k) / static_cast<double>(k + 1);
  }
  std::complex<double> acc = 0.0;
  for (int j = m; j >= 0; --j) acc = acc * rho + coeff[j];
  return acc;
}

double q_pochhammer_factor(long n, double q, PochhammerForm form) {
  if (n < 0) throw InvalidParameter("q_pochhammer_factor: n must be >= 0");
  double prod = 1.0;
  for (long k = 1; k <= n; ++k) {
    const double f = (form == PochhammerForm::QPowMinusOne)
                         ? std::pow(q, static_cast<double>(k)) - 1.0
                         : 1.0 - std::pow(q, -2.0 * static_cast<double>(k));
    if (f == 0.0) {
      throw ZeroFactor("q_pochhammer_factor: zero factor at k = " + std::to_string(k));
    }
    prod *= f;
  }
  return prod;
}

std::complex<double> complex_log_gamma(std::complex<double> z) {
  // Lanczos, g = 7, 9 coefficients.
  static const std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = 3.14159265358979323846;
  if (z.real() < 0.5) {
    // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    return std::log(pi / std::sin(pi * z)) - complex_log_gamma(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace dbarg
