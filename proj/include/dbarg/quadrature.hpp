#pragma once

#include <complex>
#include <functional>

#include "dbarg/errors.hpp"

namespace dbarg {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  int max_panels = 10000;
  // integrand support detection: expand until |g| < peak * support_cutoff
  double support_cutoff = 1e-18;
};

// Adaptive Gauss-Legendre over the whole real line.  The integrand must
// decay in both directions; the support window is found by stepping outward
// from `center` before the panels are refined.
double integrate_real_line(const std::function<double(double)>& g,
                           const QuadratureConfig& cfg = {}, double center = 0.0);

std::complex<double> integrate_real_line_complex(
    const std::function<std::complex<double>(double)>& g,
    const QuadratureConfig& cfg = {}, double center = 0.0);

// Mellin transform int_0^inf F(x) x^(rho-1) dx via x = e^u.
double mellin_transform(const std::function<double(double)>& weight, double rho,
                        const QuadratureConfig& cfg = {});

std::complex<double> mellin_transform_complex(const std::function<double(double)>& weight,
                                              std::complex<double> rho,
                                              const QuadratureConfig& cfg = {});

}  // namespace dbarg
