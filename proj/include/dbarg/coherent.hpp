#pragma once

#include <complex>
#include <vector>

#include "dbarg/classify.hpp"
#include "dbarg/psi.hpp"

namespace dbarg {

// Truncated eigenvector of the annihilation operator, in the normalized
// ladder indexing (lowest state at n = nu_minus <= 0 for bounded spectra,
// two-sided for full-line spectra).  amplitudes[i] belongs to index
// n_low + i.  tail_bound bounds the squared norm of all dropped terms.
struct CoherentState {
  long n_low = 0;
  long n_high = 0;
  std::vector<std::complex<double>> amplitudes;
  std::complex<double> z;
  double tail_bound = 0.0;
};

CoherentState coherent_coefficients(const PsiSpec& psi, const SpectrumDescriptor& spec,
                                    std::complex<double> z, double tol = 1e-14);

struct NormSum {
  double value = 0.0;
  bool converged = false;
  long terms = 0;
};

// sum_n |c_n|^2 at |z|^2 = r2.  Reports divergence instead of throwing so the
// verdict can be compared against the coherent domain.
NormSum norm_squared(const PsiSpec& psi, const SpectrumDescriptor& spec, double r2,
                     double tol = 1e-14);

// Overlap kernel G(u) = sum_n u^n / psi(n)! over the spectrum's index set
// (full-line spectra include the negative branch with the product-convention
// factorials).  G(conj(z) zeta) equals <conj(z)|zeta>.
std::complex<double> kernel_G(const PsiSpec& psi, std::complex<double> u,
                              double tol = 1e-14);

// Residual |u G(u) - sum_n psi(n) g_n u^n| of the kernel equation with
// psi(x d/dx) applied termwise; pure truncation error for consistent series.
double kernel_residual(const PsiSpec& psi, double u, long n_terms);

}  // namespace dbarg
