#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dbarg/classify.hpp"
#include "dbarg/mellin.hpp"
#include "dbarg/psi.hpp"
#include "dbarg/quadrature.hpp"

namespace dbarg {

// Dense matrices of a, a-dagger and N on the basis indices
// offset .. offset+dim-1 of the lattice mu + Z.
struct TruncatedRep {
  long dim = 0;
  long offset = 0;
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd a_dagger;
  Eigen::MatrixXcd n_op;
  PsiSpec psi;
};

TruncatedRep build_truncated_rep(const PsiSpec& psi, const SpectrumDescriptor& spec,
                                 long dim, long offset);

struct CheckEntry {
  std::string name;
  double target = 0.0;
  double computed = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool relative = true;  // which error the tolerance governs
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckEntry> entries;
  bool all_pass() const;
  void add(std::string name, double target, double computed, double tolerance,
           bool relative);
  void merge(const VerificationReport& other);
};

// Max-norm residuals of [a,N]-a, [a-dagger,N]+a-dagger, a-dagger a - psi(N),
// a a-dagger - psi(N+1) on the interior block (both boundary rows/columns
// excluded; truncation corrupts only those).  Residuals are scaled by the
// largest |psi| on the window so the 1e-12 gate is meaningful at any matrix
// scale.
VerificationReport algebra_residuals(const TruncatedRep& rep, double tolerance = 1e-12);

// Moments int F(x) x^n dx (or the atomic sum) against psi(n)! for n >= 0 and
// its reciprocal for n < 0.  Negative n are attempted only for full-line
// spectra.
VerificationReport moment_check(const MellinSolution& sol, const PsiSpec& psi, long n_lo,
                                long n_hi, const QuadratureConfig& quad = {},
                                double rel_tol = 1e-8);

// (m,n) matrix element of int F(z conj(z)) |conj(z)><conj(z)| d2z / pi.
// Vanishes for m != n by the angular integral; the diagonal reduces to the
// radial moment over psi(m)!.
double resolution_identity_check(const MellinSolution& sol, const PsiSpec& psi, long m,
                                 long n, const QuadratureConfig& quad = {});

// Residual |x F(x) - [psi(-x d/dx) F](x)| using the exact dilation (or
// derivative) action on the closed-form density.
double weight_ode_residual(const MellinSolution& sol, double x);

}  // namespace dbarg
