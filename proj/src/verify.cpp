#include "dbarg/verify.hpp"

#include <cmath>

#include "dbarg/qspecial.hpp"

namespace dbarg {

bool VerificationReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

void VerificationReport::add(std::string name, double target, double computed,
                             double tolerance, bool relative) {
  CheckEntry e;
  e.name = std::move(name);
  e.target = target;
  e.computed = computed;
  e.abs_err = std::abs(computed - target);
  e.rel_err = target != 0.0 ? e.abs_err / std::abs(target) : e.abs_err;
  e.tolerance = tolerance;
  e.relative = relative;
  e.pass = (relative ? e.rel_err : e.abs_err) <= tolerance;
  entries.push_back(std::move(e));
}

void VerificationReport::merge(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

TruncatedRep build_truncated_rep(const PsiSpec& psi, const SpectrumDescriptor& spec,
                                 long dim, long offset) {
  if (dim < 1) throw InvalidParameter("build_truncated_rep: dim must be >= 1");
  (void)spec;
  TruncatedRep rep;
  rep.dim = dim;
  rep.offset = offset;
  rep.psi = psi;
  rep.a = Eigen::MatrixXcd::Zero(dim, dim);
  rep.a_dagger = Eigen::MatrixXcd::Zero(dim, dim);
  rep.n_op = Eigen::MatrixXcd::Zero(dim, dim);
  const double mu = psi.mu();
  for (long i = 0; i < dim; ++i) {
    const double n = mu + static_cast<double>(offset + i);
    rep.n_op(i, i) = n;
    if (i > 0) {
      const double v = psi(n);
      if (v < 0.0) {
        throw InvalidParameter("build_truncated_rep: psi < 0 at lattice point " +
                               std::to_string(offset + i) + ", square root undefined");
      }
      rep.a(i - 1, i) = std::sqrt(v);       // a |n> = sqrt(psi(n)) |n-1>
      rep.a_dagger(i, i - 1) = std::sqrt(v);
    }
  }
  return rep;
}

VerificationReport algebra_residuals(const TruncatedRep& rep, double tolerance) {
  if (rep.dim < 3) throw InvalidParameter("algebra_residuals: dim must be >= 3");
  const long dim = rep.dim;
  const double mu = rep.psi.mu();

  Eigen::MatrixXcd psi_n = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd psi_n1 = Eigen::MatrixXcd::Zero(dim, dim);
  double scale = 1.0;
  for (long i = 0; i < dim; ++i) {
    const double n = mu + static_cast<double>(rep.offset + i);
    psi_n(i, i) = rep.psi(n);
    psi_n1(i, i) = rep.psi(n + 1.0);
    scale = std::max({scale, std::abs(rep.psi(n)), std::abs(rep.psi(n + 1.0))});
  }

  const Eigen::MatrixXcd r1 = rep.a * rep.n_op - rep.n_op * rep.a - rep.a;
  const Eigen::MatrixXcd r2 =
      rep.a_dagger * rep.n_op - rep.n_op * rep.a_dagger + rep.a_dagger;
  const Eigen::MatrixXcd r3 = rep.a_dagger * rep.a - psi_n;
  const Eigen::MatrixXcd r4 = rep.a * rep.a_dagger - psi_n1;

  auto interior_max = [dim](const Eigen::MatrixXcd& m) {
    double mx = 0.0;
    for (long i = 1; i + 1 < dim; ++i) {
      for (long j = 1; j + 1 < dim; ++j) mx = std::max(mx, std::abs(m(i, j)));
    }
    return mx;
  };

  VerificationReport rep_out;
  rep_out.add("interior_residual_[a,N]-a", 0.0, interior_max(r1) / scale, tolerance, false);
  rep_out.add("interior_residual_[adag,N]+adag", 0.0, interior_max(r2) / scale, tolerance,
              false);
  rep_out.add("interior_residual_adag.a-psi(N)", 0.0, interior_max(r3) / scale, tolerance,
              false);
  rep_out.add("interior_residual_a.adag-psi(N+1)", 0.0, interior_max(r4) / scale, tolerance,
              false);
  return rep_out;
}

namespace {

double radial_moment(const MellinSolution& sol, long n, const QuadratureConfig& quad) {
  if (sol.weight_kind == WeightKind::AtomicMeasure) {
    double acc = 0.0;
    for (const Atom& atom : sol.atoms) {
      acc += atom.w * std::pow(atom.x, static_cast<double>(n));
    }
    return acc;
  }
  auto w = [&sol](double x) { return weight_eval(sol, x); };
  return mellin_transform(w, static_cast<double>(n) + 1.0, quad);
}

}  // namespace

VerificationReport moment_check(const MellinSolution& sol, const PsiSpec& psi, long n_lo,
                                long n_hi, const QuadratureConfig& quad, double rel_tol) {
  (void)psi;  // targets come from the normalized problem stored in the solution
  VerificationReport out;
  const bool full_line = sol.spec.kind == SpectrumKind::FullLine;
  const long lo = full_line ? n_lo : std::max(n_lo, 0L);
  for (long n = lo; n <= n_hi; ++n) {
    const double fact = generalized_factorial(sol.psi, n);
    const double target = n >= 0 ? fact : 1.0 / fact;
    const double computed = radial_moment(sol, n, quad);
    out.add("moment_n=" + std::to_string(n), target, computed, rel_tol, true);
  }
  return out;
}

double resolution_identity_check(const MellinSolution& sol, const PsiSpec& psi, long m,
                                 long n, const QuadratureConfig& quad) {
  (void)psi;
  if (m != n) return 0.0;  // angular integral of exp(i theta (n-m)) vanishes
  const double fact = generalized_factorial(sol.psi, m);
  if (m >= 0) return radial_moment(sol, m, quad) / fact;
  return radial_moment(sol, m, quad) * fact;  // negative branch: target 1/psi(m)!
}

double weight_ode_residual(const MellinSolution& sol, double x) {
  if (!(x > 0.0)) throw InvalidParameter("weight_ode_residual: x must be > 0");
  switch (sol.hat_form) {
    case HatForm::Gamma: {
      // psi(y) = scale (y + sigma); -x F' = (x/scale - sigma) F analytically
      const double f = weight_eval(sol, x);
      const double minus_x_fp = (x / sol.scale - sol.sigma) * f;
      return std::abs(x * f - sol.scale * (minus_x_fp + sol.sigma * f));
    }
    case HatForm::LogGaussian:
      return std::abs(x * weight_eval(sol, x) - sol.lambda * weight_eval(sol, sol.q * x));
    case HatForm::BracketForm: {
      const double q = sol.q;
      const double rhs =
          (weight_eval(sol, x / q) - weight_eval(sol, q * x)) / (q - 1.0 / q);
      return std::abs(x * weight_eval(sol, x) - rhs);
    }
    case HatForm::ParenForm: {
      const double q = sol.q;
      const double rhs = (weight_eval(sol, x / q) - weight_eval(sol, x)) / (q - 1.0);
      return std::abs(x * weight_eval(sol, x) - rhs);
    }
    case HatForm::BernoulliExp:
    case HatForm::AtomicProduct:
      throw UnsupportedForm("weight_ode_residual: no termwise action for " +
                            to_string(sol.hat_form));
  }
  throw Error("unreachable form");
}

}  // namespace dbarg
