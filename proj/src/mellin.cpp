#include "dbarg/mellin.hpp"

#include <algorithm>
#include <cmath>

#include "dbarg/qspecial.hpp"

namespace dbarg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// fhat(rho) = sum_{n>=0} q^(-2 n rho) / [(1-q^-2)...(1-q^-2n)], Re rho > 0.
std::complex<double> bracket_fhat(double q, std::complex<double> rho) {
  const double l2q = 2.0 * std::log(q);
  std::complex<double> sum = 1.0;
  double dn = 1.0;
  for (long n = 1; n <= 100000; ++n) {
    dn *= 1.0 - std::exp(-l2q * static_cast<double>(n));
    const std::complex<double> term = std::exp(-l2q * static_cast<double>(n) * rho) / dn;
    sum += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

// Raw product a^rho prod_{p>=0} (1 + (lambda/a) q^(rho-p-1)), truncated when
// the tail factor is below round-off.
std::complex<double> atomic_hat_raw(double a, double lambda, double q,
                                    std::complex<double> rho) {
  const double ratio = lambda / a;
  const double lq = std::log(q);
  std::complex<double> prod = std::exp(rho * std::log(a));
  for (long p = 0; p <= 100000; ++p) {
    const std::complex<double> f =
        1.0 + ratio * std::exp(lq * (rho - static_cast<double>(p) - 1.0));
    prod *= f;
    if (ratio * std::exp(lq * (rho.real() - static_cast<double>(p) - 1.0)) < 1e-18) break;
  }
  return prod;
}

// log of Exp_q(y) = sum_{n>=0} y^n/(n)!, y >= 0, in log space so the weight
// 1/Exp_q(q x) underflows gracefully instead of overflowing the series.
double log_exp_q_paren(double y, double q) {
  if (y == 0.0) return 0.0;
  if (!std::isfinite(y)) return std::numeric_limits<double>::infinity();
  const double ly = std::log(y);
  std::vector<double> log_terms = {0.0};
  double max_log = 0.0;
  double log_fact = 0.0;
  for (long n = 1; n <= 1000000; ++n) {
    const double paren_n = q_paren(static_cast<double>(n), q);
    log_fact += std::log(paren_n);
    const double lt = static_cast<double>(n) * ly - log_fact;
    log_terms.push_back(lt);
    if (lt > max_log) max_log = lt;
    if (paren_n > y && lt < max_log - 45.0) break;
    if (n == 1000000) throw NonConvergence("paren exponential series cap");
  }
  double sum = 0.0;
  for (double lt : log_terms) sum += std::exp(lt - max_log);
  return max_log + std::log(sum);
}

double paren_weight_raw(double q, double x) {
  return std::exp(-log_exp_q_paren(q * x, q));
}

// Log-space evaluation of the bracket-family weight series
//   sum_{n>=0} exp(-G - n(2n+1) ln q - 2n L) / D_n,
// L = ln((q-1/q) x), G = (L + ln(q)/2)^2 / (2 ln q).  All terms positive;
// the max exponent is subtracted before summing.
double bracket_weight_series(double q, double x) {
  const double lq = std::log(q);
  const double L = std::log((q - 1.0 / q) * x);
  if (!std::isfinite(L)) return 0.0;
  const double G = (L + 0.5 * lq) * (L + 0.5 * lq) / (2.0 * lq);
  std::vector<double> log_terms;
  double max_log = -std::numeric_limits<double>::infinity();
  const double n_star = std::max(0.0, (-2.0 * L / lq - 1.0) / 4.0);
  double dn = 1.0;
  for (long n = 0; n <= 1000000; ++n) {
    if (n > 0) dn *= 1.0 - std::exp(-2.0 * lq * static_cast<double>(n));
    const double lt = -G - static_cast<double>(n) * (2.0 * n + 1.0) * lq -
                      2.0 * static_cast<double>(n) * L - std::log(dn);
    log_terms.push_back(lt);
    if (lt > max_log) max_log = lt;
    if (static_cast<double>(n) > n_star && lt < max_log - 45.0) break;
    if (n == 1000000) throw NonConvergence("bracket weight series cap");
  }
  double sum = 0.0;
  for (double lt : log_terms) sum += std::exp(lt - max_log);
  return std::exp(max_log) * sum;
}

// Catmull-Rom in (ln x, ln F) where the samples allow it; the log-density of
// every feasible family here is a slowly varying function of ln x, so the
// cubic is near-exact.  Falls back to linear interpolation of F across
// non-positive samples and to 0 outside the sampled support.
// real exponent of the BernoulliExp hat, usable far outside the double range
// of hat itself
double bernoulli_log_hat(const std::vector<double>& coeffs, double c) {
  double e = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const int m = static_cast<int>(n) + 1;
    e += coeffs[n] / static_cast<double>(m) *
         (bernoulli_poly(m, c) - bernoulli_poly(m, 1.0)).real();
  }
  return e;
}

// saddle contour for inverting at x: minimizes log hat(c) - c ln x, which is
// convex (hat is the Mellin transform of a positive function)
double saddle_contour(const std::vector<double>& coeffs, double x) {
  const double lx = std::log(x);
  double a = -60.0, b = 60.0;
  const double gr = 0.6180339887498949;
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  auto g = [&](double c) { return bernoulli_log_hat(coeffs, c) - c * lx; };
  double g1 = g(c1), g2 = g(c2);
  for (int it = 0; it < 120; ++it) {
    if (g1 < g2) {
      b = c2;
      c2 = c1;
      g2 = g1;
      c1 = b - gr * (b - a);
      g1 = g(c1);
    } else {
      a = c1;
      c1 = c2;
      g1 = g2;
      c2 = a + gr * (b - a);
      g2 = g(c2);
    }
  }
  return 0.5 * (a + b);
}

double interp_numeric_density(const MellinSolution& sol, double x) {
  const auto& xs = sol.grid_x;
  const auto& fs = sol.grid_f;
  if (xs.empty()) {
    throw InfeasibleContour("no numeric density samples: inverse Mellin infeasible");
  }
  if (x <= xs.front() || x >= xs.back()) return 0.0;
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
  const double u = std::log(x), u0 = std::log(xs[i]), u1 = std::log(xs[i + 1]);
  const double w = (u - u0) / (u1 - u0);
  if (i >= 1 && i + 2 < xs.size() && fs[i - 1] > 0.0 && fs[i] > 0.0 &&
      fs[i + 1] > 0.0 && fs[i + 2] > 0.0) {
    const double y0 = std::log(fs[i - 1]), y1 = std::log(fs[i]);
    const double y2 = std::log(fs[i + 1]), y3 = std::log(fs[i + 2]);
    const double a = -0.5 * y0 + 1.5 * y1 - 1.5 * y2 + 0.5 * y3;
    const double b = y0 - 2.5 * y1 + 2.0 * y2 - 0.5 * y3;
    const double c = 0.5 * (y2 - y0);
    return std::exp(((a * w + b) * w + c) * w + y1);
  }
  if (fs[i] > 0.0 && fs[i + 1] > 0.0) {
    return std::exp((1.0 - w) * std::log(fs[i]) + w * std::log(fs[i + 1]));
  }
  return (1.0 - w) * fs[i] + w * fs[i + 1];
}

std::vector<double> default_probe() {
  std::vector<double> t;
  for (int k = 1; k <= 24; ++k) t.push_back(0.25 * k);
  return t;
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw InvalidParameter("log_grid: bad range");
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) {
    g[i] = std::exp(a + (b - a) * static_cast<double>(i) / (n - 1));
  }
  return g;
}

MellinSolution solve_mellin(const PsiSpec& psi) {
  const NormalizedLadder norm = normalize_for_ladder(psi);
  MellinSolution sol;
  sol.psi = norm.psi;
  sol.spec = norm.spec;
  sol.reflected = norm.reflected;

  const PsiSpec& f = norm.psi;
  switch (f.family()) {
    case PsiFamily::Affine: {
      sol.hat_form = HatForm::Gamma;
      sol.weight_kind = WeightKind::Density;
      sol.sigma = f.sigma();
      sol.scale = 1.0;
      return sol;
    }
    case PsiFamily::PolyProduct: {
      const auto& c = f.coeffs();
      if (c.size() == 2 && c[1] > 0.0) {
        sol.hat_form = HatForm::Gamma;
        sol.weight_kind = WeightKind::Density;
        sol.sigma = c[0] / c[1];
        sol.scale = c[1];
        return sol;
      }
      throw NoClosedForm("no closed-form Mellin solution for " + f.describe());
    }
    case PsiFamily::QLinear: {
      const double lm = f.lambda_minus(), lp = f.lambda_plus(), c = f.constant(),
                   q = f.q();
      if (lm > 0.0 && lp == 0.0 && c == 0.0 && q < 1.0) {
        sol.hat_form = HatForm::LogGaussian;
        sol.weight_kind = WeightKind::Density;
        sol.lambda = lm;
        sol.q = q;
        return sol;
      }
      if (lp > 0.0 && lm == 0.0 && c == 0.0 && q > 1.0) {
        // lambda q^x = lambda (1/q)^(-x)
        sol.hat_form = HatForm::LogGaussian;
        sol.weight_kind = WeightKind::Density;
        sol.lambda = lp;
        sol.q = 1.0 / q;
        return sol;
      }
      const bool atomic_up = lp > 0.0 && lm == 0.0 && c > 0.0 && q > 1.0;
      const bool atomic_down = lm > 0.0 && lp == 0.0 && c > 0.0 && q < 1.0;
      if (atomic_up || atomic_down) {
        sol.hat_form = HatForm::AtomicProduct;
        sol.weight_kind = WeightKind::AtomicMeasure;
        sol.atom_a = c;
        sol.atom_lambda = atomic_up ? lp : lm;
        sol.q = atomic_up ? q : 1.0 / q;
        sol.normalization = 1.0 / atomic_hat_raw(sol.atom_a, sol.atom_lambda, sol.q, 1.0).real();
        // atoms at x_n = a q^n with raw mass (lambda/a)^n a q^n / ((q-1)...(q^n-1))
        const double ratio = sol.atom_lambda / sol.atom_a;
        double cn = 1.0;
        double mass_sum = 0.0;
        std::vector<Atom> raw;
        double heavy_peak = 0.0;
        for (long n = 0; n < 2000; ++n) {
          if (n > 0) cn *= std::pow(sol.q, static_cast<double>(n)) - 1.0;
          Atom atom;
          atom.x = sol.atom_a * std::pow(sol.q, static_cast<double>(n));
          atom.w = std::pow(ratio, static_cast<double>(n)) * atom.x / cn;
          raw.push_back(atom);
          mass_sum += atom.w;
          const double heavy = atom.w * std::pow(atom.x, 7.0);  // guard high moments
          if (heavy > heavy_peak) heavy_peak = heavy;
          if (n >= 24 && heavy < 1e-18 * heavy_peak) break;
        }
        for (Atom& atom : raw) atom.w /= mass_sum;
        sol.atoms = std::move(raw);
        return sol;
      }
      throw NoClosedForm("no closed-form Mellin solution for " + f.describe());
    }
    case PsiFamily::QBracket: {
      sol.hat_form = HatForm::BracketForm;
      sol.weight_kind = WeightKind::Density;
      sol.q = f.q();
      sol.normalization = (sol.q - 1.0 / sol.q) / bracket_fhat(sol.q, 1.0).real();
      return sol;
    }
    case PsiFamily::QParen: {
      sol.hat_form = HatForm::ParenForm;
      sol.weight_kind = WeightKind::Density;
      sol.q = f.q();
      const double q = sol.q;
      sol.normalization =
          1.0 / mellin_transform([q](double x) { return paren_weight_raw(q, x); }, 1.0);
      return sol;
    }
    case PsiFamily::ExpPoly: {
      sol.hat_form = HatForm::BernoulliExp;
      sol.weight_kind = WeightKind::NumericDensity;
      sol.exp_coeffs = f.coeffs();
      sol.feasibility = inversion_feasibility(sol);
      if (sol.feasibility == Feasibility::Decaying) {
        sol.grid_x = log_grid(1e-8, 1e6, 601);
        sol.grid_f.reserve(sol.grid_x.size());
        double peak = 0.0;
        for (double x : sol.grid_x) {
          const double f = invert_mellin_numeric(sol, x).value;
          sol.grid_f.push_back(f);
          peak = std::max(peak, f);
        }
        // the contour quadrature carries an absolute noise floor; samples
        // below it are not signal and would poison log-interpolation
        for (double& f : sol.grid_f) {
          if (f < peak * 1e-12) f = 0.0;
        }
      }
      return sol;
    }
  }
  throw Error("unreachable family");
}

std::complex<double> hat_eval(const MellinSolution& sol, std::complex<double> rho) {
  switch (sol.hat_form) {
    case HatForm::Gamma: {
      if (!(rho.real() + sol.sigma > 0.0)) {
        throw OutOfDomain("hat_eval: Re(rho) below the abscissa of convergence");
      }
      return std::exp((rho - 1.0) * std::log(sol.scale) + complex_log_gamma(rho + sol.sigma) -
                      complex_log_gamma(std::complex<double>(1.0 + sol.sigma, 0.0)));
    }
    case HatForm::LogGaussian: {
      const double lq = std::log(sol.q);
      return std::exp((rho - 1.0) * std::log(sol.lambda) - 0.5 * (rho * rho - rho) * lq);
    }
    case HatForm::BernoulliExp: {
      std::complex<double> e = 0.0;
      for (std::size_t n = 0; n < sol.exp_coeffs.size(); ++n) {
        const int m = static_cast<int>(n) + 1;
        e += sol.exp_coeffs[n] / static_cast<double>(m) *
             (bernoulli_poly(m, rho) - bernoulli_poly(m, 1.0));
      }
      return std::exp(e);
    }
    case HatForm::AtomicProduct:
      return sol.normalization * atomic_hat_raw(sol.atom_a, sol.atom_lambda, sol.q, rho);
    case HatForm::BracketForm: {
      if (!(rho.real() > 0.0)) {
        throw OutOfDomain("hat_eval: Re(rho) must be > 0 for the bracket form");
      }
      const double q = sol.q;
      const double lq = std::log(q);
      return sol.normalization *
             std::exp(0.5 * rho * (rho - 1.0) * lq - rho * std::log(q - 1.0 / q)) *
             bracket_fhat(q, rho);
    }
    case HatForm::ParenForm: {
      if (!(rho.real() > 0.0)) {
        throw OutOfDomain("hat_eval: Re(rho) must be > 0 for the paren form");
      }
      const double q = sol.q;
      auto w = [q](double x) { return paren_weight_raw(q, x); };
      if (rho.imag() == 0.0) {
        return sol.normalization * mellin_transform(w, rho.real());
      }
      return sol.normalization * mellin_transform_complex(w, rho);
    }
  }
  throw Error("unreachable form");
}

double weight_eval(const MellinSolution& sol, double x) {
  if (!(x > 0.0)) throw InvalidParameter("weight_eval: x must be > 0");
  switch (sol.hat_form) {
    case HatForm::Gamma: {
      const double y = x / sol.scale;
      return std::exp(sol.sigma * std::log(y) - y - std::lgamma(1.0 + sol.sigma)) / sol.scale;
    }
    case HatForm::LogGaussian: {
      const double lq = std::log(sol.q);  // q < 1, lq < 0
      const double L = std::log(x / sol.lambda);
      const double norm_c =
          sol.lambda * std::sqrt(2.0 * kPi * std::abs(lq)) * std::exp(-lq / 8.0);
      return std::exp(L * L / (2.0 * lq) - 0.5 * L) / norm_c;
    }
    case HatForm::BracketForm: {
      // exact inverse of the normalized hat: series * (q-1/q) / (sqrt(2 pi ln q) fhat(1))
      const double q = sol.q;
      const double c = (q - 1.0 / q) / std::sqrt(2.0 * kPi * std::log(q));
      return c / bracket_fhat(q, 1.0).real() * bracket_weight_series(q, x);
    }
    case HatForm::ParenForm:
      return sol.normalization * paren_weight_raw(sol.q, x);
    case HatForm::BernoulliExp:
      return interp_numeric_density(sol, x);
    case HatForm::AtomicProduct:
      throw UnsupportedForm("weight is an atomic measure; use the atoms list");
  }
  throw Error("unreachable form");
}

Inversion invert_mellin_numeric(const MellinSolution& sol, double x, double contour_re,
                                double t_max, long n_points) {
  if (!(x > 0.0)) throw InvalidParameter("invert_mellin_numeric: x must be > 0");
  const Feasibility verdict = inversion_feasibility(sol, contour_re);
  if (verdict != Feasibility::Decaying) {
    throw InfeasibleContour("inverse Mellin infeasible: " + to_string(verdict));
  }
  const double c = contour_re;
  const double hat0 = std::abs(hat_eval(sol, std::complex<double>(c, 0.0)));
  if (t_max <= 0.0) {
    t_max = 4.0;
    while (t_max < 512.0 &&
           std::abs(hat_eval(sol, std::complex<double>(c, t_max))) > 1e-12 * hat0) {
      t_max *= 2.0;
    }
  }
  if (n_points <= 0) {
    const double h = std::min(0.02, 2.0 * kPi / (16.0 * (1.0 + std::abs(std::log(x)))));
    n_points = 2 * static_cast<long>(std::ceil(t_max / h)) + 1;
  }
  const double h = 2.0 * t_max / static_cast<double>(n_points - 1);

  std::complex<double> acc = 0.0;
  double prev_re = 0.0;
  long flips = 0;
  for (long k = 0; k < n_points; ++k) {
    const double t = -t_max + h * static_cast<double>(k);
    const std::complex<double> rho(c, t);
    const std::complex<double> g = hat_eval(sol, rho) * std::exp(-rho * std::log(x));
    const double w = (k == 0 || k == n_points - 1) ? 0.5 : 1.0;
    acc += w * g;
    if (k > 0 && g.real() * prev_re < 0.0) ++flips;
    prev_re = g.real();
  }
  Inversion out;
  out.value = (acc * h).real() / (2.0 * kPi);
  out.diag.t_max = t_max;
  out.diag.n_points = n_points;
  const double edge =
      std::abs(hat_eval(sol, std::complex<double>(c, t_max))) * std::pow(x, -c);
  const double mid = std::abs(hat_eval(sol, std::complex<double>(c, 0.0))) * std::pow(x, -c);
  out.diag.edge_magnitude = mid > 0.0 ? edge / mid : edge;
  out.diag.oscillation = static_cast<double>(flips) / static_cast<double>(n_points);
  return out;
}

Feasibility inversion_feasibility(const MellinSolution& sol, double contour_re,
                                  std::vector<double> t_probe) {
  if (t_probe.empty()) t_probe = default_probe();
  std::sort(t_probe.begin(), t_probe.end());
  std::vector<double> mag;
  mag.reserve(t_probe.size());
  double peak = 0.0;
  for (double t : t_probe) {
    const double m = std::abs(hat_eval(sol, std::complex<double>(contour_re, t)));
    mag.push_back(m);
    if (m > peak) peak = m;
  }
  const std::size_t n = mag.size();
  const std::size_t tail_start = n - std::max<std::size_t>(2, n / 4);
  bool tail_down = true, tail_up = true;
  for (std::size_t i = tail_start; i + 1 < n; ++i) {
    if (mag[i + 1] > mag[i] * (1.0 + 1e-9)) tail_down = false;
    if (mag[i + 1] < mag[i] * (1.0 - 1e-9)) tail_up = false;
  }
  if (tail_down && mag.back() <= 0.1 * peak) return Feasibility::Decaying;
  if (tail_up && mag.back() >= mag.front()) return Feasibility::Diverging;
  return Feasibility::Inconclusive;
}

PositivityScan positivity_scan(const MellinSolution& sol, const std::vector<double>& x_grid) {
  if (sol.weight_kind == WeightKind::AtomicMeasure) {
    throw UnsupportedForm("positivity_scan: atomic masses are checked directly");
  }
  if (x_grid.empty()) throw InvalidParameter("positivity_scan: empty grid");
  PositivityScan out;
  out.min_value = std::numeric_limits<double>::infinity();
  for (double x : x_grid) {
    const double v = weight_eval(sol, x);
    if (v < out.min_value) {
      out.min_value = v;
      out.argmin = x;
    }
  }
  return out;
}

std::string to_string(HatForm form) {
  switch (form) {
    case HatForm::Gamma: return "Gamma";
    case HatForm::LogGaussian: return "LogGaussian";
    case HatForm::BernoulliExp: return "BernoulliExp";
    case HatForm::AtomicProduct: return "AtomicProduct";
    case HatForm::BracketForm: return "BracketForm";
    case HatForm::ParenForm: return "ParenForm";
  }
  return "?";
}

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Density: return "Density";
    case WeightKind::AtomicMeasure: return "AtomicMeasure";
    case WeightKind::NumericDensity: return "NumericDensity";
  }
  return "?";
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Decaying: return "Decaying";
    case Feasibility::Diverging: return "Diverging";
    case Feasibility::Inconclusive: return "Inconclusive";
  }
  return "?";
}

}  // namespace dbarg
