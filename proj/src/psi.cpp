#include "dbarg/psi.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dbarg/qspecial.hpp"

namespace dbarg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_mu(double mu) {
  if (!(mu >= 0.0) || !(mu < 1.0)) {
    throw InvalidParameter("mu must lie in [0, 1)");
  }
}

// Drop trailing zero coefficients (highest powers).
std::vector<double> trimmed(std::vector<double> c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  return c;
}

double poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Coefficients of p(x + s) from those of p(x).
std::vector<double> poly_taylor_shift(const std::vector<double>& c, double s) {
  std::vector<double> out(c.size(), 0.0);
  for (std::size_t k = c.size(); k-- > 0;) {
    // multiply accumulated polynomial by (x + s) and add c[k]
    for (std::size_t j = out.size(); j-- > 1;) out[j] = out[j - 1] + s * out[j];
    out[0] = s * out[0] + c[k];
  }
  return out;
}

// Coefficients of p(s - x).
std::vector<double> poly_reflect(const std::vector<double>& c, double s) {
  std::vector<double> out(c.size(), 0.0);
  for (std::size_t k = c.size(); k-- > 0;) {
    for (std::size_t j = out.size(); j-- > 1;) out[j] = -out[j - 1] + s * out[j];
    out[0] = s * out[0] + c[k];
  }
  return out;
}

}  // namespace

PsiSpec PsiSpec::affine(double sigma, double mu) {
  check_mu(mu);
  PsiSpec p;
  p.family_ = PsiFamily::Affine;
  p.sigma_ = sigma;
  p.mu_ = mu;
  return p;
}

PsiSpec PsiSpec::q_linear(double lambda_minus, double lambda_plus, double c,
                          double q, double mu) {
  check_mu(mu);
  if (!(q > 0.0) || q == 1.0) {
    throw InvalidParameter("QLinear: q must be > 0 and != 1");
  }
  PsiSpec p;
  p.family_ = PsiFamily::QLinear;
  p.lambda_minus_ = lambda_minus;
  p.lambda_plus_ = lambda_plus;
  p.c_ = c;
  p.q_ = q;
  p.mu_ = mu;
  return p;
}

PsiSpec PsiSpec::exp_poly(std::vector<double> coeffs, double mu) {
  check_mu(mu);
  coeffs = trimmed(std::move(coeffs));
  if (coeffs.size() < 2 || coeffs.size() % 2 != 0) {
    throw InvalidParameter("ExpPoly: exponent degree must be odd");
  }
  if (!(coeffs.back() > 0.0)) {
    throw InvalidParameter("ExpPoly: highest coefficient must be > 0");
  }
  PsiSpec p;
  p.family_ = PsiFamily::ExpPoly;
  p.coeffs_ = std::move(coeffs);
  p.mu_ = mu;
  return p;
}

PsiSpec PsiSpec::q_bracket_family(double q, double mu) {
  check_mu(mu);
  if (!(q > 0.0) || q == 1.0) {
    throw InvalidParameter("QBracket: q must be > 0 and != 1");
  }
  if (q < 1.0) q = 1.0 / q;
  PsiSpec p;
  p.family_ = PsiFamily::QBracket;
  p.q_ = q;
  p.mu_ = mu;
  return p;
}

PsiSpec PsiSpec::q_paren_family(double q, double mu) {
  check_mu(mu);
  if (!(q > 1.0)) {
    throw InvalidParameter("QParen: q must be > 1");
  }
  PsiSpec p;
  p.family_ = PsiFamily::QParen;
  p.q_ = q;
  p.mu_ = mu;
  return p;
}

PsiSpec PsiSpec::poly_product(std::vector<double> coeffs, double mu) {
  check_mu(mu);
  if (coeffs.empty()) throw InvalidParameter("PolyProduct: empty coefficients");
  PsiSpec p;
  p.family_ = PsiFamily::PolyProduct;
  p.coeffs_ = trimmed(std::move(coeffs));
  p.mu_ = mu;
  return p;
}

double PsiSpec::operator()(double x) const {
  switch (family_) {
    case PsiFamily::Affine:
      return x + sigma_;
    case PsiFamily::QLinear: {
      const double lq = std::log(q_);
      return lambda_minus_ * std::exp(-x * lq) + lambda_plus_ * std::exp(x * lq) + c_;
    }
    case PsiFamily::ExpPoly:
      return std::exp(poly_eval(coeffs_, x));  // overflow -> +inf
    case PsiFamily::QBracket:
      return q_bracket(x, q_);
    case PsiFamily::QParen:
      return q_paren(x, q_);
    case PsiFamily::PolyProduct:
      return poly_eval(coeffs_, x);
  }
  throw Error("unreachable family");
}

PsiSpec PsiSpec::shifted(double s) const {
  if (s == 0.0) return *this;
  switch (family_) {
    case PsiFamily::Affine:
      return affine(sigma_ + s, mu_);
    case PsiFamily::QLinear: {
      const double qs = std::pow(q_, s);
      return q_linear(lambda_minus_ / qs, lambda_plus_ * qs, c_, q_, mu_);
    }
    case PsiFamily::ExpPoly: {
      PsiSpec p = *this;
      p.coeffs_ = poly_taylor_shift(coeffs_, s);
      return p;
    }
    case PsiFamily::QBracket: {
      const double d = q_ - 1.0 / q_;
      const double qs = std::pow(q_, s);
      return q_linear(-1.0 / (qs * d), qs / d, 0.0, q_, mu_);
    }
    case PsiFamily::QParen: {
      const double qs = std::pow(q_, s);
      return q_linear(0.0, qs / (q_ - 1.0), 1.0 / (1.0 - q_), q_, mu_);
    }
    case PsiFamily::PolyProduct: {
      PsiSpec p = *this;
      p.coeffs_ = poly_taylor_shift(coeffs_, s);
      return p;
    }
  }
  throw Error("unreachable family");
}

PsiSpec PsiSpec::reflected(double s) const {
  switch (family_) {
    case PsiFamily::Affine:
      return poly_product({s + sigma_, -1.0}, mu_);
    case PsiFamily::QLinear: {
      const double qs = std::pow(q_, s);
      return q_linear(lambda_plus_ * qs, lambda_minus_ / qs, c_, q_, mu_);
    }
    case PsiFamily::QBracket: {
      // [s - x] = q^s q^-x/(q - 1/q) - q^-s q^x/(q - 1/q)
      const double d = q_ - 1.0 / q_;
      const double qs = std::pow(q_, s);
      return q_linear(qs / d, -1.0 / (qs * d), 0.0, q_, mu_);
    }
    case PsiFamily::QParen: {
      // (s - x) = q^s q^-x/(q - 1) + 1/(1 - q)
      const double qs = std::pow(q_, s);
      return q_linear(qs / (q_ - 1.0), 0.0, 1.0 / (1.0 - q_), q_, mu_);
    }
    case PsiFamily::PolyProduct: {
      PsiSpec p = *this;
      p.coeffs_ = poly_reflect(coeffs_, s);
      return p;
    }
    case PsiFamily::ExpPoly:
      throw UnsupportedForm("reflect: ExpPoly never needs reflection (strictly positive)");
  }
  throw Error("unreachable family");
}

PsiSpec PsiSpec::with_mu(double mu) const {
  check_mu(mu);
  PsiSpec p = *this;
  p.mu_ = mu;
  return p;
}

std::string PsiSpec::describe() const {
  std::ostringstream os;
  switch (family_) {
    case PsiFamily::Affine:
      os << "psi(x) = x + " << sigma_;
      break;
    case PsiFamily::QLinear:
      os << "psi(x) = " << lambda_minus_ << " q^-x + " << lambda_plus_
         << " q^x + " << c_ << ", q = " << q_;
      break;
    case PsiFamily::ExpPoly: {
      os << "psi(x) = exp(";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << " + ";
        os << coeffs_[i] << " x^" << i;
      }
      os << ")";
      break;
    }
    case PsiFamily::QBracket:
      os << "psi(x) = [x], q = " << q_;
      break;
    case PsiFamily::QParen:
      os << "psi(x) = (x), q = " << q_;
      break;
    case PsiFamily::PolyProduct: {
      os << "psi(x) = ";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << " + ";
        os << coeffs_[i] << " x^" << i;
      }
      break;
    }
  }
  if (mu_ != 0.0) os << ", mu = " << mu_;
  return os.str();
}

double evaluate(const PsiSpec& psi, double x) { return psi(x); }

LatticeZeros find_lattice_zeros(const PsiSpec& psi, long n_min, long n_max,
                                double zero_tol) {
  if (n_min > n_max) throw InvalidParameter("find_lattice_zeros: n_min > n_max");
  LatticeZeros out;
  double prev = 0.0;
  bool have_prev = false;
  bool prev_was_zero = false;
  for (long n = n_min; n <= n_max; ++n) {
    const double v = psi(psi.mu() + static_cast<double>(n));
    const bool is_zero = std::abs(v) <= zero_tol;
    if (is_zero) out.zeros.push_back(n);
    if (have_prev && !is_zero && !prev_was_zero && prev * v < 0.0) {
      out.sign_change_without_zero = true;
    }
    prev = v;
    prev_was_zero = is_zero;
    have_prev = true;
  }
  return out;
}

double asymptote(const PsiSpec& psi, Direction direction) {
  const bool plus = direction == Direction::PlusInfinity;
  switch (psi.family()) {
    case PsiFamily::Affine:
      return plus ? kInf : -kInf;
    case PsiFamily::QLinear: {
      // the q^x term dominates toward +inf when q > 1, toward -inf when q < 1
      const bool plus_side_is_lp = (psi.q() > 1.0) == plus;
      const double dominant = plus_side_is_lp ? psi.lambda_plus() : psi.lambda_minus();
      if (dominant > 0.0) return kInf;
      if (dominant < 0.0) return -kInf;
      return psi.constant();
    }
    case PsiFamily::ExpPoly:
      return plus ? kInf : 0.0;
    case PsiFamily::QBracket:
      return plus ? kInf : -kInf;
    case PsiFamily::QParen:
      return plus ? kInf : 1.0 / (1.0 - psi.q());
    case PsiFamily::PolyProduct: {
      const auto& c = psi.coeffs();
      const std::size_t deg = c.size() - 1;
      if (deg == 0) return c[0];
      const double lead = c.back();
      const bool positive = plus ? (lead > 0.0) : (lead > 0.0) == (deg % 2 == 0);
      return positive ? kInf : -kInf;
    }
  }
  throw Error("unreachable family");
}

std::vector<double> real_zeros(const PsiSpec& psi) {
  std::vector<double> zeros;
  switch (psi.family()) {
    case PsiFamily::Affine:
      zeros.push_back(-psi.sigma());
      break;
    case PsiFamily::QBracket:
    case PsiFamily::QParen:
      zeros.push_back(0.0);
      break;
    case PsiFamily::ExpPoly:
      break;
    case PsiFamily::QLinear: {
      // psi = 0  <=>  lp t^2 + c t + lm = 0 with t = q^x > 0
      const double lp = psi.lambda_plus();
      const double lm = psi.lambda_minus();
      const double c = psi.constant();
      const double lq = std::log(psi.q());
      std::vector<double> ts;
      if (lp == 0.0) {
        if (c != 0.0) ts.push_back(-lm / c);
      } else {
        const double disc = c * c - 4.0 * lp * lm;
        if (disc == 0.0) {
          ts.push_back(-c / (2.0 * lp));
        } else if (disc > 0.0) {
          const double r = std::sqrt(disc);
          ts.push_back((-c - r) / (2.0 * lp));
          ts.push_back((-c + r) / (2.0 * lp));
        }
      }
      for (double t : ts) {
        if (t > 0.0) zeros.push_back(std::log(t) / lq);
      }
      break;
    }
    case PsiFamily::PolyProduct: {
      const auto& c = psi.coeffs();
      const std::size_t deg = c.size() - 1;
      if (deg == 0) break;
      double scale = 0.0;
      for (double v : c) scale = std::max(scale, std::abs(v));
      Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
      for (std::size_t i = 0; i + 1 < deg; ++i) companion(i + 1, i) = 1.0;
      for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c.back();
      Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const auto ev = es.eigenvalues()[i];
        if (std::abs(ev.imag()) <= 1e-9 * std::max(1.0, std::abs(ev.real()))) {
          zeros.push_back(ev.real());
        }
      }
      break;
    }
  }
  std::sort(zeros.begin(), zeros.end());
  // merge numerically coincident roots
  std::vector<double> unique;
  for (double z : zeros) {
    if (unique.empty() || std::abs(z - unique.back()) > 1e-9 * (1.0 + std::abs(z))) {
      unique.push_back(z);
    }
  }
  return unique;
}

}  // namespace dbarg
