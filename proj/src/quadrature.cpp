#include "dbarg/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace dbarg {

namespace {

constexpr int kGlOrder = 15;
constexpr double kMaxAbsU = 700.0;  // keeps exp(u) inside the finite double range

struct GlRule {
  std::array<double, kGlOrder> nodes{};
  std::array<double, kGlOrder> weights{};
};

// Legendre nodes by Newton iteration; exact to machine precision and avoids
// hand-typed tables.
const GlRule& gl_rule() {
  static const GlRule rule = [] {
    GlRule r;
    const int n = kGlOrder;
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(pi * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

template <typename T>
T gl_panel(const std::function<T(double)>& g, double a, double b) {
  const GlRule& r = gl_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  T acc{};
  for (int i = 0; i < kGlOrder; ++i) {
    acc += r.weights[i] * g(mid + half * r.nodes[i]);
  }
  return acc * half;
}

template <typename T>
T adapt(const std::function<T(double)>& g, double a, double b, T whole, double tol,
        int depth, int* panels, int max_panels) {
  const double m = 0.5 * (a + b);
  const T left = gl_panel(g, a, m);
  const T right = gl_panel(g, m, b);
  const T better = left + right;
  if (std::abs(better - whole) <= tol || depth >= 48) return better;
  *panels += 2;
  if (*panels > max_panels) {
    throw QuadratureFailure("adaptive quadrature exceeded the panel cap");
  }
  return adapt(g, a, m, left, 0.5 * tol, depth + 1, panels, max_panels) +
         adapt(g, m, b, right, 0.5 * tol, depth + 1, panels, max_panels);
}

// Expand outward from center until the integrand is negligible relative to
// the largest magnitude seen.
template <typename T>
std::pair<double, double> find_support(const std::function<T(double)>& g, double center,
                                       double cutoff) {
  double peak = 0.0;
  auto probe = [&](double u) {
    const double m = std::abs(g(u));
    if (m > peak) peak = m;
    return m;
  };
  probe(center);
  double lo = center - 1.0, hi = center + 1.0;
  double step = 1.0;
  int quiet = 0;
  while (hi - center < kMaxAbsU) {
    const double m = probe(hi);
    if (peak > 0.0 && m <= peak * cutoff) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    step *= 2.0;
    hi = std::min(center + kMaxAbsU, hi + step);
  }
  step = 1.0;
  quiet = 0;
  while (center - lo < kMaxAbsU) {
    const double m = probe(lo);
    if (peak > 0.0 && m <= peak * cutoff) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    step *= 2.0;
    lo = std::max(center - kMaxAbsU, lo - step);
  }
  return {lo, hi};
}

template <typename T>
T integrate_line(const std::function<T(double)>& g, const QuadratureConfig& cfg,
                 double center) {
  const auto [lo, hi] = find_support(g, center, cfg.support_cutoff);
  const int n0 = 16;
  const double h = (hi - lo) / n0;
  std::vector<T> rough(n0);
  double l1 = 0.0;  // oscillatory integrands cancel; control error against L1
  for (int i = 0; i < n0; ++i) {
    rough[i] = gl_panel(g, lo + i * h, lo + (i + 1) * h);
    l1 += std::abs(rough[i]);
  }
  const double tol = std::max(cfg.rel_tol * l1, 1e-300);
  int panels = n0;
  T total{};
  for (int i = 0; i < n0; ++i) {
    total += adapt(g, lo + i * h, lo + (i + 1) * h, rough[i], tol / n0, 0, &panels,
                   cfg.max_panels);
  }
  return total;
}

}  // namespace

double integrate_real_line(const std::function<double(double)>& g,
                           const QuadratureConfig& cfg, double center) {
  return integrate_line<double>(g, cfg, center);
}

std::complex<double> integrate_real_line_complex(
    const std::function<std::complex<double>(double)>& g, const QuadratureConfig& cfg,
    double center) {
  return integrate_line<std::complex<double>>(g, cfg, center);
}

double mellin_transform(const std::function<double(double)>& weight, double rho,
                        const QuadratureConfig& cfg) {
  auto g = [&weight, rho](double u) { return weight(std::exp(u)) * std::exp(u * rho); };
  return integrate_real_line(g, cfg, 0.0);
}

std::complex<double> mellin_transform_complex(const std::function<double(double)>& weight,
                                              std::complex<double> rho,
                                              const QuadratureConfig& cfg) {
  auto g = [&weight, rho](double u) {
    return weight(std::exp(u)) * std::exp(u * rho);
  };
  return integrate_real_line_complex(g, cfg, 0.0);
}

}  // namespace dbarg
