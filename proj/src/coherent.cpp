#include "dbarg/coherent.hpp"

#include <cmath>
#include <limits>

#include "dbarg/qspecial.hpp"

namespace dbarg {

namespace {

constexpr long kTermCap = 1000000;

bool in_open_annulus(double r2, const CoherentDomain& dom) {
  return r2 > dom.inner_r2 && r2 < dom.outer_r2;
}

}  // namespace

CoherentState coherent_coefficients(const PsiSpec& psi, const SpectrumDescriptor& spec,
                                    std::complex<double> z, double tol) {
  (void)spec;  // the normalized classification is recomputed for consistency
  const NormalizedLadder norm = normalize_for_ladder(psi);
  const CoherentDomain dom = coherent_domain(norm.psi, norm.spec);
  const PsiSpec& f = norm.psi;
  const double r2 = std::norm(z);

  CoherentState state;
  state.z = z;

  const bool bounded = norm.spec.kind == SpectrumKind::LowerBounded;
  const long bottom = bounded ? norm.spec.nu_minus : 0;  // 0 is a placeholder for -inf

  if (z == std::complex<double>(0.0, 0.0)) {
    if (!dom.origin_included) {
      throw OutOfDomain("coherent_coefficients: z = 0 lies outside the domain");
    }
    state.n_low = state.n_high = bottom;
    state.amplitudes = {1.0};
    state.tail_bound = 0.0;
    return state;
  }
  if (!in_open_annulus(r2, dom)) {
    throw OutOfDomain("coherent_coefficients: |z|^2 outside the coherent domain");
  }

  // Fock branch upward from n = 0 with c_0 = 1, c_m = c_{m-1} z / sqrt(psi(m)).
  std::vector<std::complex<double>> up = {1.0};
  double up_tail = 0.0;
  {
    std::complex<double> c = 1.0;
    for (long m = 1;; ++m) {
      if (m > kTermCap) throw NonConvergence("coherent_coefficients: Fock branch cap");
      c *= z / std::sqrt(f(static_cast<double>(m)));
      up.push_back(c);
      const double ratio = r2 / f(static_cast<double>(m + 1));
      if (ratio < 1.0) {
        const double bound = std::norm(c) * ratio / (1.0 - ratio);
        if (bound <= tol) {
          up_tail = bound;
          break;
        }
      }
    }
  }

  // Negative branch downward: c_{n-1} = c_n sqrt(psi(n)) / z.
  std::vector<std::complex<double>> down;  // index -1, -2, ...
  double down_tail = 0.0;
  if (!bounded || bottom < 0) {
    std::complex<double> c = 1.0;
    for (long n = 0;; --n) {
      if (-n > kTermCap) throw NonConvergence("coherent_coefficients: negative branch cap");
      c *= std::sqrt(f(static_cast<double>(n))) / z;
      down.push_back(c);
      const long idx = n - 1;  // index just filled
      if (bounded && idx == bottom) break;
      const double ratio = f(static_cast<double>(idx)) / r2;
      if (ratio < 1.0) {
        const double bound = std::norm(c) * ratio / (1.0 - ratio);
        if (bound <= tol) {
          down_tail = bound;
          break;
        }
      }
    }
  }

  state.n_low = -static_cast<long>(down.size());
  state.n_high = static_cast<long>(up.size()) - 1;
  state.amplitudes.reserve(down.size() + up.size());
  for (auto it = down.rbegin(); it != down.rend(); ++it) state.amplitudes.push_back(*it);
  for (const auto& c : up) state.amplitudes.push_back(c);
  state.tail_bound = up_tail + down_tail;
  return state;
}

NormSum norm_squared(const PsiSpec& psi, const SpectrumDescriptor& spec, double r2,
                     double tol) {
  (void)spec;
  if (r2 < 0.0) throw InvalidParameter("norm_squared: r2 must be >= 0");
  const NormalizedLadder norm = normalize_for_ladder(psi);
  const PsiSpec& f = norm.psi;
  const bool bounded = norm.spec.kind == SpectrumKind::LowerBounded;
  const long bottom = bounded ? norm.spec.nu_minus : 0;

  NormSum out;
  if (r2 == 0.0) {
    if (bounded) {
      out.value = 1.0;
      out.converged = true;
      out.terms = 1;
      return out;
    }
    out.value = std::numeric_limits<double>::infinity();
    return out;  // negative branch blows up at the origin
  }

  double sum = 1.0;  // |c_0|^2
  long terms = 1;
  // upward
  {
    double t = 1.0, prev = 1.0;
    int quiet = 0, rising = 0;
    for (long m = 1; m <= kTermCap; ++m) {
      t *= r2 / f(static_cast<double>(m));
      sum += t;
      ++terms;
      if (t > prev) {
        if (++rising >= 50) {
          out.value = sum;
          out.terms = terms;
          return out;  // diverges
        }
      } else {
        rising = 0;
      }
      prev = t;
      if (t < tol * (1.0 + sum)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      if (m == kTermCap) {
        out.value = sum;
        out.terms = terms;
        return out;  // cap without settling: not converged
      }
    }
  }
  // downward
  if (!bounded || bottom < 0) {
    double t = 1.0, prev_t = 1.0;
    int quiet = 0, rising = 0;
    for (long n = 0; -n <= kTermCap; --n) {
      t *= f(static_cast<double>(n)) / r2;
      sum += t;
      ++terms;
      const long idx = n - 1;
      if (bounded && idx == bottom) break;
      if (t > prev_t) {
        if (++rising >= 50) {
          out.value = sum;
          out.terms = terms;
          return out;
        }
      } else {
        rising = 0;
      }
      prev_t = t;
      if (t < tol * (1.0 + sum)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      if (-n == kTermCap) {
        out.value = sum;
        out.terms = terms;
        return out;
      }
    }
  }
  out.value = sum;
  out.converged = true;
  out.terms = terms;
  return out;
}

std::complex<double> kernel_G(const PsiSpec& psi, std::complex<double> u, double tol) {
  const NormalizedLadder norm = normalize_for_ladder(psi);
  const CoherentDomain dom = coherent_domain(norm.psi, norm.spec);
  const PsiSpec& f = norm.psi;
  const bool bounded = norm.spec.kind == SpectrumKind::LowerBounded;
  const long bottom = bounded ? norm.spec.nu_minus : 0;
  const double au = std::abs(u);

  if (au == 0.0) {
    if (!dom.origin_included) throw NonConvergence("kernel_G: u = 0 outside domain");
    return 1.0;
  }
  if (!(au > dom.inner_r2 && au < dom.outer_r2)) {
    throw NonConvergence("kernel_G: |u| outside the kernel's convergence annulus");
  }

  std::complex<double> sum = 1.0;
  {
    std::complex<double> t = 1.0;
    int quiet = 0;
    for (long m = 1; m <= kTermCap; ++m) {
      t *= u / f(static_cast<double>(m));
      sum += t;
      if (std::abs(t) < tol * (1.0 + std::abs(sum))) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      if (m == kTermCap) throw NonConvergence("kernel_G: Fock branch cap");
    }
  }
  if (!bounded || bottom < 0) {
    std::complex<double> t = 1.0;
    int quiet = 0;
    for (long n = 0; -n <= kTermCap; --n) {
      t *= f(static_cast<double>(n)) / u;
      sum += t;
      const long idx = n - 1;
      if (bounded && idx == bottom) break;
      if (std::abs(t) < tol * (1.0 + std::abs(sum))) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      if (-n == kTermCap) throw NonConvergence("kernel_G: negative branch cap");
    }
  }
  return sum;
}

double kernel_residual(const PsiSpec& psi, double u, long n_terms) {
  if (!(u > 0.0)) throw InvalidParameter("kernel_residual: u must be > 0");
  const NormalizedLadder norm = normalize_for_ladder(psi);
  const PsiSpec& f = norm.psi;
  const bool bounded = norm.spec.kind == SpectrumKind::LowerBounded;
  const long bottom = bounded ? std::max(norm.spec.nu_minus, -n_terms) : -n_terms;

  // g_n u^n over the index window [bottom, n_terms]
  std::vector<double> weighted(static_cast<std::size_t>(n_terms - bottom + 1));
  const long zero_pos = -bottom;
  weighted[zero_pos] = 1.0;
  double t = 1.0;
  for (long m = 1; m <= n_terms; ++m) {
    t *= u / f(static_cast<double>(m));
    weighted[zero_pos + m] = t;
  }
  t = 1.0;
  for (long n = 0; n - 1 >= bottom; --n) {
    t *= f(static_cast<double>(n)) / u;
    weighted[zero_pos + n - 1] = t;
  }

  double lhs = 0.0, rhs = 0.0;
  for (long n = bottom; n <= n_terms; ++n) {
    const double gn = weighted[zero_pos + n];
    lhs += u * gn;
    rhs += f(static_cast<double>(n)) * gn;
  }
  return std::abs(lhs - rhs);
}

}  // namespace dbarg
