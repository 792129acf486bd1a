#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dbarg/coherent.hpp"
#include "dbarg/qspecial.hpp"

using namespace dbarg;
using cplx = std::complex<double>;

TEST_CASE("coherent coefficients of the usual oscillator") {
  const PsiSpec psi = PsiSpec::affine(0.0);
  const SpectrumDescriptor spec = classify(psi);

  // z = 0 collapses to the vacuum
  const CoherentState vac = coherent_coefficients(psi, spec, 0.0);
  CHECK(vac.n_low == 0);
  CHECK(vac.n_high == 0);
  CHECK(std::abs(vac.amplitudes[0] - 1.0) == 0.0);

  // z = 1: c_n = 1/sqrt(n!)
  const CoherentState st = coherent_coefficients(psi, spec, 1.0, 1e-18);
  REQUIRE(st.n_low == 0);
  double fact = 1.0;
  for (long n = 0; n <= 8; ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    CHECK(std::abs(st.amplitudes[n] - 1.0 / std::sqrt(fact)) <= 1e-14);
  }
  CHECK(st.tail_bound <= 1e-18);
}

TEST_CASE("coherent coefficients of the full-line q-oscillator") {
  // psi = q^-x with q = 1/2: psi(n)! = q^{-n(n+1)/2}, both branches explicit
  const double q = 0.5;
  const PsiSpec psi = PsiSpec::q_linear(1.0, 0.0, 0.0, q);
  const SpectrumDescriptor spec = classify(psi);
  const CoherentState st = coherent_coefficients(psi, spec, 1.0, 1e-18);

  CHECK(st.n_low < -3);
  CHECK(st.n_high > 3);
  for (long n = st.n_low; n <= st.n_high; ++n) {
    const double expo = static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 2.0;
    // n >= 0: (psi(n)!)^{-1/2} = q^{n(n+1)/4}; n < 0: (psi(n)!)^{1/2} = q^{n(n+1)/4}
    const double expect = std::pow(q, expo / 2.0);
    const double got = std::abs(st.amplitudes[n - st.n_low]);
    CHECK(std::abs(got - expect) <= 1e-12 * expect);
  }
}

TEST_CASE("eigenvector relation on the truncated coefficients") {
  const PsiSpec psi = PsiSpec::q_bracket_family(1.2);
  const SpectrumDescriptor spec = classify(psi);
  const cplx z(1.3, -0.7);
  const CoherentState st = coherent_coefficients(psi, spec, z, 1e-16);
  double defect = 0.0;
  for (long n = st.n_low; n < st.n_high; ++n) {
    const cplx cn = st.amplitudes[n - st.n_low];
    const cplx cnp = st.amplitudes[n + 1 - st.n_low];
    defect += std::norm(cnp * std::sqrt(psi(static_cast<double>(n + 1))) - z * cn);
  }
  CHECK(std::sqrt(defect) <= 1e-10);
}

TEST_CASE("norm squared") {
  const PsiSpec usual = PsiSpec::affine(0.0);
  const SpectrumDescriptor s1 = classify(usual);
  const NormSum e = norm_squared(usual, s1, 1.0);
  CHECK(e.converged);
  CHECK(e.value == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

  CHECK(norm_squared(usual, s1, 0.0).value == doctest::Approx(1.0));
  CHECK(norm_squared(PsiSpec::q_bracket_family(1.2),
                     classify(PsiSpec::q_bracket_family(1.2)), 0.0)
            .value == doctest::Approx(1.0));

  // inside/outside the annulus of psi = 1 + 2^x
  const PsiSpec atomic = PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0);
  const SpectrumDescriptor s2 = classify(atomic);
  CHECK_FALSE(norm_squared(atomic, s2, 0.5).converged);
  CHECK(norm_squared(atomic, s2, 2.0).converged);
}

TEST_CASE("norm squared is nondecreasing in r2 for a Fock ladder") {
  const PsiSpec psi = PsiSpec::q_bracket_family(1.2);
  const SpectrumDescriptor spec = classify(psi);
  double prev = 0.0;
  for (double r2 = 0.0; r2 <= 8.0; r2 += 0.5) {
    const NormSum ns = norm_squared(psi, spec, r2);
    CHECK(ns.converged);
    CHECK(ns.value >= prev);
    prev = ns.value;
  }
}

TEST_CASE("kernel values") {
  const PsiSpec usual = PsiSpec::affine(0.0);
  CHECK(kernel_G(usual, 1.0).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  CHECK(kernel_G(usual, 0.0).real() == doctest::Approx(1.0));

  // bracket kernel at u = 1 equals the q-exponential series
  const PsiSpec br = PsiSpec::q_bracket_family(1.2);
  CHECK(kernel_G(br, 1.0).real() ==
        doctest::Approx(exp_q(1.0, 1.2, ExpQVariant::Bracket)).epsilon(1e-13));
}

TEST_CASE("kernel matches the coherent-state inner product") {
  const PsiSpec psi = PsiSpec::q_bracket_family(1.2);
  const SpectrumDescriptor spec = classify(psi);
  const cplx z(0.4, 0.8), zeta(0.9, -0.3);
  const CoherentState a = coherent_coefficients(psi, spec, std::conj(z), 1e-18);
  const CoherentState b = coherent_coefficients(psi, spec, zeta, 1e-18);
  cplx ip = 0.0;
  for (long n = std::max(a.n_low, b.n_low); n <= std::min(a.n_high, b.n_high); ++n) {
    ip += std::conj(a.amplitudes[n - a.n_low]) * b.amplitudes[n - b.n_low];
  }
  const cplx g = kernel_G(psi, z * zeta);
  CHECK(std::abs(g - ip) <= 1e-12 * (1.0 + std::abs(g)));
}

TEST_CASE("kernel equation residual is pure truncation error") {
  CHECK(kernel_residual(PsiSpec::affine(0.0), 1.0, 30) <= 1e-12);
  CHECK(kernel_residual(PsiSpec::q_bracket_family(1.2), 2.0, 40) <= 1e-10);
  CHECK(kernel_residual(PsiSpec::q_bracket_family(1.2), 1e-8, 20) <= 1e-12);
  // full-line kernel telescopes on both branches
  CHECK(kernel_residual(PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5), 1.0, 40) <= 1e-10);
}

TEST_CASE("domain violations") {
  const PsiSpec atomic = PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0);
  const SpectrumDescriptor spec = classify(atomic);
  CHECK_THROWS_AS(coherent_coefficients(atomic, spec, cplx(0.5, 0.0)), OutOfDomain);
  CHECK_THROWS_AS(coherent_coefficients(atomic, spec, cplx(0.0, 0.0)), OutOfDomain);
  CHECK_THROWS_AS(kernel_G(atomic, 0.3), NonConvergence);
}
