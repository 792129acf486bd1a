#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dbarg/qspecial.hpp"
#include "dbarg/quadrature.hpp"

using namespace dbarg;

TEST_CASE("gaussian integral") {
  const double v = integrate_real_line([](double u) { return std::exp(-u * u); });
  CHECK(v == doctest::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-12));
}

TEST_CASE("shifted peak is found") {
  const double v =
      integrate_real_line([](double u) { return std::exp(-(u - 9.0) * (u - 9.0)); });
  CHECK(v == doctest::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-11));
}

TEST_CASE("mellin transform of exp(-x) is Gamma") {
  for (double rho : {1.0, 2.5, 5.0, 7.5}) {
    const double v = mellin_transform([](double x) { return std::exp(-x); }, rho);
    CHECK(v == doctest::Approx(std::tgamma(rho)).epsilon(1e-10));
  }
}

TEST_CASE("complex mellin transform matches the complex gamma") {
  const std::complex<double> rho(2.0, 1.0);
  const std::complex<double> v =
      mellin_transform_complex([](double x) { return std::exp(-x); }, rho);
  const std::complex<double> expect = std::exp(complex_log_gamma(rho));
  CHECK(std::abs(v - expect) <= 1e-9 * std::abs(expect));
}

TEST_CASE("log-gaussian moments") {
  // int exp(-ln^2 x / 2) x^(rho-1) dx = sqrt(2 pi) exp(rho^2/2)
  const double inv_s2pi = 1.0 / std::sqrt(2.0 * 3.14159265358979323846);
  for (double rho : {0.5, 1.0, 3.0}) {
    const double v = mellin_transform(
        [inv_s2pi](double x) {
          const double u = std::log(x);
          return std::exp(-0.5 * u * u) * inv_s2pi;
        },
        rho);
    CHECK(v == doctest::Approx(std::exp(0.5 * rho * rho)).epsilon(1e-11));
  }
}

TEST_CASE("panel cap raises") {
  QuadratureConfig cfg;
  cfg.max_panels = 4;
  cfg.rel_tol = 1e-14;
  auto wiggle = [](double u) { return std::sin(40.0 * u) * std::sin(40.0 * u) * std::exp(-u * u); };
  CHECK_THROWS_AS(integrate_real_line(wiggle, cfg), QuadratureFailure);
}
