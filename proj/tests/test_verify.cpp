#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dbarg/mellin.hpp"
#include "dbarg/qspecial.hpp"
#include "dbarg/verify.hpp"

using namespace dbarg;

TEST_CASE("truncated matrices of the usual oscillator") {
  const PsiSpec psi = PsiSpec::affine(0.0);
  const TruncatedRep rep = build_truncated_rep(psi, classify(psi), 3, 0);
  CHECK(rep.a(0, 1).real() == doctest::Approx(1.0));
  CHECK(rep.a(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(rep.a(1, 0).real() == 0.0);
  CHECK(rep.n_op(2, 2).real() == doctest::Approx(2.0));
}

TEST_CASE("truncated matrices of the bracket oscillator") {
  const PsiSpec psi = PsiSpec::q_bracket_family(1.2);
  const TruncatedRep rep = build_truncated_rep(psi, classify(psi), 3, 0);
  CHECK(rep.a(0, 1).real() == doctest::Approx(std::sqrt(q_bracket(1.0, 1.2))));
  CHECK(rep.a(1, 2).real() == doctest::Approx(std::sqrt(q_bracket(2.0, 1.2))));
}

TEST_CASE("a-dagger is the conjugate transpose of a") {
  const PsiSpec families[] = {
      PsiSpec::affine(0.0),
      PsiSpec::q_bracket_family(1.2),
      PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5),
  };
  for (const PsiSpec& psi : families) {
    const SpectrumDescriptor spec = classify(psi);
    const long offset = spec.kind == SpectrumKind::FullLine ? -6 : spec.nu_minus;
    const TruncatedRep rep = build_truncated_rep(psi, spec, 12, offset);
    CHECK((rep.a_dagger - rep.a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("interior algebra residuals vanish") {
  {
    const PsiSpec psi = PsiSpec::affine(0.0);
    const VerificationReport r =
        algebra_residuals(build_truncated_rep(psi, classify(psi), 10, 0));
    for (const auto& e : r.entries) CHECK(e.computed <= 1e-13);
  }
  {
    const PsiSpec psi = PsiSpec::q_bracket_family(1.2);
    const TruncatedRep rep = build_truncated_rep(psi, classify(psi), 20, 0);
    const VerificationReport r = algebra_residuals(rep);
    CHECK(r.all_pass());
    // truncation shows up only on the boundary of a a-dagger - psi(N+1)
    const auto r4 = rep.a * rep.a_dagger;
    const double top = std::abs(r4(19, 19) - rep.psi(20.0));
    CHECK(top > 1.0);
  }
  {
    // full-line window has artificial edges on both sides
    const PsiSpec psi = PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0);
    const TruncatedRep rep = build_truncated_rep(psi, classify(psi), 20, -10);
    CHECK(algebra_residuals(rep).all_pass());
  }
  {
    // scaled residuals stay exact for large dimensions
    const PsiSpec psi = PsiSpec::affine(0.0);
    const VerificationReport r =
        algebra_residuals(build_truncated_rep(psi, classify(psi), 200, 0));
    CHECK(r.all_pass());
  }
}

TEST_CASE("negative psi under the square root is rejected") {
  const PsiSpec psi = PsiSpec::q_bracket_family(1.2);
  CHECK_THROWS_AS(build_truncated_rep(psi, classify(psi), 6, -3), InvalidParameter);
}

TEST_CASE("moments of the classical weight") {
  const MellinSolution sol = solve_mellin(PsiSpec::affine(0.0));
  const VerificationReport r = moment_check(sol, sol.psi, 0, 12, {}, 1e-8);
  CHECK(r.entries.size() == 13);
  CHECK(r.all_pass());
}

TEST_CASE("moments of the log-gaussian weight, both signs") {
  const MellinSolution sol = solve_mellin(PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5));
  const VerificationReport r = moment_check(sol, sol.psi, -5, 5, {}, 1e-9);
  CHECK(r.entries.size() == 11);
  CHECK(r.all_pass());
}

TEST_CASE("moments of the bracket and paren weights") {
  {
    const MellinSolution sol = solve_mellin(PsiSpec::q_bracket_family(1.2));
    CHECK(moment_check(sol, sol.psi, 0, 10, {}, 1e-5).all_pass());
  }
  {
    const MellinSolution sol = solve_mellin(PsiSpec::q_paren_family(1.5));
    CHECK(moment_check(sol, sol.psi, 0, 8, {}, 1e-6).all_pass());
  }
}

TEST_CASE("moments of the atomic measure") {
  const MellinSolution sol = solve_mellin(PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0));
  const VerificationReport r = moment_check(sol, sol.psi, -3, 6, {}, 1e-10);
  CHECK(r.entries.size() == 10);
  CHECK(r.all_pass());
}

TEST_CASE("negative moments are skipped for bounded spectra") {
  const MellinSolution sol = solve_mellin(PsiSpec::q_bracket_family(1.2));
  const VerificationReport r = moment_check(sol, sol.psi, -4, 3, {}, 1e-5);
  CHECK(r.entries.size() == 4);  // n = 0..3 only
}

TEST_CASE("resolution of identity") {
  const MellinSolution sol = solve_mellin(PsiSpec::affine(0.0));
  CHECK(resolution_identity_check(sol, sol.psi, 0, 1) == 0.0);
  CHECK(resolution_identity_check(sol, sol.psi, 3, 3) == doctest::Approx(1.0).epsilon(1e-8));

  const MellinSolution br = solve_mellin(PsiSpec::q_bracket_family(1.2));
  CHECK(resolution_identity_check(br, br.psi, 5, 5) == doctest::Approx(1.0).epsilon(1e-5));

  // identity diagonal = moment / factorial, same quadrature on both routes
  const double mom = moment_check(sol, sol.psi, 3, 3, {}, 1.0).entries[0].computed;
  const double fact = generalized_factorial(sol.psi, 3);
  CHECK(resolution_identity_check(sol, sol.psi, 3, 3) ==
        doctest::Approx(mom / fact).epsilon(1e-12));
}

TEST_CASE("upper-bounded moments equal the reflected partner's") {
  const MellinSolution up = solve_mellin(PsiSpec::poly_product({0.0, -1.0}));
  const MellinSolution down = solve_mellin(PsiSpec::affine(0.0));
  const VerificationReport ru = moment_check(up, up.psi, 0, 8, {}, 1e-8);
  const VerificationReport rd = moment_check(down, down.psi, 0, 8, {}, 1e-8);
  REQUIRE(ru.entries.size() == rd.entries.size());
  for (std::size_t i = 0; i < ru.entries.size(); ++i) {
    CHECK(std::abs(ru.entries[i].computed - rd.entries[i].computed) <=
          1e-9 * std::abs(rd.entries[i].computed));
    CHECK(ru.entries[i].target == doctest::Approx(rd.entries[i].target).epsilon(1e-12));
  }
}

TEST_CASE("weight functional equation residuals") {
  {
    const MellinSolution sol = solve_mellin(PsiSpec::affine(0.0));
    for (double x : {0.5, 1.0, 5.0}) CHECK(weight_ode_residual(sol, x) <= 1e-14);
  }
  {
    const MellinSolution sol = solve_mellin(PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5));
    for (double x : {0.5, 1.0, 5.0}) CHECK(weight_ode_residual(sol, x) <= 1e-12);
  }
  {
    const MellinSolution sol = solve_mellin(PsiSpec::q_bracket_family(1.2));
    for (double x : {0.5, 1.0, 5.0}) CHECK(weight_ode_residual(sol, x) <= 1e-8);
  }
  {
    const MellinSolution sol = solve_mellin(PsiSpec::q_paren_family(1.5));
    CHECK(weight_ode_residual(sol, 0.3) <= 1e-10);
    CHECK(weight_ode_residual(sol, 1e-6) <= 1e-10);  // F(0+) = 1 branch
  }
  {
    const MellinSolution sol = solve_mellin(PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0));
    CHECK_THROWS_AS(weight_ode_residual(sol, 1.0), UnsupportedForm);
  }
}
