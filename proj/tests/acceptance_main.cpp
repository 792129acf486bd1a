// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dbarg/classify.hpp"
#include "dbarg/coherent.hpp"
#include "dbarg/mellin.hpp"
#include "dbarg/qspecial.hpp"
#include "dbarg/quadrature.hpp"
#include "dbarg/verify.hpp"

using namespace dbarg;
using cplx = std::complex<double>;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. classical limit: moments n! to 1e-8, identity diagonal to 1e-8, < 5 s
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const MellinSolution sol = solve_mellin(PsiSpec::affine(0.0));
  double worst = 0.0;
  const VerificationReport moments = moment_check(sol, sol.psi, 0, 12, {}, 1e-8);
  for (const auto& e : moments.entries) worst = std::max(worst, e.rel_err);
  bool pass = moments.all_pass();
  for (long m = 0; m <= 8; ++m) {
    const double v = resolution_identity_check(sol, sol.psi, m, m);
    worst = std::max(worst, std::abs(v - 1.0));
    if (std::abs(v - 1.0) > 1e-8) pass = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 5.0) pass = false;
  report(1, "classical limit (moments n!, identity diagonal)", pass,
         "worst err " + fmt(worst) + ", " + fmt(secs) + " s");
}

// 2. psi = lambda q^-x, q = 1/2: quadrature Mellin of F at integers vs the
//    factorial convention (1e-6); numeric inversion vs the closed form (1e-6)
void criterion_2() {
  const MellinSolution sol = solve_mellin(PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5));
  bool pass = true;
  double worst = 0.0;
  for (long n = -6; n <= 6; ++n) {
    const double quad =
        mellin_transform([&sol](double x) { return weight_eval(sol, x); },
                         static_cast<double>(n) + 1.0);
    const double fact = generalized_factorial(sol.psi, n);
    const double target = n >= 0 ? fact : 1.0 / fact;
    const double rel = std::abs(quad - target) / std::abs(target);
    worst = std::max(worst, rel);
    if (rel > 1e-6) pass = false;
  }
  for (double x : {0.5, 1.0, 2.0}) {
    const Inversion inv = invert_mellin_numeric(sol, x);
    const double rel = std::abs(inv.value - weight_eval(sol, x)) / weight_eval(sol, x);
    worst = std::max(worst, rel);
    if (rel > 1e-6) pass = false;
  }
  report(2, "lambda q^-N suite (Mellin pair both directions)", pass,
         "worst rel err " + fmt(worst));
}

// 3. psi = [x], q = 1.2: positive weight, moments [n]! (1e-5), functional
//    equation residual (1e-8)
void criterion_3() {
  const MellinSolution sol = solve_mellin(PsiSpec::q_bracket_family(1.2));
  const PositivityScan scan = positivity_scan(sol, log_grid(1e-6, 1e3, 501));
  bool pass = scan.min_value > 0.0;
  double worst = 0.0;
  const VerificationReport moments = moment_check(sol, sol.psi, 0, 10, {}, 1e-5);
  for (const auto& e : moments.entries) worst = std::max(worst, e.rel_err);
  if (!moments.all_pass()) pass = false;
  for (double x : {0.5, 1.0, 5.0}) {
    const double r = weight_ode_residual(sol, x);
    if (r > 1e-8) pass = false;
  }
  report(3, "bracket suite (positivity, moments, functional equation)", pass,
         "min F " + fmt(scan.min_value) + ", worst moment rel err " + fmt(worst));
}

// 4. psi = (x), q = 1.5: positive weight, moments (n)! (1e-6)
void criterion_4() {
  const MellinSolution sol = solve_mellin(PsiSpec::q_paren_family(1.5));
  const PositivityScan scan = positivity_scan(sol, log_grid(1e-6, 1e3, 501));
  bool pass = scan.min_value > 0.0;
  double worst = 0.0;
  const VerificationReport moments = moment_check(sol, sol.psi, 0, 8, {}, 1e-6);
  for (const auto& e : moments.entries) worst = std::max(worst, e.rel_err);
  if (!moments.all_pass()) pass = false;
  report(4, "paren suite (positivity, moments)", pass,
         "min F " + fmt(scan.min_value) + ", worst moment rel err " + fmt(worst));
}

// 5. psi = 1 + q^x, q = 2: atomic Mellin sum vs the product form, 1e-10
void criterion_5() {
  const MellinSolution sol = solve_mellin(PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0));
  bool pass = sol.weight_kind == WeightKind::AtomicMeasure;
  double worst = 0.0;
  for (int rho = 1; rho <= 6; ++rho) {
    double atom_sum = 0.0;
    for (const Atom& atom : sol.atoms) {
      atom_sum += atom.w * std::pow(atom.x, static_cast<double>(rho - 1));
    }
    const double prod = hat_eval(sol, static_cast<double>(rho)).real();
    const double rel = std::abs(atom_sum - prod) / std::abs(prod);
    worst = std::max(worst, rel);
    if (rel > 1e-10) pass = false;
  }
  report(5, "atomic measure matches the product form at rho = 1..6", pass,
         "worst rel err " + fmt(worst));
}

// 6. parity diagnostic for psi = exp(poly): p = 0 decays, p = 1 diverges;
//    p = 0 hat agrees with the log-gaussian hat to 1e-10
void criterion_6() {
  const MellinSolution p0 = solve_mellin(PsiSpec::exp_poly({0.0, std::log(2.0)}));
  const MellinSolution p1 = solve_mellin(PsiSpec::exp_poly({0.0, 0.0, 0.0, 1.0}));
  bool pass = inversion_feasibility(p0) == Feasibility::Decaying &&
              inversion_feasibility(p1) == Feasibility::Diverging;
  const MellinSolution lg = solve_mellin(PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5));
  double worst = 0.0;
  for (double rho = 0.5; rho <= 4.0; rho += 0.125) {
    const cplx a = hat_eval(p0, rho);
    const cplx b = hat_eval(lg, rho);
    const double rel = std::abs(a - b) / std::abs(b);
    worst = std::max(worst, rel);
    if (rel > 1e-10) pass = false;
  }
  report(6, "inversion parity (p even decays, p odd diverges)", pass,
         "worst hat rel err " + fmt(worst));
}

// 7. interior residuals of the algebra identities at dim = 30
void criterion_7() {
  struct Case {
    const char* name;
    PsiSpec psi;
    long dim;
    long offset;
  };
  const std::vector<Case> cases = {
      {"affine", PsiSpec::affine(0.0), 30, 0},
      {"qbracket", PsiSpec::q_bracket_family(1.2), 30, 0},
      {"qparen", PsiSpec::q_paren_family(1.5), 30, 0},
      {"qlinear q^-x", PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5), 30, -15},
      {"qlinear a+q^x", PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0), 30, -15},
      {"explog", PsiSpec::exp_poly({0.0, std::log(2.0)}), 30, -15},
      {"polyprod window", PsiSpec::poly_product({0.0, 5.0, -1.0}), 5, 0},
  };
  bool pass = true;
  double worst = 0.0;
  for (const Case& c : cases) {
    const TruncatedRep rep = build_truncated_rep(c.psi, classify(c.psi), c.dim, c.offset);
    const VerificationReport r = algebra_residuals(rep, 1e-12);
    for (const auto& e : r.entries) worst = std::max(worst, e.computed);
    if (!r.all_pass()) pass = false;
  }
  report(7, "truncated algebra identities, every family", pass,
         "worst interior residual " + fmt(worst));
}

// 8. classification golden table
void criterion_8() {
  bool pass = true;
  {
    const PsiSpec psi = PsiSpec::q_bracket_family(1.2);
    const SpectrumDescriptor s = classify(psi);
    const CoherentDomain d = coherent_domain(psi, s);
    if (s.kind != SpectrumKind::LowerBounded || s.nu_minus != 0 || d.ladder != Ladder::A ||
        d.inner_r2 != 0.0 || !std::isinf(d.outer_r2) || !d.origin_included) {
      pass = false;
    }
  }
  {
    const PsiSpec psi = PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5);
    const SpectrumDescriptor s = classify(psi);
    const CoherentDomain d = coherent_domain(psi, s);
    if (s.kind != SpectrumKind::FullLine || d.ladder != Ladder::A || d.inner_r2 != 0.0 ||
        !std::isinf(d.outer_r2) || d.origin_included) {
      pass = false;
    }
  }
  {
    const PsiSpec psi = PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0);
    const SpectrumDescriptor s = classify(psi);
    const CoherentDomain d = coherent_domain(psi, s);
    if (s.kind != SpectrumKind::FullLine || d.ladder != Ladder::A ||
        d.inner_r2 != 1.0 || !std::isinf(d.outer_r2)) {
      pass = false;
    }
  }
  {
    const PsiSpec psi = PsiSpec::poly_product({0.0, 5.0, -1.0});
    const SpectrumDescriptor s = classify(psi);
    const CoherentDomain d = coherent_domain(psi, s);
    if (s.kind != SpectrumKind::FiniteWindow || s.nu_minus != 0 || s.nu_plus != 4 ||
        d.ladder != Ladder::None) {
      pass = false;
    }
  }
  report(8, "classification golden table", pass, "");
}

// 9. recursion hat(rho+1) = psi(rho) hat(rho) on 100 random rho per solution
void criterion_9() {
  const std::vector<MellinSolution> sols = {
      solve_mellin(PsiSpec::affine(0.0)),
      solve_mellin(PsiSpec::q_linear(1.0, 0.0, 0.0, 0.5)),
      solve_mellin(PsiSpec::q_bracket_family(1.2)),
      solve_mellin(PsiSpec::q_paren_family(1.5)),
      solve_mellin(PsiSpec::q_linear(0.0, 1.0, 1.0, 2.0)),
      solve_mellin(PsiSpec::exp_poly({0.0, std::log(2.0)})),
  };
  bool pass = true;
  double worst = 0.0, worst_norm = 0.0;
  std::mt19937 gen(424242);
  std::uniform_real_distribution<double> dist(0.5, 6.0);
  for (const MellinSolution& sol : sols) {
    const double n1 = std::abs(hat_eval(sol, 1.0).real() - 1.0);
    worst_norm = std::max(worst_norm, n1);
    if (n1 > 1e-14) pass = false;
    for (int i = 0; i < 100; ++i) {
      const double rho = dist(gen);
      const cplx lhs = hat_eval(sol, rho + 1.0);
      const cplx rhs = sol.psi(rho) * hat_eval(sol, rho);
      const double rel = std::abs(lhs - rhs) / std::abs(lhs);
      worst = std::max(worst, rel);
      if (rel > 1e-10) pass = false;
    }
  }
  report(9, "hat recursion and normalization for every solution", pass,
         "worst rel residual " + fmt(worst) + ", worst |hat(1)-1| " + fmt(worst_norm));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  }
  return g_failures;
}
