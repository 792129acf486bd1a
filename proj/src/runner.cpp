#include "dbarg/runner.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <random>

#include "dbarg/classify.hpp"
#include "dbarg/coherent.hpp"
#include "dbarg/mellin.hpp"
#include "dbarg/qspecial.hpp"
#include "dbarg/report.hpp"
#include "dbarg/verify.hpp"

namespace dbarg {

namespace {

void add_lower_bound(VerificationReport* rep, std::string name, double bound,
                     double computed) {
  CheckEntry e;
  e.name = std::move(name);
  e.target = bound;
  e.computed = computed;
  e.abs_err = computed >= bound ? 0.0 : bound - computed;
  e.rel_err = e.abs_err;
  e.tolerance = 0.0;
  e.relative = false;
  e.pass = computed >= bound;
  rep->entries.push_back(std::move(e));
}

Json config_echo(const RunConfig& cfg) {
  Json j = Json::object();
  j["family"] = cfg.family;
  j["q"] = cfg.q;
  j["sigma"] = cfg.sigma;
  j["lambda_minus"] = cfg.lambda_minus;
  j["lambda_plus"] = cfg.lambda_plus;
  j["const"] = cfg.constant;
  j["a"] = cfg.a;
  j["mu"] = cfg.mu;
  Json coeffs = Json::array();
  for (double c : cfg.coeffs) coeffs.push(c);
  j["coeffs"] = std::move(coeffs);
  j["dim"] = cfg.dim;
  j["tol"] = cfg.tol;
  j["moment_lo"] = cfg.moment_lo;
  j["moment_hi"] = cfg.moment_hi;
  j["moment_rel_tol"] = cfg.moment_rel_tol;
  j["grid_lo"] = cfg.grid_lo;
  j["grid_hi"] = cfg.grid_hi;
  j["grid_n"] = cfg.grid_n;
  return j;
}

Json spectrum_json(const SpectrumDescriptor& spec) {
  Json j = Json::object();
  j["kind"] = to_string(spec.kind);
  if (spec.kind == SpectrumKind::LowerBounded || spec.kind == SpectrumKind::FiniteWindow) {
    j["nu_minus"] = spec.nu_minus;
  }
  if (spec.kind == SpectrumKind::UpperBounded || spec.kind == SpectrumKind::FiniteWindow) {
    j["nu_plus"] = spec.nu_plus;
  }
  j["mu"] = spec.mu;
  return j;
}

Json domain_json(const SpectrumDescriptor& spec, const CoherentDomain& dom) {
  Json j = Json::object();
  j["ladder"] = to_string(dom.ladder);
  j["inner_r2"] = dom.inner_r2;
  j["outer_r2"] = dom.outer_r2;
  j["origin_included"] = dom.origin_included;
  j["description"] = describe_domain(spec, dom);
  return j;
}

// Deterministic recursion and normalization checks every solution must pass.
void hat_checks(const MellinSolution& sol, VerificationReport* rep, int n_samples,
                unsigned seed) {
  const double hat1 = hat_eval(sol, 1.0).real();
  rep->add("hat_normalization_F(1)", 1.0, hat1, 1e-14, false);

  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(0.5, 6.0);
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double rho = dist(gen);
    const std::complex<double> lhs = hat_eval(sol, rho + 1.0);
    const std::complex<double> rhs = sol.psi(rho) * hat_eval(sol, rho);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  rep->add("hat_recursion_max_rel_residual", 0.0, worst, 1e-10, false);
}

void export_weight_csv(const MellinSolution& sol, const RunConfig& cfg) {
  if (sol.weight_kind == WeightKind::AtomicMeasure) {
    std::vector<std::vector<double>> rows;
    for (const Atom& atom : sol.atoms) rows.push_back({atom.x, atom.w});
    write_csv(cfg.csv_path, {"x_k", "w_k"}, rows);
    return;
  }
  std::vector<double> grid;
  if (sol.weight_kind == WeightKind::NumericDensity) {
    grid = sol.grid_x;
  } else {
    grid = log_grid(cfg.grid_lo, cfg.grid_hi, cfg.grid_n);
  }
  std::vector<std::vector<double>> rows;
  for (double x : grid) rows.push_back({x, weight_eval(sol, x)});
  write_csv(cfg.csv_path, {"x", "F"}, rows);
}

void cmd_classify(const PsiSpec& psi, const RunConfig&, Json* report,
                  VerificationReport*) {
  const SpectrumDescriptor spec = classify(psi);
  const CoherentDomain dom = coherent_domain(psi, spec);
  (*report)["spectrum"] = spectrum_json(spec);
  (*report)["domain"] = domain_json(spec, dom);
}

void cmd_domain(const PsiSpec& psi, const RunConfig&, Json* report,
                VerificationReport* checks) {
  const SpectrumDescriptor spec = classify(psi);
  const CoherentDomain dom = coherent_domain(psi, spec);
  (*report)["spectrum"] = spectrum_json(spec);
  (*report)["domain"] = domain_json(spec, dom);
  if (dom.ladder == Ladder::None) return;

  auto probe = [&](double r2, bool expect_converged) {
    const NormSum ns = norm_squared(psi, spec, r2);
    CheckEntry e;
    e.name = (expect_converged ? "norm_converges_at_r2=" : "norm_diverges_at_r2=") +
             Json::format_double(r2);
    e.target = expect_converged ? 1.0 : 0.0;
    e.computed = ns.converged ? 1.0 : 0.0;
    e.abs_err = std::abs(e.computed - e.target);
    e.rel_err = e.abs_err;
    e.tolerance = 0.0;
    e.relative = false;
    e.pass = e.abs_err == 0.0;
    checks->entries.push_back(e);
  };

  double inside = 0.0;
  if (dom.inner_r2 == 0.0) {
    inside = std::isinf(dom.outer_r2) ? 1.0 : 0.5 * dom.outer_r2;
  } else {
    inside = std::isinf(dom.outer_r2) ? 2.0 * dom.inner_r2
                                      : 0.5 * (dom.inner_r2 + dom.outer_r2);
  }
  probe(inside, true);
  if (dom.inner_r2 > 0.0) probe(0.5 * dom.inner_r2, false);
  if (!std::isinf(dom.outer_r2)) probe(2.0 * dom.outer_r2, false);
}

void cmd_weight(const PsiSpec& psi, const RunConfig& cfg, Json* report,
                VerificationReport* checks) {
  const MellinSolution sol = solve_mellin(psi);
  Json j = Json::object();
  j["hat_form"] = to_string(sol.hat_form);
  j["weight_kind"] = to_string(sol.weight_kind);
  j["normalization"] = sol.normalization;
  j["reflected"] = sol.reflected;
  j["normalized_psi"] = sol.psi.describe();
  j["n_atoms"] = static_cast<long>(sol.atoms.size());
  (*report)["solution"] = std::move(j);

  const Feasibility feas = inversion_feasibility(sol);
  (*report)["inversion_feasibility"] = to_string(feas);

  hat_checks(sol, checks, 10, 20240917u);

  if (sol.weight_kind == WeightKind::AtomicMeasure) {
    double min_mass = std::numeric_limits<double>::infinity();
    for (const Atom& atom : sol.atoms) min_mass = std::min(min_mass, atom.w);
    add_lower_bound(checks, "atomic_mass_min", -1e-12, min_mass);
  } else if (sol.weight_kind == WeightKind::NumericDensity &&
             feas != Feasibility::Decaying) {
    checks->add("inverse_mellin_feasible", 1.0, 0.0, 0.0, false);
  } else {
    const std::vector<double> grid =
        sol.weight_kind == WeightKind::NumericDensity
            ? sol.grid_x
            : log_grid(cfg.grid_lo, cfg.grid_hi, cfg.grid_n);
    const PositivityScan scan = positivity_scan(sol, grid);
    (*report)["positivity_argmin"] = scan.argmin;
    add_lower_bound(checks, "weight_min_on_grid", -1e-12, scan.min_value);
  }

  if (!cfg.csv_path.empty()) {
    export_weight_csv(sol, cfg);
    (*report)["csv"] = cfg.csv_path;
  }
}

void cmd_verify(const PsiSpec& psi, const RunConfig& cfg, Json* report,
                VerificationReport* checks) {
  const SpectrumDescriptor spec = classify(psi);
  const CoherentDomain dom = coherent_domain(psi, spec);
  (*report)["spectrum"] = spectrum_json(spec);
  (*report)["domain"] = domain_json(spec, dom);

  // truncated matrix identities
  if (spec.kind != SpectrumKind::NoUnitaryRep) {
    long dim = cfg.dim;
    long offset = 0;
    switch (spec.kind) {
      case SpectrumKind::LowerBounded: offset = spec.nu_minus; break;
      case SpectrumKind::UpperBounded: offset = spec.nu_plus + 1 - dim; break;
      case SpectrumKind::FullLine: offset = -dim / 2; break;
      case SpectrumKind::FiniteWindow:
        offset = spec.nu_minus;
        dim = std::min(dim, spec.nu_plus - spec.nu_minus + 1);
        break;
      default: break;
    }
    if (dim >= 3) {
      const TruncatedRep rep = build_truncated_rep(psi, spec, dim, offset);
      checks->merge(algebra_residuals(rep, 1e-12));
    }
  }

  // weight-side checks, when a Bargmann weight exists
  bool have_weight = true;
  try {
    const MellinSolution sol = solve_mellin(psi);
    hat_checks(sol, checks, 100, 987654321u);
    // interpolated numeric densities only resolve the moments whose mass sits
    // above the inversion noise floor
    const bool numeric = sol.weight_kind == WeightKind::NumericDensity;
    const long mom_hi = numeric ? std::min<long>(cfg.moment_hi, 6) : cfg.moment_hi;
    const double mom_tol =
        numeric ? std::max(cfg.moment_rel_tol, 1e-6) : cfg.moment_rel_tol;
    if (numeric) (*report)["moment_note"] = "numeric density: moments capped at n=6, tol 1e-6";
    checks->merge(moment_check(sol, psi, cfg.moment_lo, mom_hi, {}, mom_tol));
    for (long m = 0; m <= std::min<long>(5, mom_hi); ++m) {
      checks->add("resolution_identity_m=" + std::to_string(m), 1.0,
                  resolution_identity_check(sol, psi, m, m), mom_tol, true);
    }
    checks->add("resolution_identity_offdiag", 0.0,
                resolution_identity_check(sol, psi, 0, 1), 1e-15, false);
    for (double x : {0.5, 1.0, 5.0}) {
      try {
        checks->add("weight_ode_residual_x=" + Json::format_double(x), 0.0,
                    weight_ode_residual(sol, x), 1e-8, false);
      } catch (const UnsupportedForm&) {
        break;  // atomic / numeric densities have no termwise action
      }
    }
  } catch (const Error& e) {
    have_weight = false;
    (*report)["weight_note"] = std::string(e.what());
  }
  (*report)["has_weight"] = have_weight;

  // eigenvector defect of a truncated coherent state
  if (dom.ladder != Ladder::None) {
    const NormalizedLadder norm = normalize_for_ladder(psi);
    const CoherentDomain ndom = coherent_domain(norm.psi, norm.spec);
    double r = 1.0;
    if (ndom.inner_r2 > 0.0) {
      r = std::isinf(ndom.outer_r2) ? std::sqrt(2.0 * ndom.inner_r2)
                                    : std::sqrt(0.5 * (ndom.inner_r2 + ndom.outer_r2));
    } else if (!std::isinf(ndom.outer_r2)) {
      r = std::sqrt(0.5 * ndom.outer_r2);
    }
    const std::complex<double> z(r, 0.0);
    const CoherentState state = coherent_coefficients(norm.psi, norm.spec, z, 1e-16);
    double defect2 = 0.0;
    for (long n = state.n_low; n < state.n_high; ++n) {
      const std::complex<double> cn = state.amplitudes[n - state.n_low];
      const std::complex<double> cnp = state.amplitudes[n + 1 - state.n_low];
      const double psi_next = norm.psi(static_cast<double>(n + 1));
      defect2 += std::norm(cnp * std::sqrt(psi_next) - z * cn);
    }
    checks->add("coherent_eigenvector_defect", 0.0, std::sqrt(defect2), 1e-9, false);
  }
}

void cmd_kernel(const PsiSpec& psi, const RunConfig& cfg, Json* report,
                VerificationReport* checks) {
  const SpectrumDescriptor spec = classify(psi);
  const CoherentDomain dom = coherent_domain(psi, spec);
  (*report)["domain"] = domain_json(spec, dom);
  if (dom.ladder == Ladder::None) {
    throw NoCoherentStates("kernel: no coherent states for " + psi.describe());
  }
  const double lo = std::max(dom.inner_r2 * 1.05 + 1e-9, cfg.grid_lo);
  const double hi = std::isinf(dom.outer_r2) ? cfg.grid_hi
                                             : std::min(cfg.grid_hi, 0.95 * dom.outer_r2);
  const std::vector<double> grid = log_grid(lo, hi, std::min(cfg.grid_n, 201));

  std::vector<std::vector<double>> rows;
  for (double u : grid) {
    const std::complex<double> g = kernel_G(psi, u);
    rows.push_back({u, g.real(), g.imag()});
  }
  if (!cfg.csv_path.empty()) {
    write_csv(cfg.csv_path, {"u", "re_G", "im_G"}, rows);
    (*report)["csv"] = cfg.csv_path;
  }

  for (double u : {grid[grid.size() / 2], grid[3 * grid.size() / 4]}) {
    checks->add("kernel_residual_u=" + Json::format_double(u), 0.0,
                kernel_residual(psi, u, 48), 1e-8, false);
  }
  // G(conj(z) zeta) equals the coherent-state inner product
  {
    const double u = grid[grid.size() / 2];
    const double r = std::sqrt(u);
    const NormalizedLadder norm = normalize_for_ladder(psi);
    const CoherentState left = coherent_coefficients(norm.psi, norm.spec, {r, 0.0}, 1e-16);
    const CoherentState right = coherent_coefficients(norm.psi, norm.spec, {r, 0.0}, 1e-16);
    std::complex<double> ip = 0.0;
    for (long n = std::max(left.n_low, right.n_low);
         n <= std::min(left.n_high, right.n_high); ++n) {
      ip += std::conj(left.amplitudes[n - left.n_low]) *
            right.amplitudes[n - right.n_low];
    }
    const std::complex<double> g = kernel_G(psi, u);
    checks->add("kernel_matches_inner_product", std::abs(g), std::abs(ip), 1e-10, true);
  }
}

void cmd_export(const PsiSpec& psi, const RunConfig& cfg, Json* report,
                VerificationReport*) {
  if (cfg.csv_path.empty()) {
    throw InvalidParameter("export requires --csv <path>");
  }
  const MellinSolution sol = solve_mellin(psi);
  export_weight_csv(sol, cfg);
  (*report)["csv"] = cfg.csv_path;
  (*report)["weight_kind"] = to_string(sol.weight_kind);
}

}  // namespace

PsiSpec psi_from_config(const RunConfig& cfg) {
  if (cfg.constant_set && cfg.a_set && cfg.constant != cfg.a) {
    throw InvalidParameter("--const and --a are aliases and disagree");
  }
  const double c = cfg.constant_set ? cfg.constant : (cfg.a_set ? cfg.a : 0.0);
  if (cfg.family == "affine") return PsiSpec::affine(cfg.sigma, cfg.mu);
  if (cfg.family == "qlinear") {
    if (cfg.q == 1.0) throw InvalidParameter("qlinear: q != 1 required");
    if (cfg.q == 0.0) throw InvalidParameter("qlinear: --q required");
    return PsiSpec::q_linear(cfg.lambda_minus, cfg.lambda_plus, c, cfg.q, cfg.mu);
  }
  if (cfg.family == "explog") return PsiSpec::exp_poly(cfg.coeffs, cfg.mu);
  if (cfg.family == "qbracket") {
    if (cfg.q == 0.0) throw InvalidParameter("qbracket: --q required");
    return PsiSpec::q_bracket_family(cfg.q, cfg.mu);
  }
  if (cfg.family == "qparen") {
    if (cfg.q == 0.0) throw InvalidParameter("qparen: --q required");
    return PsiSpec::q_paren_family(cfg.q, cfg.mu);
  }
  if (cfg.family == "polyprod") return PsiSpec::poly_product(cfg.coeffs, cfg.mu);
  throw InvalidParameter("unknown family '" + cfg.family +
                         "' (expected affine|qlinear|explog|qbracket|qparen|polyprod)");
}

int run(const RunConfig& cfg) {
  Json report = Json::object();
  report["command"] = cfg.command;
  report["config"] = config_echo(cfg);

  VerificationReport checks;
  int exit_code = 0;
  try {
    const PsiSpec psi = psi_from_config(cfg);
    report["psi"] = psi.describe();
    if (cfg.command == "classify") {
      cmd_classify(psi, cfg, &report, &checks);
    } else if (cfg.command == "domain") {
      cmd_domain(psi, cfg, &report, &checks);
    } else if (cfg.command == "weight") {
      cmd_weight(psi, cfg, &report, &checks);
    } else if (cfg.command == "verify") {
      cmd_verify(psi, cfg, &report, &checks);
    } else if (cfg.command == "kernel") {
      cmd_kernel(psi, cfg, &report, &checks);
    } else if (cfg.command == "export") {
      cmd_export(psi, cfg, &report, &checks);
    } else {
      throw InvalidParameter("unknown command '" + cfg.command + "'");
    }
  } catch (const Error& e) {
    report["error"] = std::string(e.what());
    exit_code = 2;
  }

  report["checks"] = to_json(checks);
  const bool all_pass = checks.all_pass();
  report["all_pass"] = all_pass && exit_code == 0;
  if (!all_pass) {
    for (const auto& e : checks.entries) {
      if (!e.pass) {
        report["first_failure"] = e.name;
        std::cerr << "FAIL: " << e.name << "\n";
        break;
      }
    }
    if (exit_code == 0) exit_code = 1;
  }

  const std::string text = report.dump();
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out_path);
    if (!os) {
      std::cerr << "cannot write " << cfg.out_path << "\n";
      return 2;
    }
    os << text;
  }
  return exit_code;
}

}  // namespace dbarg
