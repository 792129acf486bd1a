#include <CLI11.hpp>
#include <iostream>

#include "dbarg/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dbarg: deformed-oscillator coherent states and Bargmann weights"};
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  app.allow_config_extras(false);

  dbarg::RunConfig cfg;
  app.add_option("--command", cfg.command, "command (normally given as a subcommand)")
      ->envname("DBARG_COMMAND");
  app.add_option("--family", cfg.family,
                 "psi family: affine|qlinear|explog|qbracket|qparen|polyprod")
      ->envname("DBARG_FAMILY");
  app.add_option("--q", cfg.q, "deformation parameter q")->envname("DBARG_Q");
  app.add_option("--sigma", cfg.sigma, "affine shift sigma")->envname("DBARG_SIGMA");
  auto* opt_lm = app.add_option("--lambda-minus", cfg.lambda_minus,
                                "QLinear coefficient of q^-x");
  opt_lm->envname("DBARG_LAMBDA_MINUS");
  app.add_option("--lambda-plus", cfg.lambda_plus, "QLinear coefficient of q^x")
      ->envname("DBARG_LAMBDA_PLUS");
  auto* opt_const = app.add_option("--const", cfg.constant, "QLinear constant term");
  opt_const->envname("DBARG_CONST");
  auto* opt_a = app.add_option("--a", cfg.a, "alias for the constant of psi = a + q^x");
  opt_a->envname("DBARG_A");
  app.add_option("--mu", cfg.mu, "representation label in [0,1)")->envname("DBARG_MU");
  app.add_option("--coeffs", cfg.coeffs,
                 "comma-separated coefficients (explog exponent / polyprod)")
      ->delimiter(',')
      ->envname("DBARG_COEFFS");
  app.add_option("--dim", cfg.dim, "truncation dimension for matrix checks")
      ->envname("DBARG_DIM");
  app.add_option("--tol", cfg.tol, "series/solver tolerance")->envname("DBARG_TOL");
  app.add_option("--moment-lo", cfg.moment_lo, "lowest moment index")
      ->envname("DBARG_MOMENT_LO");
  app.add_option("--moment-hi", cfg.moment_hi, "highest moment index")
      ->envname("DBARG_MOMENT_HI");
  app.add_option("--moment-rel-tol", cfg.moment_rel_tol, "moment pass tolerance")
      ->envname("DBARG_MOMENT_REL_TOL");
  app.add_option("--grid-lo", cfg.grid_lo, "scan grid lower end")->envname("DBARG_GRID_LO");
  app.add_option("--grid-hi", cfg.grid_hi, "scan grid upper end")->envname("DBARG_GRID_HI");
  app.add_option("--grid-n", cfg.grid_n, "scan grid size")->envname("DBARG_GRID_N");
  app.add_option("--out", cfg.out_path, "JSON report path (default stdout)")
      ->envname("DBARG_OUT");
  app.add_option("--csv", cfg.csv_path, "CSV artifact path")->envname("DBARG_CSV");

  for (const char* name : {"classify", "domain", "weight", "verify", "kernel", "export"}) {
    app.add_subcommand(name, std::string(name) + " pipeline");
  }
  app.require_subcommand(0, 1);

  CLI11_PARSE(app, argc, argv);

  const auto subs = app.get_subcommands();
  if (!subs.empty()) cfg.command = subs.front()->get_name();
  if (cfg.command.empty()) {
    std::cerr << app.help();
    return 2;
  }
  cfg.constant_set = opt_const->count() > 0;
  cfg.a_set = opt_a->count() > 0;
  return dbarg::run(cfg);
}
