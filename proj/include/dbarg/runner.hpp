#pragma once

#include <string>
#include <vector>

#include "dbarg/psi.hpp"

namespace dbarg {

// Validated run description.  Filled from flags, the key=value config file
// and DBARG_-prefixed environment variables by the CLI front end.
struct RunConfig {
  std::string command;  // classify | domain | weight | verify | kernel | export
  std::string family;   // affine | qlinear | explog | qbracket | qparen | polyprod
  double q = 0.0;
  double sigma = 0.0;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double constant = 0.0;
  bool constant_set = false;
  double a = 0.0;  // alias for the constant term of psi = a + q^x
  bool a_set = false;
  double mu = 0.0;
  std::vector<double> coeffs;
  long dim = 30;
  double tol = 1e-10;
  double moment_rel_tol = 1e-8;
  long moment_lo = 0;
  long moment_hi = 10;
  double grid_lo = 1e-6;
  double grid_hi = 1e3;
  int grid_n = 501;
  std::string out_path;  // JSON report destination; empty = stdout
  std::string csv_path;  // optional CSV artifact
};

// Construct the PsiSpec from the config, throwing InvalidParameter with the
// violated invariant named.
PsiSpec psi_from_config(const RunConfig& cfg);

// Execute the command, write the JSON report (and CSV when requested).
// Returns 0 iff every check in the report passed.
int run(const RunConfig& cfg);

}  // namespace dbarg
