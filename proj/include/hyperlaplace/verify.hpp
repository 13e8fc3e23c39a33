#pragma once

#include <string>
#include <vector>

namespace hyperlaplace {

struct CheckResult {
  std::string name;
  int d = 0;
  int lmax = 0;  // largest level actually exercised, after any cost cap
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool pass() const;
  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int d_min = 3;
  int d_max = 3;
  int lmax = 4;
  double tol = 1e-8;
};

/// Runs every identity check for each d in [d_min, d_max].
///
/// Checks that are exact up to roundoff (orthonormality, recurrences,
/// quadrature exactness, closed forms, solver roundtrips) are held to
/// `options.tol`. Checks whose error is set by a discretization carry their own
/// fixed tolerance: the finite-difference harmonicity residual (1e-4) and
/// derivative stencils (1e-8), and the Green truncation decay rate (factor 5).
///
/// Checks whose cost grows like count(d, l)^2 times the grid size (Gram
/// matrix, solver roundtrips) lower their level until the work fits desk-scale
/// limits; the exercised level is recorded in CheckResult::lmax.
/// Throws std::invalid_argument unless 3 <= d_min <= d_max <= 8 and 0 <= lmax <= 8.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace hyperlaplace
