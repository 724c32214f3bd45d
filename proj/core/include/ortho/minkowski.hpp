// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ortho/verify.hpp"

namespace ortho {

// Find a point equidistant from the triangle vertices under a p-norm by
// minimizing the residual (d0 - d1)^2 + (d1 - d2)^2, which vanishes exactly
// at solutions.
struct EquidistantProblem {
  Triangle<double> triangle;
  NormSpec norm;
  // In-plane: search the 2-parameter slice A0 + s e1 + t e2 (for p = 2 the
  // full equidistant set is this point plus the Euclidean complement; for
  // p != 2 set ambient = true to search all coordinates).
  bool ambient = false;
  std::optional<Point<double>> initial;
  double residual_tol = 1e-10;
  int max_sweeps = 200;
  std::uint64_t seed = 0;  // multi-start reproducibility
};

struct EquidistantSolution {
  Point<double> point;
  double residual = 0.0;
  int sweeps = 0;
  bool converged = false;
  bool nonunique_warning = false;  // p in {1, inf}: equidistant points may form sets
};

double equidistance_residual(const Triangle<double>& t, const Point<double>& x,
                             const NormSpec& ns);

// Multi-start coordinate descent with golden-section line search; for
// p in (1, inf) a gradient-descent phase with the analytic gradient runs
// first. The best residual seen is monotone in the accepted iterates and is
// pushed to the numerical floor, well below residual_tol.
EquidistantSolution equidistant_solve(const EquidistantProblem& prob);

// Re-verification of every theorem clause under an arbitrary norm:
// metric clauses within metric_rel_tol under ns; affine clauses re-checked
// exactly on the rational backend after continued-fraction snapping of P
// (denominators <= snap_max_den).
struct MinkowskiReport {
  Point<double> p;
  double residual = 0.0;
  std::vector<ClauseOutcome> metric_clauses;
  std::vector<ClauseOutcome> affine_clauses;  // exact re-check (rational backend)
  std::vector<std::string> warnings;

  bool all_pass() const {
    for (const auto* list : {&metric_clauses, &affine_clauses})
      for (const ClauseOutcome& c : *list)
        if (c.verdict.status == Verdict::Status::fail) return false;
    return true;
  }
};

MinkowskiReport verify_under_norm(const Triangle<double>& t, const Point<double>& p,
                                  const NormSpec& ns, double metric_rel_tol = 1e-8,
                                  double residual_tol = 1e-10,
                                  std::int64_t snap_max_den = 1000000);

}  // namespace ortho
