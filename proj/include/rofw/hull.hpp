#pragma once

// The two linear programs over a finite vertex subset X' of the feasible region:
//   epigraph:    max_{c in U, tau} tau  s.t.  tau <= c^T x  for all x in X'
//   convex hull: min_{x in conv X'} max_{c in U} c^T x
// They are an LP primal/dual pair and share an optimal value.

#include "rofw/lp.hpp"
#include "rofw/uncertainty.hpp"
#include "rofw/vertex_set.hpp"

namespace rofw {

struct EpigraphSolution {
  Vector c_star;
  double tau_star = 0.0;
  /// Multipliers of the cut rows: convex weights of a hull point attaining tau_star.
  Vector weights;
  LpSolution lp;
};

struct ConvHullSolution {
  Vector x_conv;
  Vector weights;
  /// f(x_conv) recomputed by support maximization.
  double value = 0.0;
  double lp_value = 0.0;
  /// Adversarial scenario recovered from the LP multipliers; optimal for the epigraph LP,
  /// hence a maximizer of c^T x_conv over U.
  Vector c_dual;
  LpSolution lp;
};

/// Uses the theta parametrization for Box/Budgeted sets and simplex weights for scenario hulls.
EpigraphSolution epigraph_lp(const ActiveVertexSet& vertices, const UncertaintySet& set,
                             double tol = 1e-9);

/// Budgeted/Box: the inner maximum is dualized into (lambda, pi) so the LP has
/// k + 1 + n columns. Scenario hulls use an epigraph variable over the scenario rows.
ConvHullSolution convhull_minmax(const ActiveVertexSet& vertices, const UncertaintySet& set,
                                 double tol = 1e-9);

}  // namespace rofw
