#pragma once

// Dense bounded-variable primal simplex for small linear programs.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rofw/core.hpp"

namespace rofw {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// maximize objective^T x  s.t.  row_i(A) x (relation_i) rhs_i,  lower <= x <= upper.
/// Empty lower/upper default to [0, +inf).
struct LinearProgram {
  Vector objective;
  Matrix A;
  std::vector<Relation> relations;
  Vector rhs;
  Vector lower;
  Vector upper;

  Index num_variables() const { return objective.size(); }
  Index num_constraints() const { return A.rows(); }

  /// Appends a row and returns its index.
  Index add_row(const Eigen::Ref<const Vector>& coefficients, Relation relation, double value);
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vector x;
  double objective_value = 0.0;
  /// One multiplier per constraint with the sign convention of the dual of a maximization:
  /// >= 0 for <= rows, <= 0 for >= rows, free for equalities.
  Vector duals;
  // Post-hoc certificate residuals (row-scaled).
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double complementarity = 0.0;
  std::int64_t pivots = 0;
};

/// Two-phase simplex, Dantzig pricing with a switch to Bland's rule after 3 (m + n)
/// consecutive degenerate pivots. Throws SolverError if the pivot cap is exceeded.
LpSolution solve_lp(const LinearProgram& lp, double tol = 1e-9);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace rofw
