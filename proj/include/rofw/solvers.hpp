#pragma once

#include <optional>
#include <string>

#include "rofw/core.hpp"
#include "rofw/problem.hpp"
#include "rofw/vertex_set.hpp"

namespace rofw {

enum class Termination { EpsilonReached, IterBudget, LmoBudget, GapClosed };

std::string to_string(Termination termination);

struct RunResult {
  Method method = Method::FW;
  Vector x_best;
  double f_best = 0.0;
  std::optional<double> dual_bound;
  SolverTrace trace;
  Termination termination = Termination::IterBudget;
  std::int64_t iterations = 0;
  std::int64_t lmo_calls = 0;
  /// Smoothing parameter of the first iteration (absent for constraint generation).
  std::optional<double> mu;
  /// Iteration count after which the method's convergence guarantee reaches epsilon.
  std::int64_t iteration_limit = 0;
  /// Distinct oracle vertices (collected by the hull-based methods only).
  ActiveVertexSet vertices;
};

/// Frank-Wolfe on f_mu with mu = epsilon / M^2 (or the override) and step 2 / (t + 1),
/// started from x0 = LMO(c0). Runs ceil(4 D^2 M^2 / epsilon^2) steps unless a budget binds.
RunResult solve_fw(const ProblemInstance& instance, const SolverConfig& config);

/// Frank-Wolfe with mu_t = 2D / (M_max sqrt(t + 1)) refreshed every step.
RunResult solve_afw(const ProblemInstance& instance, const SolverConfig& config);

/// solve_fw plus, every conv_hull_period steps, the minimizer of f over the hull of all
/// vertices seen so far and the resulting suboptimality gap / dual bound.
RunResult solve_fw_convhull(const ProblemInstance& instance, const SolverConfig& config);

/// Cutting planes on max_{c in U} min_{x in X'} c^T x, one oracle vertex per round.
RunResult solve_consgen(const ProblemInstance& instance, const SolverConfig& config);

/// Dispatches on config.method.
RunResult solve(const ProblemInstance& instance, const SolverConfig& config);

}  // namespace rofw
