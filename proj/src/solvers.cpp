#include "rofw/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rofw/hull.hpp"
#include "rofw/smoothing.hpp"

namespace rofw {

std::string to_string(Termination termination) {
  switch (termination) {
    case Termination::EpsilonReached:
      return "epsilon_reached";
    case Termination::IterBudget:
      return "iter_budget";
    case Termination::LmoBudget:
      return "lmo_budget";
    case Termination::GapClosed:
      return "gap_closed";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxCutRows = 5000;

// Counts calls and checks returned vertices against the instance's diameter bound.
class CountingOracle {
 public:
  CountingOracle(const ProblemInstance& instance, std::int64_t budget)
      : oracle_(instance.lmo()), diameter_(instance.diameter_x()), budget_(budget) {}

  bool exhausted() const { return calls_ >= budget_; }
  std::int64_t calls() const { return calls_; }

  Vector operator()(const Vector& cost) {
    ++calls_;
    Vector v = oracle_.minimize(cost);
    if (!first_) {
      first_ = v;
    } else if ((v - *first_).norm() > diameter_ * (1.0 + 1e-9) + 1e-9) {
      throw InstanceError("oracle returned vertices farther apart than the diameter bound");
    }
    return v;
  }

 private:
  const LinearOracle& oracle_;
  double diameter_;
  std::int64_t budget_;
  std::int64_t calls_ = 0;
  std::optional<Vector> first_;
};

struct BestTracker {
  Vector x;
  double f = std::numeric_limits<double>::infinity();
  std::optional<double> dual;

  void offer(const Vector& candidate, double value) {
    if (value < f) {
      f = value;
      x = candidate;
    }
  }
  void offer_dual(double bound) {
    if (!dual || bound > *dual) dual = bound;
  }
};

void require_method(const SolverConfig& config, Method expected) {
  config.validate();
  if (config.method != expected) {
    throw std::invalid_argument("solver called with config for method " + to_string(config.method));
  }
}

RunResult finish(RunResult result, const BestTracker& best, const CountingOracle& lmo) {
  result.x_best = best.x;
  result.f_best = best.f;
  result.dual_bound = best.dual;
  result.lmo_calls = lmo.calls();
  return result;
}

// The deterministic case M = 0 or a single feasible point: one oracle call settles it.
RunResult solve_trivially(const ProblemInstance& instance, const SolverConfig& config, Method method,
                          const Vector& c0) {
  Stopwatch clock;
  CountingOracle lmo(instance, config.max_lmo_calls);
  BestTracker best;
  RunResult result;
  result.method = method;
  const Vector x = lmo(c0);
  best.offer(x, eval_f(instance.uncertainty(), x));
  TraceRecord rec;
  rec.iteration = 0;
  rec.f_value = best.f;
  rec.lmo_calls = lmo.calls();
  rec.elapsed = clock.seconds();
  rec.f_best = best.f;
  result.trace.push(rec);
  result.termination = Termination::EpsilonReached;
  result.iteration_limit = 0;
  return finish(std::move(result), best, lmo);
}

struct HullStep {
  double gap;
  double dual_bound;
};

// One convex-hull correction: hull minimizer, its adversarial scenario, and the gap.
HullStep hull_step(const ProblemInstance& instance, const SolverConfig& config,
                   ActiveVertexSet& vertices, CountingOracle& lmo, BestTracker& best) {
  const UncertaintySet& set = instance.uncertainty();
  const ConvHullSolution conv = convhull_minmax(vertices, set, config.lp_tolerance);
  best.offer(conv.x_conv, conv.value);
  Vector c_conv = conv.c_dual;
  // The LP multipliers should give a maximizer at x_conv; fall back to the support maximizer.
  const double slack = conv.value - c_conv.dot(conv.x_conv);
  if (!(std::abs(slack) <= 1e-6 * (1.0 + std::abs(conv.value))) ||
      !contains(set, c_conv, 1e-7)) {
    c_conv = support_max(set, conv.x_conv).maximizer;
  }
  const Vector v_conv = lmo(c_conv);
  vertices.add(v_conv);
  const double bound = c_conv.dot(v_conv);
  best.offer_dual(bound);
  return {c_conv.dot(conv.x_conv - v_conv), bound};
}

RunResult run_frank_wolfe(const ProblemInstance& instance, const SolverConfig& config, Method method) {
  const UncertaintySet& set = instance.uncertainty();
  const GeometricConstants& k = instance.constants();
  const double tol = config.projection_tolerance;
  const Vector c0 = default_anchor(set, tol);
  if (k.M <= 0.0 || k.D <= 0.0 || (method == Method::AFW && k.M_max <= 0.0)) {
    return solve_trivially(instance, config, method, c0);
  }

  const bool adaptive = method == Method::AFW;
  const bool with_hull = method == Method::FWConvHull;
  const MuSchedule schedule = adaptive ? MuSchedule::adaptive(k.D, k.M_max)
                                       : MuSchedule::fixed(config.mu_override.value_or(default_mu(config.epsilon, k.M)));

  RunResult result;
  result.method = method;
  result.mu = schedule.at(0);
  if (adaptive) {
    // Smallest T with D M_max / (2 sqrt(T)) <= epsilon.
    const double ratio = k.D * k.M_max / (2.0 * config.epsilon);
    result.iteration_limit = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(ratio * ratio)));
  } else {
    result.iteration_limit = iteration_bound(config.epsilon, k.D, k.M);
  }

  Stopwatch clock;
  CountingOracle lmo(instance, config.max_lmo_calls);
  BestTracker best;
  SmoothedObjective<double> objective(set, c0, schedule.at(0), tol);

  Vector x = lmo(c0);
  if (with_hull) result.vertices.add(x);
  SmoothedValue<double> smooth = eval_f_mu(objective, x);
  double f = eval_f(set, x);
  best.offer(x, f);

  auto log = [&](std::int64_t t) {
    TraceRecord rec;
    rec.iteration = t;
    rec.f_value = f;
    rec.f_mu_value = smooth.value;
    rec.dual_bound = best.dual;
    rec.lmo_calls = lmo.calls();
    rec.elapsed = clock.seconds();
    rec.f_best = best.f;
    result.trace.push(rec);
  };
  log(0);

  result.termination = Termination::EpsilonReached;
  std::int64_t t = 1;
  for (; t <= result.iteration_limit; ++t) {
    if (t > config.max_iters) {
      result.termination = Termination::IterBudget;
      break;
    }
    if (lmo.exhausted()) {
      result.termination = Termination::LmoBudget;
      break;
    }
    const Vector v = lmo(smooth.gradient);
    if (with_hull) result.vertices.add(v);
    const double step = 2.0 / (static_cast<double>(t) + 1.0);
    x += step * (v - x);

    if (adaptive) objective = objective.with_mu(schedule.at(t));
    smooth = eval_f_mu(objective, x);
    f = eval_f(set, x);
    best.offer(x, f);

    bool closed = false;
    if (with_hull && t % config.conv_hull_period == 0 && !lmo.exhausted()) {
      const HullStep hs = hull_step(instance, config, result.vertices, lmo, best);
      closed = hs.gap <= config.epsilon;
    }
    log(t);
    if (closed) {
      result.termination = Termination::GapClosed;
      ++t;
      break;
    }
  }
  result.iterations = t - 1;
  return finish(std::move(result), best, lmo);
}

}  // namespace

RunResult solve_fw(const ProblemInstance& instance, const SolverConfig& config) {
  require_method(config, Method::FW);
  return run_frank_wolfe(instance, config, Method::FW);
}

RunResult solve_afw(const ProblemInstance& instance, const SolverConfig& config) {
  require_method(config, Method::AFW);
  return run_frank_wolfe(instance, config, Method::AFW);
}

RunResult solve_fw_convhull(const ProblemInstance& instance, const SolverConfig& config) {
  require_method(config, Method::FWConvHull);
  return run_frank_wolfe(instance, config, Method::FWConvHull);
}

RunResult solve_consgen(const ProblemInstance& instance, const SolverConfig& config) {
  require_method(config, Method::ConsGen);
  const UncertaintySet& set = instance.uncertainty();
  const Vector c0 = default_anchor(set, config.projection_tolerance);
  if (instance.constants().M <= 0.0) return solve_trivially(instance, config, Method::ConsGen, c0);

  RunResult result;
  result.method = Method::ConsGen;
  Stopwatch clock;
  CountingOracle lmo(instance, config.max_lmo_calls);
  BestTracker best;
  result.vertices.add(lmo(c0));

  const double cut_tolerance = config.epsilon * 1e-2;
  result.termination = Termination::IterBudget;
  std::int64_t round = 1;
  for (;; ++round) {
    if (round > config.max_iters || result.vertices.size() > kMaxCutRows) {
      result.termination = Termination::IterBudget;
      break;
    }
    const EpigraphSolution epi = epigraph_lp(result.vertices, set, config.lp_tolerance);
    // The cut multipliers are the hull weights of a point whose f equals tau*.
    const Vector x_hull = result.vertices.matrix() * epi.weights;
    const double f_hull = eval_f(set, x_hull);
    best.offer(x_hull, f_hull);

    if (lmo.exhausted()) {
      result.termination = Termination::LmoBudget;
      break;
    }
    const Vector x_new = lmo(epi.c_star);
    const double lower = epi.c_star.dot(x_new);
    best.offer_dual(lower);

    TraceRecord rec;
    rec.iteration = round;
    rec.f_value = f_hull;
    rec.dual_bound = best.dual;
    rec.lmo_calls = lmo.calls();
    rec.elapsed = clock.seconds();
    rec.f_best = best.f;
    result.trace.push(rec);

    if (lower >= epi.tau_star - cut_tolerance || best.f - *best.dual <= config.epsilon) {
      result.termination = Termination::GapClosed;
      break;
    }
    result.vertices.add(x_new);
  }
  result.iterations = std::min(round, config.max_iters);

  const ConvHullSolution conv = convhull_minmax(result.vertices, set, config.lp_tolerance);
  best.offer(conv.x_conv, conv.value);
  return finish(std::move(result), best, lmo);
}

RunResult solve(const ProblemInstance& instance, const SolverConfig& config) {
  switch (config.method) {
    case Method::FW:
      return solve_fw(instance, config);
    case Method::AFW:
      return solve_afw(instance, config);
    case Method::FWConvHull:
      return solve_fw_convhull(instance, config);
    case Method::ConsGen:
      return solve_consgen(instance, config);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace rofw
