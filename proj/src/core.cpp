#include "rofw/core.hpp"

#include <cmath>
#include <limits>

namespace rofw {

std::string to_string(Method method) {
  switch (method) {
    case Method::FW:
      return "fw";
    case Method::AFW:
      return "afw";
    case Method::FWConvHull:
      return "fw_convhull";
    case Method::ConsGen:
      return "consgen";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "fw" || name == "FW") return Method::FW;
  if (name == "afw" || name == "AFW" || name == "a-fw") return Method::AFW;
  if (name == "fw_convhull" || name == "FW_CONVHULL" || name == "fw-convhull") {
    return Method::FWConvHull;
  }
  if (name == "consgen" || name == "CONSGEN") return Method::ConsGen;
  throw std::invalid_argument("unknown method '" + name + "'");
}

void SolverConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (mu_override && !(*mu_override > 0.0)) {
    throw std::invalid_argument("mu must be positive");
  }
  if (max_iters < 1 || max_lmo_calls < 1) {
    throw std::invalid_argument("iteration and LMO budgets must be at least 1");
  }
  if (conv_hull_period < 1) {
    throw std::invalid_argument("conv_hull_period must be at least 1");
  }
  auto tolerance_ok = [](double tol) { return tol > 0.0 && tol <= 1e-3; };
  if (!tolerance_ok(lp_tolerance) || !tolerance_ok(projection_tolerance)) {
    throw std::invalid_argument("tolerances must lie in (0, 1e-3]");
  }
}

void SolverTrace::push(TraceRecord record) {
  if (!records_.empty()) {
    const TraceRecord& last = records_.back();
    if (record.iteration <= last.iteration) {
      throw SolverError("trace iterations must be strictly increasing");
    }
    if (record.lmo_calls < last.lmo_calls) {
      throw SolverError("trace LMO call counts must be nondecreasing");
    }
    // steady_clock never goes backwards; clamp away sub-resolution jitter from callers
    // that take the timestamp before the previous push completed.
    if (record.elapsed < last.elapsed) record.elapsed = last.elapsed;
  }
  records_.push_back(std::move(record));
}

double default_mu(double epsilon, double M) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(M > 0.0)) throw std::domain_error("degenerate uncertainty set");
  return epsilon / (M * M);
}

std::int64_t iteration_bound(double epsilon, double D, double M) {
  if (!(epsilon > 0.0) || !(D > 0.0) || !(M > 0.0)) {
    throw std::invalid_argument("iteration_bound requires positive inputs");
  }
  const double steps = 4.0 * D * D * M * M / (epsilon * epsilon);
  if (steps >= static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) {
    return std::numeric_limits<std::int64_t>::max() / 2;
  }
  // Guard against ceil() of values like 7200.000000000001 that are exact in real arithmetic.
  const double nearest = std::round(steps);
  if (std::abs(steps - nearest) <= 1e-9 * std::max(1.0, nearest)) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::ceil(steps));
}

}  // namespace rofw
