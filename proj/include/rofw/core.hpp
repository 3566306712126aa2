#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace rofw {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Malformed problem data (bad dimensions, invalid sets, unreadable files).
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver reached a state that valid inputs must never produce.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diameter and norm bounds that drive step counts and smoothing.
///   D     >= max ||x - y|| over the feasible region
///   M     >= max ||c - c'|| over the uncertainty set
///   M_max >= max ||c|| over the uncertainty set
struct GeometricConstants {
  double D = 0.0;
  double M = 0.0;
  double M_max = 0.0;
};

enum class Method { FW, AFW, FWConvHull, ConsGen };

std::string to_string(Method method);
Method parse_method(const std::string& name);

struct SolverConfig {
  Method method = Method::FW;
  double epsilon = 0.1;
  std::optional<double> mu_override;
  std::int64_t max_iters = 10000;
  std::int64_t max_lmo_calls = 2500;
  std::int64_t conv_hull_period = 10;
  double lp_tolerance = 1e-9;
  double projection_tolerance = 1e-9;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

struct TraceRecord {
  std::int64_t iteration = 0;
  double f_value = 0.0;
  std::optional<double> f_mu_value;
  std::optional<double> dual_bound;
  std::int64_t lmo_calls = 0;
  double elapsed = 0.0;
  // Running best primal value; kept in memory only, not part of the CSV.
  double f_best = 0.0;
};

/// Per-iteration log of a single solver run.
class SolverTrace {
 public:
  /// Rejects records that break iteration or lmo-call monotonicity.
  void push(TraceRecord record);

  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  const TraceRecord& back() const { return records_.back(); }

 private:
  std::vector<TraceRecord> records_;
};

/// Monotonic stopwatch for trace timestamps.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Smoothing parameter epsilon / M^2 that makes the smoothing error at most epsilon / 2.
double default_mu(double epsilon, double M);

/// Number of smoothed Frank-Wolfe steps, ceil(4 D^2 M^2 / epsilon^2), that guarantees an
/// epsilon-optimal iterate.
std::int64_t iteration_bound(double epsilon, double D, double M);

}  // namespace rofw
