#pragma once

// Instance files, random instance generation, brute-force ground truth and batch experiments.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rofw/problem.hpp"
#include "rofw/solvers.hpp"

namespace rofw {

using Json = nlohmann::json;

enum class InstanceKind { Mst, Tsp, VertexList };

std::string to_string(InstanceKind kind);
InstanceKind parse_instance_kind(const std::string& name);

inline constexpr int kInstanceSchemaVersion = 1;

struct InstanceFile {
  int version = kInstanceSchemaVersion;
  InstanceKind kind = InstanceKind::Mst;
  std::string name;
  std::optional<GraphInstance> graph;  // mst, tsp
  std::vector<Vector> vertices;        // vertex_list
  std::optional<UncertaintySet> uncertainty;
  std::optional<GeometricConstants> constants;
  std::optional<std::uint64_t> seed;

  Index dimension() const;
};

Json instance_to_json(const InstanceFile& instance);
/// Throws InstanceError on schema violations.
InstanceFile instance_from_json(const Json& json);
std::string dump_instance(const InstanceFile& instance);
InstanceFile read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const InstanceFile& instance);

ProblemInstance make_problem(const InstanceFile& instance);

struct GeneratorOptions {
  InstanceKind kind = InstanceKind::Mst;
  /// Vertex count for graphs, dimension for vertex lists.
  int size = 10;
  double gamma = 1.0;
  std::uint64_t seed = 0;
  /// Erdos-Renyi edge probability for mst graphs; 0 selects min(1, 3 ln|V| / |V|).
  double edge_probability = 0.0;
  /// "budgeted" or "scenarios".
  std::string uncertainty = "budgeted";
  int num_scenarios = 3;
  /// Number of random 0/1 points for vertex lists.
  int num_points = 20;
};

/// Deterministic in the options. Nominal costs are uniform integers in [1, 100], deviations
/// uniform integers in [1, nominal]; scenarios add a uniform integer in [0, d_j] to the nominal.
InstanceFile generate_instance(const GeneratorOptions& options);

inline constexpr int kMaxEnumerationVertices = 7;
inline constexpr std::size_t kMaxEnumeratedPoints = 10000;

std::vector<Vector> enumerate_spanning_trees(const GraphInstance& graph);
std::vector<Vector> enumerate_tours(const GraphInstance& graph);
/// All vertices of X for instances small enough to enumerate.
std::vector<Vector> enumerate_feasible_vertices(const InstanceFile& instance);

struct BruteForceOptimum {
  double f_star = 0.0;
  Vector x_star;
  std::size_t num_vertices = 0;
};

BruteForceOptimum brute_force_optimum(const std::vector<Vector>& vertices, const UncertaintySet& set,
                                      double tol = 1e-9);
BruteForceOptimum brute_force_optimum(const InstanceFile& instance, double tol = 1e-9);

// ---- experiments ---------------------------------------------------------------------------

inline constexpr const char* kTraceHeader =
    "iteration,lmo_calls,elapsed_seconds,f_value,f_mu_value,dual_bound";
inline constexpr const char* kSummaryHeader =
    "instance,method,termination,iterations,lmo_calls,f_best,dual_bound,elapsed_seconds";

/// Shortest round-trip decimal, independent of the global locale.
std::string format_real(double value);
void write_trace_csv(std::ostream& out, const SolverTrace& trace);

struct ExperimentSpec {
  std::vector<std::filesystem::path> instance_paths;
  std::vector<GeneratorOptions> generated;
  std::vector<Method> methods;
  SolverConfig config;
  std::filesystem::path output_dir = "results";
  int jobs = 1;

  void validate() const;
};

/// Relative instance paths resolve against base_dir.
ExperimentSpec experiment_from_json(const Json& json, const std::filesystem::path& base_dir = {});

struct SummaryRow {
  std::string instance;
  Method method = Method::FW;
  Termination termination = Termination::IterBudget;
  std::int64_t iterations = 0;
  std::int64_t lmo_calls = 0;
  double f_best = 0.0;
  std::optional<double> dual_bound;
  double elapsed = 0.0;
};

struct ExperimentOutcome {
  std::vector<SummaryRow> rows;
  std::vector<std::string> instance_errors;
  std::vector<std::string> solver_errors;
};

/// Writes <instance>__<method>.csv per cell and summary.csv, continuing past failing cells.
ExperimentOutcome run_experiment(const ExperimentSpec& spec);

std::string trace_file_name(const std::string& instance, Method method);

}  // namespace rofw
