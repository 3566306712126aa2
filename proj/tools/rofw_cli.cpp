// rofw: generate instances, solve one, or run a benchmark grid.
//
// Exit codes: 0 ok, 2 usage, 3 instance error, 4 solver error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rofw/harness.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInstance = 3;
constexpr int kExitSolver = 4;

struct SolverFlags {
  std::string method = "fw";
  double epsilon = 0.1;
  double mu = 0.0;
  std::int64_t max_iters = 10000;
  std::int64_t max_lmo = 2500;
  std::int64_t conv_hull_period = 10;
  std::uint64_t seed = 0;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--epsilon", f.epsilon, "target accuracy")->check(CLI::PositiveNumber);
  cmd->add_option("--mu", f.mu, "fixed smoothing parameter (default epsilon / M^2)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", f.max_iters, "iteration budget")->check(CLI::PositiveNumber);
  cmd->add_option("--max-lmo", f.max_lmo, "oracle call budget")->check(CLI::PositiveNumber);
  cmd->add_option("--conv-hull-period", f.conv_hull_period, "iterations between hull steps")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "seed recorded with the run");
}

rofw::SolverConfig to_config(const SolverFlags& f, CLI::App* cmd) {
  rofw::SolverConfig c;
  c.method = rofw::parse_method(f.method);
  c.epsilon = f.epsilon;
  if (cmd->count("--mu") > 0) c.mu_override = f.mu;
  c.max_iters = f.max_iters;
  c.max_lmo_calls = f.max_lmo;
  c.conv_hull_period = f.conv_hull_period;
  c.seed = f.seed;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle-based robust combinatorial optimization"};
  app.require_subcommand(1);

  rofw::GeneratorOptions gen;
  std::string gen_kind = "mst";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--kind", gen_kind, "mst, tsp or vertex_list")
      ->check(CLI::IsMember({"mst", "tsp", "vertex_list"}));
  gen_cmd->add_option("--n", gen.size, "vertices (graphs) or dimension (vertex lists)")->required();
  gen_cmd->add_option("--gamma", gen.gamma, "budget for the budgeted set");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--edge-prob", gen.edge_probability, "Erdos-Renyi edge probability (mst)");
  gen_cmd->add_option("--uncertainty", gen.uncertainty, "budgeted or scenarios")
      ->check(CLI::IsMember({"budgeted", "scenarios"}));
  gen_cmd->add_option("--scenarios", gen.num_scenarios, "scenario count");
  gen_cmd->add_option("--points", gen.num_points, "point count (vertex_list)");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  SolverFlags solve_flags;
  std::string solve_instance, solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("--instance", solve_instance, "instance JSON")->required();
  solve_cmd->add_option("--method", solve_flags.method, "fw, afw, fw_convhull or consgen")
      ->check(CLI::IsMember({"fw", "afw", "fw_convhull", "consgen"}));
  solve_cmd->add_option("--out", solve_out, "trace CSV path");
  add_solver_flags(solve_cmd, solve_flags);

  SolverFlags bench_flags;
  std::string bench_spec, bench_out;
  std::vector<std::string> bench_instances, bench_methods;
  int bench_jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "run methods over a set of instances");
  bench_cmd->add_option("--spec", bench_spec, "experiment JSON");
  bench_cmd->add_option("--instance", bench_instances, "instance JSON (repeatable)");
  bench_cmd->add_option("--method", bench_methods, "method (repeatable)")
      ->check(CLI::IsMember({"fw", "afw", "fw_convhull", "consgen"}));
  bench_cmd->add_option("--out", bench_out, "output directory");
  bench_cmd->add_option("--jobs", bench_jobs, "parallel cells")->check(CLI::PositiveNumber);
  add_solver_flags(bench_cmd, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      gen.kind = rofw::parse_instance_kind(gen_kind);
      const rofw::InstanceFile instance = rofw::generate_instance(gen);
      if (gen_out.empty()) {
        std::cout << rofw::dump_instance(instance);
      } else {
        rofw::write_instance(gen_out, instance);
      }
      return 0;
    }

    if (*solve_cmd) {
      const rofw::ProblemInstance problem = rofw::make_problem(rofw::read_instance(solve_instance));
      const rofw::SolverConfig config = to_config(solve_flags, solve_cmd);
      const rofw::RunResult run = rofw::solve(problem, config);
      if (!solve_out.empty()) {
        std::ofstream csv(solve_out, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write " + solve_out);
        rofw::write_trace_csv(csv, run.trace);
      } else {
        rofw::write_trace_csv(std::cout, run.trace);
      }
      std::cerr << "method=" << rofw::to_string(run.method) << " termination=" << rofw::to_string(run.termination)
                << " iterations=" << run.iterations << " lmo_calls=" << run.lmo_calls
                << " f_best=" << rofw::format_real(run.f_best);
      if (run.dual_bound) std::cerr << " dual_bound=" << rofw::format_real(*run.dual_bound);
      std::cerr << '\n';
      return 0;
    }

    rofw::ExperimentSpec spec;
    if (!bench_spec.empty()) {
      std::ifstream in(bench_spec);
      if (!in) {
        std::cerr << "cannot open " << bench_spec << '\n';
        return kExitUsage;
      }
      spec = rofw::experiment_from_json(rofw::Json::parse(in), std::filesystem::path(bench_spec).parent_path());
    } else {
      spec.config = to_config(bench_flags, bench_cmd);
    }
    for (const auto& p : bench_instances) spec.instance_paths.emplace_back(p);
    if (!bench_methods.empty()) {
      spec.methods.clear();
      for (const auto& m : bench_methods) spec.methods.push_back(rofw::parse_method(m));
    }
    if (bench_spec.empty() && spec.methods.empty()) spec.methods.push_back(rofw::Method::FW);
    if (!bench_out.empty()) spec.output_dir = bench_out;
    if (bench_cmd->count("--jobs") > 0) spec.jobs = bench_jobs;
    if (!bench_spec.empty()) {
      // Explicit flags override the spec file.
      if (bench_cmd->count("--epsilon") > 0) spec.config.epsilon = bench_flags.epsilon;
      if (bench_cmd->count("--mu") > 0) spec.config.mu_override = bench_flags.mu;
      if (bench_cmd->count("--max-iters") > 0) spec.config.max_iters = bench_flags.max_iters;
      if (bench_cmd->count("--max-lmo") > 0) spec.config.max_lmo_calls = bench_flags.max_lmo;
      if (bench_cmd->count("--conv-hull-period") > 0) spec.config.conv_hull_period = bench_flags.conv_hull_period;
    }

    const rofw::ExperimentOutcome outcome = rofw::run_experiment(spec);
    for (const auto& row : outcome.rows) {
      std::cout << row.instance << ' ' << rofw::to_string(row.method) << ' ' << rofw::to_string(row.termination)
                << " f_best=" << rofw::format_real(row.f_best) << '\n';
    }
    for (const auto& e : outcome.instance_errors) std::cerr << "instance error: " << e << '\n';
    for (const auto& e : outcome.solver_errors) std::cerr << "solver error: " << e << '\n';
    if (!outcome.instance_errors.empty()) return kExitInstance;
    if (!outcome.solver_errors.empty()) return kExitSolver;
    return 0;
  } catch (const rofw::InstanceError& e) {
    std::cerr << "instance error: " << e.what() << '\n';
    return kExitInstance;
  } catch (const rofw::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::domain_error& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const rofw::Json::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}
