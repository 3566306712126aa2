#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "rofw/harness.hpp"

namespace rofw {
namespace {

std::vector<Json> as_list(const Json& j) {
  if (j.is_array()) return {j.begin(), j.end()};
  return {j};
}

std::vector<GeneratorOptions> expand_generator(const Json& g) {
  GeneratorOptions base;
  base.kind = parse_instance_kind(g.at("kind").get<std::string>());
  base.edge_probability = g.value("edge_probability", 0.0);
  base.uncertainty = g.value("uncertainty", std::string("budgeted"));
  base.num_scenarios = g.value("num_scenarios", base.num_scenarios);
  base.num_points = g.value("num_points", base.num_points);
  const Json sizes = g.contains("sizes") ? g.at("sizes") : g.at("size");
  const Json gammas = g.contains("gammas") ? g.at("gammas") : g.value("gamma", Json(1.0));
  const Json seeds = g.contains("seeds") ? g.at("seeds") : g.value("seed", Json(0));
  std::vector<GeneratorOptions> out;
  for (const Json& size : as_list(sizes)) {
    for (const Json& gamma : as_list(gammas)) {
      for (const Json& seed : as_list(seeds)) {
        GeneratorOptions o = base;
        o.size = size.get<int>();
        o.gamma = gamma.get<double>();
        o.seed = seed.get<std::uint64_t>();
        out.push_back(o);
      }
    }
  }
  return out;
}

std::string optional_real(const std::optional<double>& value) { return value ? format_real(*value) : ""; }

struct Cell {
  std::size_t instance;
  Method method;
};

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

void write_trace_csv(std::ostream& out, const SolverTrace& trace) {
  out << kTraceHeader << '\n';
  for (const TraceRecord& r : trace.records()) {
    out << r.iteration << ',' << r.lmo_calls << ',' << format_real(r.elapsed) << ',' << format_real(r.f_value) << ','
        << optional_real(r.f_mu_value) << ',' << optional_real(r.dual_bound) << '\n';
  }
}

std::string trace_file_name(const std::string& instance, Method method) {
  std::string safe = instance;
  for (char& ch : safe) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '-' ||
                    ch == '_' || ch == '.';
    if (!ok) ch = '_';
  }
  return safe + "__" + to_string(method) + ".csv";
}

void ExperimentSpec::validate() const {
  if (methods.empty()) throw std::invalid_argument("experiment: no methods given");
  if (instance_paths.empty() && generated.empty()) throw std::invalid_argument("experiment: no instances given");
  if (jobs < 1) throw std::invalid_argument("experiment: jobs must be at least 1");
  config.validate();
}

ExperimentSpec experiment_from_json(const Json& j, const std::filesystem::path& base_dir) {
  try {
    ExperimentSpec spec;
    if (j.contains("instances")) {
      for (const Json& p : j.at("instances")) {
        std::filesystem::path path = p.get<std::string>();
        if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
        spec.instance_paths.push_back(path);
      }
    }
    if (j.contains("generate")) {
      for (const Json& g : as_list(j.at("generate"))) {
        const auto expanded = expand_generator(g);
        spec.generated.insert(spec.generated.end(), expanded.begin(), expanded.end());
      }
    }
    for (const Json& m : as_list(j.value("methods", Json::array({"fw"})))) {
      spec.methods.push_back(parse_method(m.get<std::string>()));
    }
    SolverConfig& c = spec.config;
    c.epsilon = j.value("epsilon", c.epsilon);
    if (j.contains("mu")) c.mu_override = j.at("mu").get<double>();
    c.max_iters = j.value("max_iters", c.max_iters);
    c.max_lmo_calls = j.value("max_lmo", c.max_lmo_calls);
    c.conv_hull_period = j.value("conv_hull_period", c.conv_hull_period);
    c.seed = j.value("seed", c.seed);
    if (j.contains("output")) {
      spec.output_dir = j.at("output").get<std::string>();
      if (spec.output_dir.is_relative() && !base_dir.empty()) spec.output_dir = base_dir / spec.output_dir;
    }
    spec.jobs = j.value("jobs", spec.jobs);
    return spec;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("experiment spec: ") + e.what());
  }
}

ExperimentOutcome run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  ExperimentOutcome outcome;
  std::filesystem::create_directories(spec.output_dir);

  std::vector<InstanceFile> instances;
  for (const auto& path : spec.instance_paths) {
    try {
      instances.push_back(read_instance(path));
    } catch (const InstanceError& e) {
      outcome.instance_errors.push_back(path.string() + ": " + e.what());
    }
  }
  for (const GeneratorOptions& g : spec.generated) {
    try {
      instances.push_back(generate_instance(g));
    } catch (const InstanceError& e) {
      outcome.instance_errors.push_back(std::string("generator: ") + e.what());
    }
  }

  std::vector<std::optional<ProblemInstance>> problems(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    try {
      problems[i] = make_problem(instances[i]);
    } catch (const std::exception& e) {
      outcome.instance_errors.push_back(instances[i].name + ": " + e.what());
    }
  }

  std::vector<Cell> cells;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (!problems[i]) continue;
    for (Method m : spec.methods) cells.push_back({i, m});
  }
  std::vector<std::optional<SummaryRow>> rows(cells.size());
  std::mutex errors_mutex;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      const Cell& cell = cells[k];
      const ProblemInstance& problem = *problems[cell.instance];
      SolverConfig config = spec.config;
      config.method = cell.method;
      try {
        Stopwatch clock;
        const RunResult run = solve(problem, config);
        const double elapsed = clock.seconds();
        std::ofstream csv(spec.output_dir / trace_file_name(problem.name(), cell.method), std::ios::binary);
        write_trace_csv(csv, run.trace);
        rows[k] = SummaryRow{problem.name(), cell.method, run.termination, run.iterations,
                             run.lmo_calls,  run.f_best,  run.dual_bound,  elapsed};
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(errors_mutex);
        outcome.solver_errors.push_back(problem.name() + " / " + to_string(cell.method) + ": " + e.what());
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), std::max<std::size_t>(1, cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::ofstream summary(spec.output_dir / "summary.csv", std::ios::binary);
  summary << kSummaryHeader << '\n';
  for (const auto& row : rows) {
    if (!row) continue;
    summary << row->instance << ',' << to_string(row->method) << ',' << to_string(row->termination) << ','
            << row->iterations << ',' << row->lmo_calls << ',' << format_real(row->f_best) << ','
            << optional_real(row->dual_bound) << ',' << format_real(row->elapsed) << '\n';
    outcome.rows.push_back(*row);
  }
  return outcome;
}

}  // namespace rofw
