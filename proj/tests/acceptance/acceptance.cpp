// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero if any fail.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "support/brute.hpp"

using namespace rofw;
using namespace rofw::testing;

namespace {

// Tolerances, pinned.
constexpr double kOptimumSlack = 1e-9;          // criteria 1, 2: LP accuracy of f*
constexpr double kBudgetedProjectionTol = 1e-8;  // criterion 3
constexpr double kScenarioProjectionTol = 1e-4;  // criterion 3
constexpr double kGradientRelTol = 1e-4;        // criterion 4
constexpr double kGradientStep = 1e-6;          // criterion 4
constexpr double kBreakpointRadius = 1e-5;      // criterion 4
constexpr double kSandwichSlack = 1e-9;         // criterion 5
constexpr double kDualityTol = 1e-6;            // criterion 6
constexpr double kLmoTol = 1e-9;                // criterion 7
constexpr double kTrendShare = 0.7;             // criterion 8
constexpr double kTimeGrowth = 1.5;             // criterion 8a
constexpr double kTimeFlat = 1.5;               // criterion 8a
constexpr double kTrendRelEps = 1e-3;           // criterion 8b, FW accuracy relative to f(x0)

struct Outcome {
  bool pass = true;
  std::string detail;
};

void report(int id, const Outcome& o) {
  std::cout << "CRITERION " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

struct SuiteCase {
  InstanceFile file;
  double f_star = 0.0;
};

UncertaintySet suite_uncertainty(Rng& rng, Index n, bool scenarios) {
  const Vector lo = random_vector(rng, n, 0.5, 1.5), d = random_vector(rng, n, 0.1, 0.5);
  if (!scenarios) return Budgeted(lo, d, uniform(rng, 1.0, 0.5 * static_cast<double>(n)));
  Matrix C(n, 3);
  for (Index s = 0; s < 3; ++s) C.col(s) = lo + d.cwiseProduct(random_vector(rng, n, 0.0, 1.0));
  return ScenarioHull(C);
}

// 24 small instances with exact optima: MST on |V| in {4, 5, 6} and 0/1 vertex lists.
std::vector<SuiteCase> build_suite() {
  Rng rng(20261018);
  std::vector<SuiteCase> suite;
  for (int k = 0; k < 24; ++k) {
    InstanceFile f;
    const bool scenarios = k % 2 == 1;
    if (k < 12) {
      f.kind = InstanceKind::Mst;
      f.graph = random_connected_graph(rng, 4 + (k / 2) % 3, 0.7);
    } else {
      f.kind = InstanceKind::VertexList;
      const int points = uniform_int(rng, 8, 50);
      std::set<std::vector<int>> seen;
      while (static_cast<int>(f.vertices.size()) < points) {
        std::vector<int> bits(6);
        for (int& b : bits) b = uniform_int(rng, 0, 1);
        if (!seen.insert(bits).second) continue;
        Vector v(6);
        for (int j = 0; j < 6; ++j) v(j) = bits[static_cast<std::size_t>(j)];
        f.vertices.push_back(v);
      }
    }
    f.name = "suite" + std::to_string(k);
    f.uncertainty = suite_uncertainty(rng, f.dimension(), scenarios);
    SuiteCase c{f, brute_force_optimum(f).f_star};
    suite.push_back(std::move(c));
  }
  return suite;
}

// ---- criterion 1 ----
Outcome fixed_smoothing_bound(const std::vector<SuiteCase>& suite) {
  int runs = 0, violations = 0;
  double worst = -INFINITY;
  std::int64_t max_T = 0;
  for (const auto& c : suite) {
    const ProblemInstance inst = make_problem(c.file);
    for (double eps : {0.5, 0.1}) {
      SolverConfig cfg;
      cfg.method = Method::FW;
      cfg.epsilon = eps;
      const std::int64_t T = iteration_bound(eps, inst.constants().D, inst.constants().M);
      max_T = std::max(max_T, T);
      cfg.max_iters = T;
      cfg.max_lmo_calls = T + 1;
      const RunResult r = solve_fw(inst, cfg);
      ++runs;
      const double gap = r.f_best - c.f_star;
      worst = std::max(worst, gap / eps);
      if (r.iterations > T || !(gap <= eps + kOptimumSlack)) ++violations;
    }
  }
  return {violations == 0, std::to_string(runs) + " runs, " + std::to_string(violations) +
                               " violations, max (f_best - f*)/eps = " + fmt(worst) + ", largest T = " +
                               std::to_string(max_T)};
}

// ---- criterion 2 ----
Outcome adaptive_bound(const std::vector<SuiteCase>& suite) {
  int checks = 0, violations = 0;
  double worst = -INFINITY;
  for (const auto& c : suite) {
    const ProblemInstance inst = make_problem(c.file);
    SolverConfig cfg;
    cfg.method = Method::AFW;
    cfg.epsilon = 0.1;
    cfg.max_iters = 100000;
    cfg.max_lmo_calls = 100001;
    const RunResult r = solve_afw(inst, cfg);
    const double scale = inst.constants().D * inst.constants().M_max / 2.0;
    for (const auto& rec : r.trace.records()) {
      if (rec.iteration < 1) continue;
      const double bound = scale / std::sqrt(static_cast<double>(rec.iteration));
      const double gap = rec.f_value - c.f_star;
      ++checks;
      worst = std::max(worst, gap / bound);
      if (gap > bound + kOptimumSlack) ++violations;
    }
  }
  return {violations == 0, std::to_string(checks) + " logged iterates, " + std::to_string(violations) +
                               " violations, max gap/bound = " + fmt(worst)};
}

// ---- criterion 3 ----
Outcome projection_equivalence() {
  Rng rng(3);
  double worst_b = 0.0, worst_s = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Index n = uniform_int(rng, 1, 8);
    Budgeted set = random_budgeted(rng, n);
    if (k % 4 == 0) set = Budgeted(set.c_lower(), set.d(), std::round(set.gamma()));
    const Vector z = random_vector(rng, n, -4, 4);
    worst_b = std::max(worst_b, (set.project(z) - budgeted_projection_kkt(set, z)).cwiseAbs().maxCoeff());
  }
  for (int k = 0; k < 100; ++k) {
    const Index n = uniform_int(rng, 1, 6);
    const ScenarioHull set = random_scenarios(rng, n, uniform_int(rng, 1, 3));
    const Vector z = random_vector(rng, n, -2, 2);
    worst_s = std::max(worst_s, (set.project(z, 1e-9) - scenario_projection_grid(set, z)).cwiseAbs().maxCoeff());
  }
  return {worst_b <= kBudgetedProjectionTol && worst_s <= kScenarioProjectionTol,
          "budgeted max err " + fmt(worst_b) + " over 500, scenario max err " + fmt(worst_s) + " over 100"};
}

// ---- criterion 4 ----
std::vector<int> budget_pattern(const Budgeted& b, const Vector& target) {
  const Vector theta = b.project_theta((target - b.c_lower()).cwiseQuotient(b.d()));
  std::vector<int> p;
  for (Index j = 0; j < theta.size(); ++j) p.push_back(theta(j) <= 0.0 ? 0 : theta(j) >= 1.0 ? 2 : 1);
  p.push_back(theta.sum() >= b.gamma() - 1e-12 ? 1 : 0);
  return p;
}

bool near_breakpoint(const SmoothedObjective<double>& obj, const Vector& x) {
  const auto* b = std::get_if<Budgeted>(&obj.set());
  if (!b) return false;
  const auto base = budget_pattern(*b, obj.c0() + x / obj.mu());
  for (Index i = 0; i < x.size(); ++i) {
    for (double s : {-1.0, 1.0}) {
      Vector y = x;
      y(i) += s * kBreakpointRadius;
      if (budget_pattern(*b, obj.c0() + y / obj.mu()) != base) return true;
    }
  }
  return false;
}

Outcome gradient_check() {
  Rng rng(4);
  double worst = 0.0;
  int excluded = 0;
  std::map<std::string, int> tested;
  for (int type = 0; type < 3; ++type) {
    int done = 0;
    while (done < 100) {
      const Index n = uniform_int(rng, 1, 6);
      const UncertaintySet set = type == 0   ? UncertaintySet(random_box(rng, n))
                                 : type == 1 ? UncertaintySet(random_budgeted(rng, n))
                                             : UncertaintySet(random_scenarios(rng, n, uniform_int(rng, 1, 4)));
      const SmoothedObjective<double> obj(set, uniform(rng, 0.1, 2.0), 1e-12);
      const Vector x = random_vector(rng, n, -2, 2);
      if (near_breakpoint(obj, x)) {
        ++excluded;
        continue;
      }
      const auto r = eval_f_mu(obj, x);
      Vector fd(n);
      for (Index i = 0; i < n; ++i) {
        Vector xp = x, xm = x;
        xp(i) += kGradientStep;
        xm(i) -= kGradientStep;
        fd(i) = (eval_f_mu(obj, xp).value - eval_f_mu(obj, xm).value) / (2 * kGradientStep);
      }
      worst = std::max(worst, (fd - r.gradient).cwiseAbs().maxCoeff() / (1.0 + r.gradient.norm()));
      ++done;
      ++tested[kind_name(set)];
    }
  }
  return {worst <= kGradientRelTol, "300 points (100 per set type), " + std::to_string(excluded) +
                                        " budgeted samples excluded near breakpoints, max rel err " + fmt(worst)};
}

// ---- criterion 5 ----
Outcome sandwich() {
  Rng rng(5);
  int violations = 0;
  double worst = -INFINITY;
  for (int type = 0; type < 3; ++type) {
    for (int k = 0; k < 500; ++k) {
      const Index n = uniform_int(rng, 1, 6);
      const UncertaintySet set = type == 0   ? UncertaintySet(random_box(rng, n))
                                 : type == 1 ? UncertaintySet(random_budgeted(rng, n))
                                             : UncertaintySet(random_scenarios(rng, n, uniform_int(rng, 1, 4)));
      const double mu = std::exp(uniform(rng, std::log(1e-3), std::log(10.0)));
      const SmoothedObjective<double> obj(set, mu, 1e-9);
      const Vector x = random_vector(rng, n, -3, 3);
      const auto s = sandwich_bounds(obj, x, constants(set).M);
      const double f = eval_f(set, x);
      worst = std::max({worst, s.lo - f, f - s.hi});
      if (s.lo > f + kSandwichSlack || f > s.hi + kSandwichSlack) ++violations;
    }
  }
  return {violations == 0, "1500 samples, " + std::to_string(violations) + " violations, max excess " + fmt(worst)};
}

// ---- criterion 6 ----
Outcome duality(const std::vector<SuiteCase>& suite) {
  Rng rng(6);
  double worst_lp = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Index n = uniform_int(rng, 2, 10);
    const UncertaintySet set = k % 3 == 0   ? UncertaintySet(random_box(rng, n))
                               : k % 3 == 1 ? UncertaintySet(random_budgeted(rng, n))
                                            : UncertaintySet(random_scenarios(rng, n, uniform_int(rng, 1, 5)));
    ActiveVertexSet vs;
    const int count = uniform_int(rng, 1, 30);
    for (int i = 0; i < count; ++i) vs.add(random_vector(rng, n, -1, 1));
    const double a = epigraph_lp(vs, set).tau_star, b = convhull_minmax(vs, set).value;
    worst_lp = std::max(worst_lp, std::abs(a - b) / (1.0 + std::abs(b)));
  }
  double worst_run = 0.0;
  int not_closed = 0;
  for (std::size_t k = 0; k < 20; ++k) {
    const ProblemInstance inst = make_problem(suite[k].file);
    SolverConfig cfg;
    cfg.epsilon = 1e-7;
    cfg.max_iters = 20000;
    cfg.max_lmo_calls = 20000;
    cfg.method = Method::ConsGen;
    const RunResult cg = solve(inst, cfg);
    cfg.method = Method::FWConvHull;
    const RunResult sd = solve(inst, cfg);
    if (cg.termination != Termination::GapClosed || sd.termination != Termination::GapClosed) ++not_closed;
    worst_run = std::max(worst_run, std::abs(cg.f_best - sd.f_best) / (1.0 + std::abs(sd.f_best)));
  }
  return {worst_lp <= kDualityTol && worst_run <= kDualityTol && not_closed == 0,
          "LP max rel diff " + fmt(worst_lp) + " over 100 vertex sets; consgen vs fw_convhull max rel diff " +
              fmt(worst_run) + " over 20 instances, " + std::to_string(not_closed) + " not closed"};
}

// ---- criterion 7 ----
Outcome lmo_exactness() {
  Rng rng(7);
  int instances = 0, mismatches = 0;
  for (int n = 3; n <= 7; ++n) {
    std::vector<GraphInstance> graphs = {GraphInstance::complete(n)};
    for (int r = 0; r < 3; ++r) graphs.push_back(random_connected_graph(rng, n, 0.5));
    for (const auto& g : graphs) {
      const auto trees = enumerate_spanning_trees(g);
      const MstOracle mst(g);
      for (int k = 0; k < 100; ++k) {
        const Vector c = random_vector(rng, g.dimension(), -1, 1);
        if (std::abs(mst.minimize(c).dot(c) - min_dot(trees, c)) > kLmoTol) ++mismatches;
      }
      ++instances;
    }
    const GraphInstance kn = GraphInstance::complete(n);
    const auto tours = enumerate_tours(kn);
    const TspOracle tsp(kn);
    for (int k = 0; k < 100; ++k) {
      const Vector c = random_vector(rng, kn.dimension(), -1, 1);
      if (std::abs(tsp.minimize(c).dot(c) - min_dot(tours, c)) > kLmoTol) ++mismatches;
    }
    ++instances;
  }
  return {mismatches == 0, std::to_string(instances) + " graphs x 100 costs, " + std::to_string(mismatches) +
                               " mismatches"};
}

// ---- criterion 8 ----
struct TrendRow {
  std::uint64_t seed;
  double gamma;
  bool large;
  double fw_growth, cg_growth;
  std::int64_t fw_calls, cg_calls;      // to reach the threshold (-1 = never)
  std::int64_t fw_iters, cg_iters;
  std::int64_t fw_calls_tight, cg_calls_tight;
  double start, lower, eps;
};

double per_iteration_growth(const SolverTrace& trace) {
  const auto& r = trace.records();
  if (r.size() < 9) return NAN;
  std::vector<double> dt;
  for (std::size_t i = 2; i < r.size(); ++i) dt.push_back(r[i].elapsed - r[i - 1].elapsed);
  const std::size_t q = dt.size() / 4;
  double first = 0, last = 0;
  for (std::size_t i = 0; i < q; ++i) {
    first += dt[i];
    last += dt[dt.size() - 1 - i];
  }
  return last / std::max(first, 1e-12);
}

const TraceRecord* first_reaching(const SolverTrace& trace, double threshold) {
  for (const auto& rec : trace.records()) {
    if (rec.f_best <= threshold) return &rec;
  }
  return nullptr;
}

Outcome trends(const std::filesystem::path& work) {
  std::vector<TrendRow> rows;
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  for (std::uint64_t seed : seeds) {
    for (double share : {0.3, 0.03}) {
      GeneratorOptions g;
      g.kind = InstanceKind::Mst;
      g.size = 50;
      g.edge_probability = 0.245;
      g.seed = seed;
      g.gamma = 0.0;
      InstanceFile file = generate_instance(g);
      const Index n = file.dimension();
      const auto& b = std::get<Budgeted>(*file.uncertainty);
      file.uncertainty = Budgeted(b.c_lower(), b.d(), std::round(share * static_cast<double>(n)));
      const ProblemInstance inst = make_problem(file);

      // FW aims for 0.1% relative accuracy measured at the common starting vertex.
      const Vector x0 = inst.lmo().minimize(default_anchor(inst.uncertainty(), 1e-12));
      const double eps_fw = kTrendRelEps * eval_f(inst.uncertainty(), x0);

      SolverConfig cfg;
      cfg.epsilon = eps_fw;
      cfg.max_iters = 2000;
      cfg.max_lmo_calls = 2001;
      cfg.method = Method::FW;
      const RunResult fw = solve(inst, cfg);
      cfg.method = Method::ConsGen;
      cfg.epsilon = 1e-6;
      cfg.max_lmo_calls = 1000;
      const RunResult cg = solve(inst, cfg);

      // Threshold: within eps_fw of the best lower bound.
      const double lower = cg.dual_bound.value_or(std::min(fw.f_best, cg.trace.back().f_best));
      const double threshold = lower + eps_fw;
      const TraceRecord* fr = first_reaching(fw.trace, threshold);
      const TraceRecord* cr = first_reaching(cg.trace, threshold);
      // Tighter reference: 2% of the start-to-bound gap, reported only.
      const double start = fw.trace.records().front().f_value;
      const double tight = lower + 0.02 * (start - lower);
      const TraceRecord* ft = first_reaching(fw.trace, tight);
      const TraceRecord* ct = first_reaching(cg.trace, tight);
      rows.push_back({seed, std::get<Budgeted>(inst.uncertainty()).gamma(), share >= 0.2, per_iteration_growth(fw.trace),
                      per_iteration_growth(cg.trace), fr ? fr->lmo_calls : -1, cr ? cr->lmo_calls : -1,
                      fr ? fr->iteration : -1, cr ? cr->iteration : -1, ft ? ft->lmo_calls : -1,
                      ct ? ct->lmo_calls : -1, start, lower, eps_fw});

      std::ofstream(work / ("trend_s" + std::to_string(seed) + "_g" + std::to_string(static_cast<int>(share * 100)) +
                            "__fw.csv"))
          << [&] {
               std::ostringstream o;
               write_trace_csv(o, fw.trace);
               return o.str();
             }();
      std::ofstream(work / ("trend_s" + std::to_string(seed) + "_g" + std::to_string(static_cast<int>(share * 100)) +
                            "__consgen.csv"))
          << [&] {
               std::ostringstream o;
               write_trace_csv(o, cg.trace);
               return o.str();
             }();
    }
  }

  int a_ok = 0, b_ok = 0, b_total = 0, c_ok = 0, c_total = 0;
  std::ofstream report_file(work / "trend_report.md");
  report_file << "| seed | gamma | start | lower | eps | fw time growth | consgen time growth | fw calls | consgen calls | "
                 "fw iters | consgen iters | fw calls (2% gap) | consgen calls (2% gap) |\n"
                 "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  auto calls_better = [](std::int64_t mine, std::int64_t other) {
    return mine >= 0 && (other < 0 || mine < other);
  };
  std::map<std::uint64_t, bool> seed_a, seed_b;
  for (const auto& r : rows) {
    report_file << "| " << r.seed << " | " << r.gamma << " | " << r.start << " | " << r.lower << " | " << fmt(r.eps)
                << " | " << fmt(r.fw_growth) << " | " << fmt(r.cg_growth) << " | "
                << r.fw_calls << " | " << r.cg_calls << " | " << r.fw_iters << " | " << r.cg_iters << " | " << r.fw_calls_tight
                << " | " << r.cg_calls_tight << " |\n";
    if (r.large) {
      seed_a[r.seed] = r.cg_growth >= kTimeGrowth && r.fw_growth <= kTimeFlat;
      seed_b[r.seed] = calls_better(r.fw_calls, r.cg_calls);
      ++b_total;
    } else {
      ++c_total;
      if (calls_better(r.cg_iters, r.fw_iters)) ++c_ok;
    }
  }
  for (const auto& [s, ok] : seed_a) a_ok += ok;
  for (const auto& [s, ok] : seed_b) b_ok += ok;
  const double need = kTrendShare * static_cast<double>(seeds.size());
  report_file << "\n(a) " << a_ok << "/" << seeds.size() << " seeds, (b) " << b_ok << "/" << b_total
              << " seeds, (c) " << c_ok << "/" << c_total << " seeds\n";
  return {a_ok >= need && b_ok >= need,
          "(a) time trend on " + std::to_string(a_ok) + "/" + std::to_string(seeds.size()) +
              " seeds, (b) fewer FW oracle calls on " + std::to_string(b_ok) + "/" + std::to_string(b_total) +
              ", (c) fewer consgen iterations at small gamma on " + std::to_string(c_ok) + "/" +
              std::to_string(c_total) + "; report in " + (work / "trend_report.md").string()};
}

// ---- criterion 9 ----
std::vector<std::string> strip_timing(const std::filesystem::path& file, bool summary) {
  std::ifstream in(file);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(cell);
    if (!line.empty() && line.back() == ',') cols.emplace_back();
    const std::size_t drop = summary ? cols.size() - 1 : 2;
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i == drop) continue;
      out += cols[i] + ",";
    }
    lines.push_back(out);
  }
  return lines;
}

Outcome determinism(const std::filesystem::path& work) {
  const Json spec_json = {
      {"generate", {{"kind", "mst"}, {"sizes", {8}}, {"gammas", {2, 6}}, {"seeds", {11, 12}}}},
      {"methods", {"fw", "afw", "fw_convhull", "consgen"}},
      {"epsilon", 5.0},
      {"max_iters", 300},
      {"max_lmo", 300}};
  std::vector<std::filesystem::path> dirs = {work / "replay_a", work / "replay_b"};
  for (const auto& d : dirs) {
    std::filesystem::remove_all(d);
    ExperimentSpec spec = experiment_from_json(spec_json);
    spec.output_dir = d;
    const auto outcome = run_experiment(spec);
    if (!outcome.instance_errors.empty() || !outcome.solver_errors.empty()) return {false, "bench run had errors"};
  }
  int files = 0, differing = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dirs[0])) {
    const auto name = entry.path().filename();
    ++files;
    const bool summary = name == "summary.csv";
    if (!std::filesystem::exists(dirs[1] / name) ||
        strip_timing(entry.path(), summary) != strip_timing(dirs[1] / name, summary)) {
      ++differing;
    }
  }
  return {differing == 0 && files == 17,
          std::to_string(files) + " CSV files compared, " + std::to_string(differing) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string work_dir = "acceptance_work";
  std::vector<int> only;
  app.add_option("--work-dir", work_dir, "scratch directory");
  app.add_option("--only", only, "criteria to run");
  CLI11_PARSE(app, argc, argv);
  const std::filesystem::path work = work_dir;
  std::filesystem::create_directories(work);
  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };

  std::vector<SuiteCase> suite;
  if (wanted(1) || wanted(2) || wanted(6)) suite = build_suite();

  bool all = true;
  auto run = [&](int id, auto&& fn) {
    if (!wanted(id)) return;
    Stopwatch clock;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    o.detail += " [" + fmt(clock.seconds(), 3) + " s]";
    report(id, o);
    all = all && o.pass;
  };
  run(1, [&] { return fixed_smoothing_bound(suite); });
  run(2, [&] { return adaptive_bound(suite); });
  run(3, [] { return projection_equivalence(); });
  run(4, [] { return gradient_check(); });
  run(5, [] { return sandwich(); });
  run(6, [&] { return duality(suite); });
  run(7, [] { return lmo_exactness(); });
  run(8, [&] { return trends(work); });
  run(9, [&] { return determinism(work); });
  return all ? 0 : 1;
}
