#include "rofw/hull.hpp"

#include <optional>

namespace rofw {
namespace {

// Box and budgeted sets as c = c_lower + d * theta, theta in [0,1]^n, optional sum(theta) <= gamma.
struct DeviationForm {
  Vector c_lower;
  Vector d;
  std::optional<double> gamma;
};

std::optional<DeviationForm> deviation_form(const UncertaintySet& set) {
  if (const auto* box = std::get_if<Box>(&set)) {
    return DeviationForm{box->lower(), box->upper() - box->lower(), std::nullopt};
  }
  if (const auto* budget = std::get_if<Budgeted>(&set)) {
    return DeviationForm{budget->c_lower(), budget->d(), budget->gamma()};
  }
  return std::nullopt;
}

void require_vertices(const ActiveVertexSet& vertices, const UncertaintySet& set) {
  if (vertices.empty()) throw std::invalid_argument("hull LP: vertex set is empty");
  if (vertices.dimension() != dimension(set)) {
    throw std::invalid_argument("hull LP: vertex and uncertainty dimensions differ");
  }
}

void require_optimal(const LpSolution& sol, const char* what) {
  if (sol.status != LpStatus::Optimal) {
    throw SolverError(std::string(what) + ": LP ended " + to_string(sol.status));
  }
}

Vector simplex_weights(Vector w) {
  w = w.cwiseMax(0.0);
  const double total = w.sum();
  if (!(total > 0.0)) throw SolverError("hull LP: multipliers do not form a distribution");
  return w / total;
}

}  // namespace

EpigraphSolution epigraph_lp(const ActiveVertexSet& vertices, const UncertaintySet& set,
                             double tol) {
  require_vertices(vertices, set);
  const Matrix V = vertices.matrix();
  const Index n = V.rows();
  const Index k = V.cols();
  EpigraphSolution out;
  LinearProgram lp;

  if (const auto dev = deviation_form(set)) {
    // columns: theta (n), tau
    lp.objective = Vector::Zero(n + 1);
    lp.objective(n) = 1.0;
    lp.lower = Vector::Zero(n + 1);
    lp.upper = Vector::Ones(n + 1);
    for (Index j = 0; j < n; ++j) {
      if (dev->d(j) <= 0.0) lp.upper(j) = 0.0;
    }
    lp.lower(n) = -kInf;
    lp.upper(n) = kInf;
    Vector row(n + 1);
    for (Index i = 0; i < k; ++i) {
      row.head(n) = -dev->d.cwiseProduct(V.col(i));
      row(n) = 1.0;
      lp.add_row(row, Relation::LessEqual, dev->c_lower.dot(V.col(i)));
    }
    if (dev->gamma) {
      row.head(n).setOnes();
      row(n) = 0.0;
      lp.add_row(row, Relation::LessEqual, *dev->gamma);
    }
    out.lp = solve_lp(lp, tol);
    require_optimal(out.lp, "epigraph LP");
    const Vector theta = out.lp.x.head(n).cwiseMax(0.0).cwiseMin(1.0);
    out.c_star = dev->c_lower + dev->d.cwiseProduct(theta);
  } else {
    const auto& hull = std::get<ScenarioHull>(set);
    const Matrix& C = hull.scenarios();
    const Index S = C.cols();
    const Matrix values = C.transpose() * V;  // S x k: scenario s against vertex i
    // columns: lambda (S), tau
    lp.objective = Vector::Zero(S + 1);
    lp.objective(S) = 1.0;
    lp.lower = Vector::Zero(S + 1);
    lp.upper = Vector::Constant(S + 1, kInf);
    lp.lower(S) = -kInf;
    Vector row(S + 1);
    for (Index i = 0; i < k; ++i) {
      row.head(S) = -values.col(i);
      row(S) = 1.0;
      lp.add_row(row, Relation::LessEqual, 0.0);
    }
    row.head(S).setOnes();
    row(S) = 0.0;
    lp.add_row(row, Relation::Equal, 1.0);
    out.lp = solve_lp(lp, tol);
    require_optimal(out.lp, "epigraph LP");
    out.c_star = C * simplex_weights(out.lp.x.head(S));
  }
  out.tau_star = out.lp.objective_value;
  out.weights = simplex_weights(out.lp.duals.head(k));
  return out;
}

ConvHullSolution convhull_minmax(const ActiveVertexSet& vertices, const UncertaintySet& set,
                                 double tol) {
  require_vertices(vertices, set);
  const Matrix V = vertices.matrix();
  const Index n = V.rows();
  const Index k = V.cols();
  ConvHullSolution out;
  LinearProgram lp;

  if (const auto dev = deviation_form(set)) {
    // columns: alpha (k), [lambda], pi (n); minimize c_lower^T V alpha + gamma lambda + sum pi
    const Index budget_cols = dev->gamma ? 1 : 0;
    const Index cols = k + budget_cols + n;
    lp.objective = Vector::Zero(cols);
    lp.objective.head(k) = -(V.transpose() * dev->c_lower);
    if (dev->gamma) lp.objective(k) = -*dev->gamma;
    lp.objective.tail(n).setConstant(-1.0);
    Vector row = Vector::Zero(cols);
    for (Index j = 0; j < n; ++j) {
      row.setZero();
      row.head(k) = dev->d(j) * V.row(j).transpose();
      if (dev->gamma) row(k) = -1.0;
      row(k + budget_cols + j) = -1.0;
      lp.add_row(row, Relation::LessEqual, 0.0);
    }
    row.setZero();
    row.head(k).setOnes();
    lp.add_row(row, Relation::Equal, 1.0);
    out.lp = solve_lp(lp, tol);
    require_optimal(out.lp, "convex hull LP");
    const Vector theta = out.lp.duals.head(n).cwiseMax(0.0).cwiseMin(1.0);
    out.c_dual = dev->c_lower + dev->d.cwiseProduct(theta);
  } else {
    const auto& hull = std::get<ScenarioHull>(set);
    const Matrix& C = hull.scenarios();
    const Index S = C.cols();
    const Matrix values = C.transpose() * V;
    // columns: alpha (k), t; minimize t
    lp.objective = Vector::Zero(k + 1);
    lp.objective(k) = -1.0;
    lp.lower = Vector::Zero(k + 1);
    lp.upper = Vector::Constant(k + 1, kInf);
    lp.lower(k) = -kInf;
    Vector row(k + 1);
    for (Index s = 0; s < S; ++s) {
      row.head(k) = values.row(s).transpose();
      row(k) = -1.0;
      lp.add_row(row, Relation::LessEqual, 0.0);
    }
    row.head(k).setOnes();
    row(k) = 0.0;
    lp.add_row(row, Relation::Equal, 1.0);
    out.lp = solve_lp(lp, tol);
    require_optimal(out.lp, "convex hull LP");
    out.c_dual = C * simplex_weights(out.lp.duals.head(S));
  }
  out.weights = simplex_weights(out.lp.x.head(k));
  out.x_conv = V * out.weights;
  out.lp_value = -out.lp.objective_value;
  out.value = support_max(set, out.x_conv).value;
  return out;
}

}  // namespace rofw
