#include <cmath>

#include "doctest.h"
#include "rofw/hull.hpp"
#include "rofw/lp.hpp"
#include "support/brute.hpp"

using namespace rofw;
using namespace rofw::testing;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

LinearProgram make_lp(Index n) {
  LinearProgram lp;
  lp.objective = Vector::Zero(n);
  lp.A = Matrix(0, n);
  return lp;
}

// Maximizes over the vertices of a 2-D LP by enumerating all pairs of tight constraints.
double brute_2d(const Matrix& A, const Vector& b, const Vector& c) {
  Matrix rows(A.rows() + 2, 2);
  Vector rhs(A.rows() + 2);
  rows << A, -Matrix::Identity(2, 2);
  rhs << b, Vector::Zero(2);
  double best = -INFINITY;
  for (Index i = 0; i < rows.rows(); ++i) {
    for (Index j = i + 1; j < rows.rows(); ++j) {
      Eigen::Matrix2d M;
      M << rows.row(i), rows.row(j);
      if (std::abs(M.determinant()) < 1e-12) continue;
      const Eigen::Vector2d x = M.inverse() * Eigen::Vector2d(rhs(i), rhs(j));
      if (((rows * x - rhs).array() <= 1e-9).all()) best = std::max(best, c.dot(x));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("tiny LPs") {
  LinearProgram lp = make_lp(1);
  lp.objective << 1.0;
  lp.add_row(vec({1}), Relation::LessEqual, 3.0);
  auto s = solve_lp(lp);
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.x(0) == doctest::Approx(3.0));

  LinearProgram deg = make_lp(2);
  deg.objective << 1.0, 1.0;
  deg.add_row(vec({1, 1}), Relation::LessEqual, 1.0);
  s = solve_lp(deg);
  CHECK(s.objective_value == doctest::Approx(1.0));
  CHECK(s.x == vec({1, 0}));
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram lp = make_lp(1);
  lp.objective << 1.0;
  lp.add_row(vec({1}), Relation::LessEqual, -1.0);
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
  LinearProgram ub = make_lp(2);
  ub.objective << 1.0, 0.0;
  ub.add_row(vec({0, 1}), Relation::LessEqual, 1.0);
  CHECK(solve_lp(ub).status == LpStatus::Unbounded);
}

TEST_CASE("equality, >= rows, free and bounded variables") {
  // max x - y  s.t.  x + y = 2,  x >= 0.5,  x <= 1.5 (bound),  y free
  LinearProgram lp = make_lp(2);
  lp.objective << 1.0, -1.0;
  lp.add_row(vec({1, 1}), Relation::Equal, 2.0);
  lp.add_row(vec({1, 0}), Relation::GreaterEqual, 0.5);
  lp.lower = vec({-kInf, -kInf});
  lp.upper = vec({1.5, kInf});
  const auto s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x(0) == doctest::Approx(1.5));
  CHECK(s.x(1) == doctest::Approx(0.5));
  CHECK(s.objective_value == doctest::Approx(1.0));
  CHECK(s.duals(0) == doctest::Approx(-1.0));
  CHECK(s.duals(1) == doctest::Approx(0.0));
}

TEST_CASE("random 2-D LPs match vertex enumeration and certify themselves") {
  Rng rng(51);
  for (int rep = 0; rep < 300; ++rep) {
    const Index m = uniform_int(rng, 1, 8);
    Matrix A(m, 2);
    for (Index i = 0; i < m; ++i) A.row(i) = random_vector(rng, 2, -1, 2).transpose();
    const Vector b = random_vector(rng, m, 0.1, 3.0);
    // Box keeps the LP bounded.
    Matrix Ab(m + 2, 2);
    Vector bb(m + 2);
    Ab << A, Matrix::Identity(2, 2);
    bb << b, 10.0, 10.0;
    const Vector c = random_vector(rng, 2, -1, 1);
    LinearProgram lp = make_lp(2);
    lp.objective = c;
    for (Index i = 0; i < Ab.rows(); ++i) lp.add_row(Ab.row(i).transpose(), Relation::LessEqual, bb(i));
    const auto s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective_value == doctest::Approx(brute_2d(Ab, bb, c)).epsilon(1e-9));
    CHECK(s.primal_residual <= 1e-9);
    CHECK(s.dual_residual <= 1e-9);
    CHECK(s.complementarity <= 1e-9);
    CHECK((s.duals.array() >= -1e-12).all());
    CHECK(bb.dot(s.duals) == doctest::Approx(s.objective_value).epsilon(1e-9));
  }
}

TEST_CASE("random larger LPs satisfy strong duality") {
  Rng rng(52);
  for (int rep = 0; rep < 50; ++rep) {
    const Index m = uniform_int(rng, 5, 40), n = uniform_int(rng, 5, 40);
    LinearProgram lp = make_lp(n);
    lp.objective = random_vector(rng, n, -1, 1);
    for (Index i = 0; i < m; ++i) lp.add_row(random_vector(rng, n, 0, 1), Relation::LessEqual, uniform(rng, 1, 5));
    lp.add_row(Vector::Ones(n), Relation::GreaterEqual, 0.5);
    lp.upper = Vector::Constant(n, 2.0);
    const auto s = solve_lp(lp);
    if (s.status != LpStatus::Optimal) continue;
    CHECK(s.primal_residual <= 1e-9);
    CHECK(s.dual_residual <= 1e-9);
    CHECK(s.complementarity <= 1e-9 * (1.0 + std::abs(s.objective_value)));
    // Deterministic given identical input.
    const auto again = solve_lp(lp);
    CHECK(again.x == s.x);
    CHECK(again.pivots == s.pivots);
  }
}

TEST_CASE("degenerate LP terminates") {
  // Many redundant constraints through the optimal vertex.
  LinearProgram lp = make_lp(3);
  lp.objective << 1, 1, 1;
  for (int k = 0; k < 20; ++k) {
    lp.add_row(vec({1.0, 1.0 + k * 1e-3, 1.0}), Relation::LessEqual, 1.0);
    lp.add_row(vec({1.0, 0.0, 0.0}), Relation::LessEqual, 1.0);
  }
  const auto s = solve_lp(lp);
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == doctest::Approx(1.0));
}

TEST_CASE("epigraph LP examples") {
  const UncertaintySet interval = Box(Vector::Constant(1, -1), Vector::Constant(1, 1));
  ActiveVertexSet two({Vector::Constant(1, 1), Vector::Constant(1, -1)});
  const auto e = epigraph_lp(two, interval);
  CHECK(e.tau_star == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(e.c_star(0)) < 1e-9);
  const auto h = convhull_minmax(two, interval);
  CHECK(std::abs(h.x_conv(0)) < 1e-9);
  CHECK(std::abs(h.value) < 1e-9);

  Rng rng(53);
  const UncertaintySet b = random_budgeted(rng, 4);
  const Vector x = random_vector(rng, 4, 0, 1);
  ActiveVertexSet one({x});
  CHECK(epigraph_lp(one, b).tau_star == doctest::Approx(eval_f(b, x)));
  const auto h1 = convhull_minmax(one, b);
  CHECK(h1.x_conv.isApprox(x));
  CHECK(h1.value == doctest::Approx(eval_f(b, x)));
}

TEST_CASE("epigraph LP of a 2-scenario, 2-vertex toy") {
  Matrix C(2, 2);
  C << 3, 1, 1, 2;
  const UncertaintySet set = ScenarioHull(C);
  const std::vector<Vector> V = {vec({1, 0}), vec({0, 1})};
  const auto e = epigraph_lp(ActiveVertexSet(V), set);
  CHECK(e.tau_star >= maxmin_two_scenarios(C, V, 1e-5) - 1e-12);
  CHECK(e.tau_star == doctest::Approx(maxmin_two_scenarios(C, V, 1e-5)).epsilon(1e-4));
}

TEST_CASE("K3 epigraph LP against a c-grid") {
  const GraphInstance k3 = GraphInstance::complete(3);
  const auto trees = enumerate_spanning_trees(k3);
  const Budgeted set(vec({1.0, 1.2, 0.9}), vec({0.5, 0.3, 0.6}), 1.0);
  const auto e = epigraph_lp(ActiveVertexSet(trees), set);
  double best = -INFINITY;
  for (double a = 0; a <= 1.0 + 1e-12; a += 1e-3) {
    for (double b = 0; a + b <= 1.0 + 1e-12; b += 1e-3) {
      for (double c : {0.0, std::max(0.0, 1.0 - a - b)}) {
        const Vector cost = set.c_lower() + set.d().cwiseProduct(vec({a, b, c}));
        best = std::max(best, min_dot(trees, cost));
      }
    }
  }
  CHECK(e.tau_star >= best - 1e-9);
  CHECK(e.tau_star <= best + 2e-3);
  const auto h = convhull_minmax(ActiveVertexSet(trees), set);
  CHECK(h.value == doctest::Approx(e.tau_star).epsilon(1e-9));
}

TEST_CASE("convex hull LP against a 2-simplex grid") {
  Rng rng(54);
  for (int rep = 0; rep < 20; ++rep) {
    const Index n = uniform_int(rng, 2, 5);
    const ScenarioHull set = random_scenarios(rng, n, 2);
    Matrix V(n, 3);
    for (Index k = 0; k < 3; ++k) V.col(k) = random_vector(rng, n, -1, 1);
    const auto h = convhull_minmax(ActiveVertexSet({V.col(0), V.col(1), V.col(2)}), set);
    CHECK(h.value == doctest::Approx(minmax_three_vertices(set.scenarios(), V, 1e-3)).epsilon(1e-3).scale(1.0));
    CHECK(h.value <= minmax_three_vertices(set.scenarios(), V, 1e-3) + 1e-9);
  }
}

TEST_CASE("hull value is nonincreasing and matches the epigraph LP") {
  Rng rng(55);
  for (int rep = 0; rep < 40; ++rep) {
    const Index n = uniform_int(rng, 2, 8);
    const UncertaintySet set = rep % 3 == 0   ? UncertaintySet(random_box(rng, n))
                               : rep % 3 == 1 ? UncertaintySet(random_budgeted(rng, n))
                                              : UncertaintySet(random_scenarios(rng, n, 3));
    ActiveVertexSet vs;
    double prev = INFINITY;
    for (int k = 0; k < 8; ++k) {
      Vector v(n);
      for (Index j = 0; j < n; ++j) v(j) = uniform_int(rng, 0, 1);
      vs.add(v);
      const auto h = convhull_minmax(vs, set);
      const auto e = epigraph_lp(vs, set);
      CHECK(h.value <= prev + 1e-9);
      prev = h.value;
      CHECK(h.value == doctest::Approx(e.tau_star).epsilon(1e-6));
      CHECK(h.weights.minCoeff() >= -1e-12);
      CHECK(h.weights.sum() == doctest::Approx(1.0));
      CHECK(e.weights.sum() == doctest::Approx(1.0));
      CHECK(contains(set, e.c_star, 1e-7));
      CHECK(h.value == doctest::Approx(eval_f(set, h.x_conv)));
      for (const auto& v2 : vs.vertices()) CHECK(h.value <= eval_f(set, v2) + 1e-9);
    }
  }
}

TEST_CASE("active vertex set") {
  ActiveVertexSet s;
  CHECK(s.add(vec({1, 0})) == 0);
  CHECK(s.add(vec({0, 1})) == 1);
  CHECK(s.add(vec({1, 0})) == 0);
  CHECK(s.add(vec({1 + 1e-13, 0})) == 0);
  CHECK(s.size() == 2);
  CHECK_THROWS(s.set_weights(vec({0.7, 0.7})));
  s.set_weights(vec({0.25, 0.75}));
  CHECK(s.weights().has_value());
  CHECK_THROWS(s.add(vec({1, 2, 3})));
}
