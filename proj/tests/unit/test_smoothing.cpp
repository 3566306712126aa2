#include <cmath>

#include "doctest.h"
#include "rofw/smoothing.hpp"
#include "support/brute.hpp"

using namespace rofw;
using namespace rofw::testing;

namespace {

Vector scalar_vec(double v) { return Vector::Constant(1, v); }

const UncertaintySet kUnitInterval = Box(scalar_vec(-1), scalar_vec(1));

std::vector<UncertaintySet> random_sets(Rng& rng, Index n) {
  return {random_box(rng, n), random_budgeted(rng, n), random_scenarios(rng, n, uniform_int(rng, 1, 4))};
}

}  // namespace

TEST_CASE("eval_f examples") {
  CHECK(eval_f(kUnitInterval, scalar_vec(2)) == doctest::Approx(2.0));
  Matrix C(2, 2);
  C << 1, 2, 2, 1;
  CHECK(eval_f(UncertaintySet(ScenarioHull(C)), Vector::Ones(2).eval()) == doctest::Approx(3.0));
  Rng rng(31);
  for (const auto& set : random_sets(rng, 3)) CHECK(eval_f(set, Vector::Zero(3).eval()) == 0.0);
}

TEST_CASE("Huber examples on [-1, 1]") {
  const SmoothedObjective<double> obj(kUnitInterval, scalar_vec(0), 1.0, 1e-9);
  auto r = eval_f_mu(obj, scalar_vec(0.5));
  CHECK(r.gradient(0) == doctest::Approx(0.5));
  CHECK(r.value == doctest::Approx(0.125));
  r = eval_f_mu(obj, scalar_vec(3));
  CHECK(r.gradient(0) == doctest::Approx(1.0));
  CHECK(r.value == doctest::Approx(2.5));
  const auto s = sandwich_bounds(obj, scalar_vec(3), 2.0);
  CHECK(s.lo == doctest::Approx(2.5));
  CHECK(s.hi == doctest::Approx(4.5));
  CHECK(obj.lipschitz() == 1.0);
}

TEST_CASE("zero input gives the anchor") {
  Rng rng(32);
  for (const auto& set : random_sets(rng, 4)) {
    const SmoothedObjective<double> obj(set, 0.7, 1e-9);
    const auto r = eval_f_mu(obj, Vector::Zero(4).eval());
    CHECK((r.gradient - obj.c0()).norm() < 1e-8);
    CHECK(std::abs(r.value) < 1e-12);
  }
}

TEST_CASE("anchor validation") {
  CHECK_THROWS(SmoothedObjective<double>(kUnitInterval, scalar_vec(2), 1.0, 1e-9));
  CHECK_THROWS(SmoothedObjective<double>(kUnitInterval, scalar_vec(0), 0.0, 1e-9));
  const Budgeted b(Vector::Zero(4), Vector::Ones(4), 1.0);
  const Vector c0 = default_anchor(UncertaintySet(b), 1e-9);
  CHECK(c0.isApprox(Vector::Constant(4, 0.25)));
}

TEST_CASE("shrinking mu shrinks the sandwich") {
  const SmoothedObjective<double> obj(kUnitInterval, scalar_vec(0), 1.0, 1e-9);
  double width = INFINITY;
  for (double mu : {1.0, 0.1, 0.01}) {
    const auto s = sandwich_bounds(obj.with_mu(mu), scalar_vec(0.3), 2.0);
    CHECK(s.hi - s.lo < width);
    width = s.hi - s.lo;
    CHECK(s.lo <= 0.3 + 1e-12);
    CHECK(0.3 <= s.hi + 1e-12);
  }
}

TEST_CASE("sandwich holds on random samples") {
  Rng rng(33);
  for (int rep = 0; rep < 500; ++rep) {
    const Index n = uniform_int(rng, 1, 6);
    for (const auto& set : random_sets(rng, n)) {
      const double mu = std::exp(uniform(rng, std::log(1e-3), std::log(10.0)));
      const SmoothedObjective<double> obj(set, mu, 1e-9);
      const Vector x = random_vector(rng, n, -3, 3);
      const auto s = sandwich_bounds(obj, x, constants(set).M);
      const double f = eval_f(set, x);
      CHECK(s.lo <= f + 1e-9);
      CHECK(f <= s.hi + 1e-9);
    }
  }
}

TEST_CASE("monotone in mu, Lipschitz gradient, convex") {
  Rng rng(34);
  for (int rep = 0; rep < 100; ++rep) {
    const Index n = uniform_int(rng, 1, 6);
    for (const auto& set : random_sets(rng, n)) {
      const double mu1 = uniform(rng, 0.01, 1.0), mu2 = mu1 * uniform(rng, 1.1, 5.0);
      const SmoothedObjective<double> a(set, mu1, 1e-9);
      const auto b = a.with_mu(mu2);
      const Vector x = random_vector(rng, n, -2, 2), y = random_vector(rng, n, -2, 2);
      const double fa = eval_f_mu(a, x).value, fb = eval_f_mu(b, x).value;
      CHECK(fb <= fa + 1e-9);
      CHECK(fa <= eval_f(set, x) + 1e-9);
      const Vector ga = eval_f_mu(a, x).gradient, gy = eval_f_mu(a, y).gradient;
      CHECK((ga - gy).norm() <= (x - y).norm() / mu1 + 1e-8);
      const double mid = eval_f_mu(a, ((x + y) / 2).eval()).value;
      CHECK(mid <= 0.5 * (fa + eval_f_mu(a, y).value) + 1e-9);
    }
  }
}

TEST_CASE("gradient matches central differences") {
  Rng rng(35);
  const double h = 1e-6;
  int checked = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const Index n = uniform_int(rng, 1, 6);
    for (const auto& set : random_sets(rng, n)) {
      const double mu = uniform(rng, 0.1, 2.0);
      const SmoothedObjective<double> obj(set, mu, 1e-12);
      const Vector x = random_vector(rng, n, -2, 2);
      const auto r = eval_f_mu(obj, x);
      Vector fd(n);
      for (Index i = 0; i < n; ++i) {
        Vector xp = x, xm = x;
        xp(i) += h;
        xm(i) -= h;
        fd(i) = (eval_f_mu(obj, xp).value - eval_f_mu(obj, xm).value) / (2 * h);
      }
      const double err = (fd - r.gradient).cwiseAbs().maxCoeff();
      CHECK(err <= 1e-4 * (1.0 + r.gradient.norm()));
      ++checked;
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("mu schedules") {
  const auto adaptive = MuSchedule::adaptive(1.0, 2.0);
  CHECK(mu_at(adaptive, 0) == doctest::Approx(1.0));
  CHECK(mu_at(adaptive, 3) == doctest::Approx(0.5));
  for (int t = 0; t < 50; ++t) CHECK(adaptive.at(t + 1) < adaptive.at(t));
  const auto fixed = MuSchedule::fixed(0.025);
  CHECK(mu_at(fixed, 0) == 0.025);
  CHECK(mu_at(fixed, 1000) == 0.025);
  CHECK_THROWS(MuSchedule::fixed(0.0));
  CHECK_THROWS(MuSchedule::adaptive(0.0, 1.0));
  CHECK_THROWS(adaptive.at(-1));
}
