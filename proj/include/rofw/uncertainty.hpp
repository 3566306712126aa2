#pragma once

// Uncertainty sets over cost vectors. Each set answers two questions exactly:
//   support_max(set, x)  -> max_{c in set} c^T x together with a maximizer
//   project(set, z, tol) -> argmin_{c in set} ||c - z||^2
// The first evaluates the robust objective, the second the gradient of its smoothing.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <Eigen/QR>

#include "rofw/core.hpp"

namespace rofw {

template <typename Scalar>
struct SupportResult {
  Scalar value;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> maximizer;
};

namespace detail {

template <typename Derived>
void require_dimension(const Eigen::MatrixBase<Derived>& v, Index n, const char* what) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected " +
                                std::to_string(n) + ", got " + std::to_string(v.size()) + ")");
  }
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& v, const char* what) {
  if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite input");
}

}  // namespace detail

/// Axis-aligned box [lower, upper].
template <typename Scalar>
class BoxSet {
 public:
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BoxSet(VectorType lower, VectorType upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() < 1 || lower_.size() != upper_.size()) {
      throw InstanceError("box: bounds must be nonempty and of equal length");
    }
    if (!lower_.allFinite() || !upper_.allFinite()) throw InstanceError("box: non-finite bound");
    if ((upper_.array() < lower_.array()).any()) throw InstanceError("box: lower > upper");
  }

  Index dimension() const { return lower_.size(); }
  const VectorType& lower() const { return lower_; }
  const VectorType& upper() const { return upper_; }

  template <typename Derived>
  SupportResult<Scalar> support_max(const Eigen::MatrixBase<Derived>& x) const {
    detail::require_dimension(x, dimension(), "box support");
    VectorType c = (x.array() > Scalar(0)).select(upper_, lower_);
    return {c.dot(x), std::move(c)};
  }

  template <typename Derived>
  VectorType project(const Eigen::MatrixBase<Derived>& z, Scalar /*tol*/) const {
    detail::require_dimension(z, dimension(), "box projection");
    detail::require_finite(z, "box projection");
    return z.cwiseMax(lower_).cwiseMin(upper_);
  }

  VectorType center() const { return (lower_ + upper_) / Scalar(2); }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& c, Scalar tol) const {
    return c.size() == dimension() && (c.array() >= lower_.array() - tol).all() &&
           (c.array() <= upper_.array() + tol).all();
  }

  GeometricConstants constants() const {
    const VectorType far = lower_.cwiseAbs().cwiseMax(upper_.cwiseAbs());
    return {0.0, static_cast<double>((upper_ - lower_).norm()), static_cast<double>(far.norm())};
  }

 private:
  VectorType lower_;
  VectorType upper_;
};

/// Budgeted set { c in [c_lower, c_lower + d] : sum_j (c_j - c_lower_j) / d_j <= gamma }.
///
/// Internally everything is done in the normalized deviation space c = c_lower + d * theta,
/// theta in [0,1]^n with sum(theta) <= gamma. gamma may be fractional.
template <typename Scalar>
class BudgetedSet {
 public:
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BudgetedSet(VectorType c_lower, VectorType d, Scalar gamma)
      : c_lower_(std::move(c_lower)), d_(std::move(d)), gamma_(gamma) {
    const Index n = c_lower_.size();
    if (n < 1 || d_.size() != n) throw InstanceError("budgeted: c_lower and d must match");
    if (!c_lower_.allFinite() || !d_.allFinite()) throw InstanceError("budgeted: non-finite data");
    if ((d_.array() <= Scalar(0)).any()) {
      throw InstanceError("budgeted: deviations must be strictly positive");
    }
    if (!(gamma_ >= Scalar(0)) || gamma_ > Scalar(n)) {
      throw InstanceError("budgeted: gamma must lie in [0, n]");
    }
  }

  Index dimension() const { return c_lower_.size(); }
  const VectorType& c_lower() const { return c_lower_; }
  const VectorType& d() const { return d_; }
  Scalar gamma() const { return gamma_; }

  /// Greedy fractional fill: the largest positive d_j x_j get theta_j = 1 until gamma runs out.
  template <typename Derived>
  SupportResult<Scalar> support_max(const Eigen::MatrixBase<Derived>& x) const {
    detail::require_dimension(x, dimension(), "budgeted support");
    const VectorType gain = d_.cwiseProduct(x);
    std::vector<Index> order(static_cast<std::size_t>(dimension()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return gain(a) > gain(b); });
    VectorType theta = VectorType::Zero(dimension());
    Scalar remaining = gamma_;
    for (Index j : order) {
      if (!(gain(j) > Scalar(0)) || !(remaining > Scalar(0))) break;
      theta(j) = std::min(Scalar(1), remaining);
      remaining -= theta(j);
    }
    VectorType c = c_lower_ + d_.cwiseProduct(theta);
    return {c.dot(x), std::move(c)};
  }

  /// Euclidean projection as a continuous quadratic knapsack in theta:
  ///   min sum_j d_j^2 (theta_j - w_j)^2  s.t.  theta in [0,1]^n, sum theta <= gamma,
  /// with w = (z - c_lower) / d. The budget multiplier nu >= 0 gives
  /// theta_j(nu) = clamp(w_j - nu / d_j^2, 0, 1); the breakpoints where a coordinate leaves
  /// its upper peg or enters its lower peg are swept in sorted order until the piecewise
  /// linear budget sum crosses gamma. Exact up to rounding; tol is unused.
  template <typename Derived>
  VectorType project(const Eigen::MatrixBase<Derived>& z, Scalar /*tol*/ = Scalar(0)) const {
    detail::require_dimension(z, dimension(), "budgeted projection");
    detail::require_finite(z, "budgeted projection");
    const VectorType w = (z - c_lower_).cwiseQuotient(d_);
    return c_lower_ + d_.cwiseProduct(project_theta(w));
  }

  VectorType project_theta(const VectorType& w) const {
    const Index n = dimension();
    const VectorType q = d_.cwiseAbs2();
    VectorType theta = w.cwiseMax(Scalar(0)).cwiseMin(Scalar(1));
    if (theta.sum() <= gamma_) return theta;
    if (gamma_ <= Scalar(0)) return VectorType::Zero(n);

    struct Event {
      Scalar nu;
      Index j;
      bool leaves_upper;  // otherwise: enters the zero peg
    };
    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(2 * n));
    // State just above nu = 0: pegged at one, free, or pegged at zero.
    Scalar ones = 0, free_sum = 0, free_weight = 0;
    for (Index j = 0; j < n; ++j) {
      if (w(j) > Scalar(1)) {
        ones += 1;
        events.push_back({(w(j) - Scalar(1)) * q(j), j, true});
        events.push_back({w(j) * q(j), j, false});
      } else if (w(j) > Scalar(0)) {
        free_sum += w(j);
        free_weight += Scalar(1) / q(j);
        events.push_back({w(j) * q(j), j, false});
      }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      if (a.nu != b.nu) return a.nu < b.nu;
      if (a.j != b.j) return a.j < b.j;
      return a.leaves_upper && !b.leaves_upper;
    });

    Scalar nu = std::numeric_limits<Scalar>::quiet_NaN();
    for (const Event& e : events) {
      const Scalar budget_at_event = ones + free_sum - e.nu * free_weight;
      if (budget_at_event <= gamma_) {
        nu = free_weight > Scalar(0) ? (ones + free_sum - gamma_) / free_weight : e.nu;
        break;
      }
      if (e.leaves_upper) {
        ones -= 1;
        free_sum += w(e.j);
        free_weight += Scalar(1) / q(e.j);
      } else {
        free_sum -= w(e.j);
        free_weight -= Scalar(1) / q(e.j);
      }
    }
    if (!std::isfinite(nu)) {
      throw SolverError("budgeted projection: multiplier search failed to bracket");
    }
    nu = std::max(nu, Scalar(0));

    // Re-solve nu from scratch on the identified free set to shed accumulated rounding.
    auto theta_at = [&](Scalar m) {
      return (w - m * q.cwiseInverse()).cwiseMax(Scalar(0)).cwiseMin(Scalar(1)).eval();
    };
    theta = theta_at(nu);
    Scalar fixed = 0, fsum = 0, fweight = 0;
    for (Index j = 0; j < n; ++j) {
      if (theta(j) >= Scalar(1)) {
        fixed += 1;
      } else if (theta(j) > Scalar(0)) {
        fsum += w(j);
        fweight += Scalar(1) / q(j);
      }
    }
    if (fweight > Scalar(0)) {
      const Scalar refined = (fixed + fsum - gamma_) / fweight;
      const VectorType candidate = theta_at(std::max(refined, Scalar(0)));
      if (std::abs(candidate.sum() - gamma_) <= std::abs(theta.sum() - gamma_)) theta = candidate;
    }
    return theta;
  }

  /// Uniform deviation min(gamma / n, 1) along every coordinate.
  VectorType center() const {
    const Scalar level = std::min(gamma_ / Scalar(dimension()), Scalar(1));
    return c_lower_ + d_ * level;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& c, Scalar tol) const {
    if (c.size() != dimension()) return false;
    const VectorType theta = (c - c_lower_).cwiseQuotient(d_);
    const VectorType dev = c - c_lower_;
    return (dev.array() >= -tol).all() && ((dev - d_).array() <= tol).all() &&
           theta.sum() <= gamma_ + tol;
  }

  /// M is exact for n <= kExactDiameterLimit (dynamic program over vertex pairs of the theta
  /// polytope); above that it is the fractional-knapsack bound on sum_j d_j^2 |dtheta_j| with
  /// sum |dtheta_j| <= 2 gamma, which never exceeds ||d||. M_max is always exact.
  GeometricConstants constants() const {
    const double M = dimension() <= kExactDiameterLimit ? std::sqrt(static_cast<double>(exact_diameter_sq()))
                                                        : std::sqrt(static_cast<double>(knapsack_diameter_sq()));
    return {0.0, std::min(M, static_cast<double>(d_.norm())),
            std::sqrt(static_cast<double>(max_norm_sq()))};
  }

  static constexpr Index kExactDiameterLimit = 40;

 private:
  // Vertices of the theta polytope use only the values 0, 1 and frac = gamma - floor(gamma),
  // the last one at most once and only alongside floor(gamma) ones.
  Index whole_budget() const {
    return std::min<Index>(dimension(), static_cast<Index>(std::floor(gamma_)));
  }
  Scalar fractional_budget() const {
    const Index k = whole_budget();
    return k >= dimension() ? Scalar(0) : gamma_ - Scalar(k);
  }

  Scalar exact_diameter_sq() const {
    const Index k = whole_budget();
    const Scalar frac = fractional_budget();
    const bool has_frac = frac > Scalar(0);
    const Index K = k + 1;
    const Scalar lowest = -std::numeric_limits<Scalar>::infinity();
    // state index: ((ones_a * 2 + frac_a) * K + ones_b) * 2 + frac_b
    auto at = [K](Index oa, Index fa, Index ob, Index fb) { return ((oa * 2 + fa) * K + ob) * 2 + fb; };
    std::vector<Scalar> best(static_cast<std::size_t>(K * 2 * K * 2), lowest), next;
    best[static_cast<std::size_t>(at(0, 0, 0, 0))] = 0;
    struct Choice {
      Index da, fa, db, fb;
      Scalar diff;
    };
    std::vector<Choice> choices = {{1, 0, 0, 0, 1}, {0, 0, 1, 0, 1}};
    if (has_frac) {
      choices.push_back({0, 1, 0, 0, frac});
      choices.push_back({0, 0, 0, 1, frac});
      choices.push_back({1, 0, 0, 1, Scalar(1) - frac});
      choices.push_back({0, 1, 1, 0, Scalar(1) - frac});
    }
    for (Index j = 0; j < dimension(); ++j) {
      next = best;  // coordinate left equal on both sides
      const Scalar qj = d_(j) * d_(j);
      for (Index oa = 0; oa < K; ++oa)
        for (Index fa = 0; fa < 2; ++fa)
          for (Index ob = 0; ob < K; ++ob)
            for (Index fb = 0; fb < 2; ++fb) {
              const Scalar cur = best[static_cast<std::size_t>(at(oa, fa, ob, fb))];
              if (cur == lowest) continue;
              for (const Choice& ch : choices) {
                const Index noa = oa + ch.da, nfa = fa + ch.fa, nob = ob + ch.db, nfb = fb + ch.fb;
                if (noa >= K || nob >= K || nfa > 1 || nfb > 1) continue;
                Scalar& slot = next[static_cast<std::size_t>(at(noa, nfa, nob, nfb))];
                slot = std::max(slot, cur + qj * ch.diff * ch.diff);
              }
            }
      best.swap(next);
    }
    return *std::max_element(best.begin(), best.end());
  }

  Scalar knapsack_diameter_sq() const {
    std::vector<Scalar> q(d_.data(), d_.data() + d_.size());
    for (Scalar& v : q) v *= v;
    std::sort(q.begin(), q.end(), std::greater<>());
    Scalar capacity = Scalar(2) * gamma_, total = 0;
    for (Scalar v : q) {
      if (capacity <= Scalar(0)) break;
      total += v * std::min(Scalar(1), capacity);
      capacity -= Scalar(1);
    }
    return total;
  }

  Scalar max_norm_sq() const {
    const Index k = whole_budget();
    const Scalar frac = fractional_budget();
    const Index K = k + 1;
    const Scalar lowest = -std::numeric_limits<Scalar>::infinity();
    std::vector<Scalar> best(static_cast<std::size_t>(K * 2), lowest), next;
    best[0] = 0;
    for (Index j = 0; j < dimension(); ++j) {
      next.assign(best.size(), lowest);
      const Scalar lo = c_lower_(j);
      const Scalar v0 = lo * lo;
      const Scalar v1 = (lo + d_(j)) * (lo + d_(j));
      const Scalar vf = (lo + frac * d_(j)) * (lo + frac * d_(j));
      for (Index o = 0; o < K; ++o)
        for (Index f = 0; f < 2; ++f) {
          const Scalar cur = best[static_cast<std::size_t>(o * 2 + f)];
          if (cur == lowest) continue;
          auto relax = [&](Index no, Index nf, Scalar add) {
            if (no < K && nf < 2) {
              Scalar& slot = next[static_cast<std::size_t>(no * 2 + nf)];
              slot = std::max(slot, cur + add);
            }
          };
          relax(o, f, v0);
          relax(o + 1, f, v1);
          if (frac > Scalar(0)) relax(o, f + 1, vf);
        }
      best.swap(next);
    }
    return *std::max_element(best.begin(), best.end());
  }

  VectorType c_lower_;
  VectorType d_;
  Scalar gamma_;
};

template <typename Scalar>
struct HullProjection {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> point;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
  Scalar gap;       // Frank-Wolfe duality gap of the weight problem at exit
  int iterations;
};

/// Convex hull of finitely many scenarios, stored column-wise.
template <typename Scalar>
class ScenarioHullSet {
 public:
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static constexpr int kMaxInnerIterations = 100000;

  explicit ScenarioHullSet(MatrixType scenarios) : scenarios_(std::move(scenarios)) {
    if (scenarios_.rows() < 1 || scenarios_.cols() < 1) {
      throw InstanceError("scenario hull: need at least one scenario of positive length");
    }
    if (!scenarios_.allFinite()) throw InstanceError("scenario hull: non-finite scenario");
    gram_ = scenarios_.transpose() * scenarios_;
  }

  Index dimension() const { return scenarios_.rows(); }
  Index num_scenarios() const { return scenarios_.cols(); }
  const MatrixType& scenarios() const { return scenarios_; }

  template <typename Derived>
  SupportResult<Scalar> support_max(const Eigen::MatrixBase<Derived>& x) const {
    detail::require_dimension(x, dimension(), "scenario support");
    const VectorType values = scenarios_.transpose() * x;
    Index best = 0;
    for (Index s = 1; s < values.size(); ++s) {
      if (values(s) > values(best)) best = s;
    }
    return {values(best), scenarios_.col(best)};
  }

  template <typename Derived>
  VectorType project(const Eigen::MatrixBase<Derived>& z, Scalar tol) const {
    return project_weights(z, tol).point;
  }

  /// Minimizes ||V lambda - z||^2 over the simplex with away-step Frank-Wolfe and exact line
  /// search, then re-solves the equality-constrained problem on the detected support. Stops
  /// once the duality gap is at most tol^2 / 2 (which bounds the distance error by tol) or at
  /// the rounding floor of the data.
  template <typename Derived>
  HullProjection<Scalar> project_weights(const Eigen::MatrixBase<Derived>& z, Scalar tol) const {
    detail::require_dimension(z, dimension(), "scenario projection");
    detail::require_finite(z, "scenario projection");
    const Index S = num_scenarios();
    const VectorType b = scenarios_.transpose() * z;
    const Scalar scale = Scalar(1) + b.cwiseAbs().maxCoeff() + gram_.cwiseAbs().maxCoeff();
    const Scalar target =
        std::max(Scalar(0.5) * tol * tol, Scalar(64) * std::numeric_limits<Scalar>::epsilon() * scale);

    Index start = 0;
    {
      Scalar best = std::numeric_limits<Scalar>::infinity();
      for (Index s = 0; s < S; ++s) {
        const Scalar dist = (scenarios_.col(s) - z).squaredNorm();
        if (dist < best) {
          best = dist;
          start = s;
        }
      }
    }
    VectorType lambda = VectorType::Zero(S);
    lambda(start) = Scalar(1);
    VectorType grad = gram_ * lambda - b;

    auto fw_gap = [&](Index& toward) {
      grad.minCoeff(&toward);
      return grad.dot(lambda) - grad(toward);
    };

    int it = 0;
    Index s = 0;
    Scalar gap = fw_gap(s);
    for (; it < kMaxInnerIterations && gap > target; ++it) {
      Index a = -1;
      for (Index i = 0; i < S; ++i) {
        if (lambda(i) > Scalar(0) && (a < 0 || grad(i) > grad(a))) a = i;
      }
      const Scalar away_gap = grad(a) - grad.dot(lambda);
      VectorType dir;
      Scalar max_step;
      bool away = false;
      if (gap >= away_gap || lambda(a) >= Scalar(1)) {
        dir = -lambda;
        dir(s) += Scalar(1);
        max_step = Scalar(1);
      } else {
        dir = lambda;
        dir(a) -= Scalar(1);
        max_step = lambda(a) / (Scalar(1) - lambda(a));
        away = true;
      }
      const VectorType gdir = gram_ * dir;
      const Scalar curvature = dir.dot(gdir);
      const Scalar slope = grad.dot(dir);
      Scalar step = curvature > Scalar(0) ? std::min(max_step, -slope / curvature) : max_step;
      step = std::max(step, Scalar(0));
      lambda += step * dir;
      if (away && step == max_step) lambda(a) = Scalar(0);
      lambda = lambda.cwiseMax(Scalar(0));
      lambda /= lambda.sum();
      grad = gram_ * lambda - b;
      gap = fw_gap(s);
    }

    polish(b, lambda);
    grad = gram_ * lambda - b;
    gap = fw_gap(s);
    return {scenarios_ * lambda, lambda, std::max(gap, Scalar(0)), it};
  }

  VectorType center() const { return scenarios_.rowwise().mean(); }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& c, Scalar tol) const {
    if (c.size() != dimension()) return false;
    return (project(c, tol) - c).norm() <= tol * (Scalar(1) + c.norm()) * Scalar(10);
  }

  /// Exact: a polytope's diameter and maximal norm are attained at its vertices.
  GeometricConstants constants() const {
    Scalar diam_sq = 0, norm_sq = 0;
    for (Index s = 0; s < num_scenarios(); ++s) {
      norm_sq = std::max(norm_sq, scenarios_.col(s).squaredNorm());
      for (Index t = s + 1; t < num_scenarios(); ++t) {
        diam_sq = std::max(diam_sq, (scenarios_.col(s) - scenarios_.col(t)).squaredNorm());
      }
    }
    return {0.0, std::sqrt(static_cast<double>(diam_sq)), std::sqrt(static_cast<double>(norm_sq))};
  }

 private:
  Scalar objective(const VectorType& b, const VectorType& lambda) const {
    return Scalar(0.5) * lambda.dot(gram_ * lambda) - b.dot(lambda);
  }

  // Solves the KKT system of the quadratic restricted to supp(lambda) with sum-to-one; keeps
  // the result only if it stays in the simplex and does not increase the objective.
  void polish(const VectorType& b, VectorType& lambda) const {
    std::vector<Index> support;
    for (Index i = 0; i < lambda.size(); ++i) {
      if (lambda(i) > Scalar(0)) support.push_back(i);
    }
    const Index p = static_cast<Index>(support.size());
    if (p <= 1) return;
    MatrixType kkt = MatrixType::Zero(p + 1, p + 1);
    VectorType rhs(p + 1);
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j < p; ++j) kkt(i, j) = gram_(support[i], support[j]);
      kkt(i, p) = Scalar(1);
      kkt(p, i) = Scalar(1);
      rhs(i) = b(support[i]);
    }
    rhs(p) = Scalar(1);
    const VectorType sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    VectorType candidate = VectorType::Zero(lambda.size());
    for (Index i = 0; i < p; ++i) {
      if (!(sol(i) >= Scalar(0))) return;
      candidate(support[i]) = sol(i);
    }
    const Scalar total = candidate.sum();
    if (!(std::abs(total - Scalar(1)) <= Scalar(1e-8))) return;
    candidate /= total;
    if (objective(b, candidate) <= objective(b, lambda)) lambda = candidate;
  }

  MatrixType scenarios_;
  MatrixType gram_;
};

template <typename Scalar>
using UncertaintySetT = std::variant<BoxSet<Scalar>, BudgetedSet<Scalar>, ScenarioHullSet<Scalar>>;

using UncertaintySet = UncertaintySetT<double>;
using Box = BoxSet<double>;
using Budgeted = BudgetedSet<double>;
using ScenarioHull = ScenarioHullSet<double>;

template <typename Scalar>
Index dimension(const UncertaintySetT<Scalar>& set) {
  return std::visit([](const auto& s) { return s.dimension(); }, set);
}

template <typename Scalar, typename Derived>
SupportResult<Scalar> support_max(const UncertaintySetT<Scalar>& set,
                                  const Eigen::MatrixBase<Derived>& x) {
  return std::visit([&](const auto& s) { return s.support_max(x); }, set);
}

template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> project(const UncertaintySetT<Scalar>& set,
                                                 const Eigen::MatrixBase<Derived>& z, Scalar tol) {
  if (!(tol > Scalar(0))) throw std::invalid_argument("projection tolerance must be positive");
  return std::visit([&](const auto& s) -> Eigen::Matrix<Scalar, Eigen::Dynamic, 1> {
    return s.project(z, tol);
  }, set);
}

template <typename Scalar, typename Derived>
bool contains(const UncertaintySetT<Scalar>& set, const Eigen::MatrixBase<Derived>& c, Scalar tol) {
  return std::visit([&](const auto& s) { return s.contains(c, tol); }, set);
}

template <typename Scalar>
GeometricConstants constants(const UncertaintySetT<Scalar>& set) {
  return std::visit([](const auto& s) { return s.constants(); }, set);
}

template <typename Scalar>
std::string kind_name(const UncertaintySetT<Scalar>& set) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BoxSet<Scalar>>) return "box";
        else if constexpr (std::is_same_v<T, BudgetedSet<Scalar>>) return "budgeted";
        else return "scenarios";
      },
      set);
}

}  // namespace rofw
