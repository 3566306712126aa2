#pragma once

// Smoothed robust objective
//   f_mu(x) = max_{c in U} c^T x - (mu/2) ||c - c0||^2
// whose maximizer is the projection of c0 + x/mu onto U and doubles as the gradient.

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

#include "rofw/uncertainty.hpp"

namespace rofw {

template <typename Scalar>
struct SmoothedValue {
  Scalar value;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> gradient;
};

template <typename Scalar>
struct SandwichBounds {
  Scalar lo;
  Scalar hi;
};

/// Central anchor scenario: box midpoint, uniform budget spend, or scenario average.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> default_anchor(const UncertaintySetT<Scalar>& set,
                                                        Scalar tol) {
  return std::visit(
      [&](const auto& s) -> Eigen::Matrix<Scalar, Eigen::Dynamic, 1> {
        return s.project(s.center(), tol);
      },
      set);
}

template <typename Scalar>
class SmoothedObjective {
 public:
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SmoothedObjective(const UncertaintySetT<Scalar>& set, VectorType c0, Scalar mu, Scalar tol)
      : set_(std::make_shared<const UncertaintySetT<Scalar>>(set)),
        c0_(std::move(c0)),
        mu_(mu),
        tol_(tol) {
    if (!(mu_ > Scalar(0))) throw std::invalid_argument("smoothing parameter must be positive");
    if (!(tol_ > Scalar(0))) throw std::invalid_argument("projection tolerance must be positive");
    if (c0_.size() != rofw::dimension(set)) throw std::invalid_argument("anchor dimension mismatch");
    if (!rofw::contains(set, c0_, Scalar(10) * std::max(tol_, Scalar(1e-9)))) {
      throw std::invalid_argument("anchor scenario must belong to the uncertainty set");
    }
  }

  SmoothedObjective(const UncertaintySetT<Scalar>& set, Scalar mu, Scalar tol)
      : SmoothedObjective(set, default_anchor(set, tol), mu, tol) {}

  const UncertaintySetT<Scalar>& set() const { return *set_; }
  const VectorType& c0() const { return c0_; }
  Scalar mu() const { return mu_; }
  Scalar tolerance() const { return tol_; }
  Scalar lipschitz() const { return Scalar(1) / mu_; }

  /// Same set and anchor, different smoothing level.
  SmoothedObjective with_mu(Scalar mu) const { return SmoothedObjective(set_, c0_, mu, tol_); }

 private:
  SmoothedObjective(std::shared_ptr<const UncertaintySetT<Scalar>> set, VectorType c0, Scalar mu,
                    Scalar tol)
      : set_(std::move(set)), c0_(std::move(c0)), mu_(mu), tol_(tol) {
    if (!(mu_ > Scalar(0))) throw std::invalid_argument("smoothing parameter must be positive");
  }

  std::shared_ptr<const UncertaintySetT<Scalar>> set_;
  VectorType c0_;
  Scalar mu_;
  Scalar tol_;
};

template <typename Scalar, typename Derived>
Scalar eval_f(const UncertaintySetT<Scalar>& set, const Eigen::MatrixBase<Derived>& x) {
  return support_max(set, x).value;
}

template <typename Scalar, typename Derived>
SmoothedValue<Scalar> eval_f_mu(const SmoothedObjective<Scalar>& obj,
                                const Eigen::MatrixBase<Derived>& x) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> target = obj.c0() + x / obj.mu();
  auto c = project(obj.set(), target, obj.tolerance());
  const Scalar value = c.dot(x) - Scalar(0.5) * obj.mu() * (c - obj.c0()).squaredNorm();
  return {value, std::move(c)};
}

/// f_mu(x) <= f(x) <= f_mu(x) + mu M^2 / 2 whenever M bounds the set's diameter.
template <typename Scalar, typename Derived>
SandwichBounds<Scalar> sandwich_bounds(const SmoothedObjective<Scalar>& obj,
                                       const Eigen::MatrixBase<Derived>& x, Scalar M) {
  const Scalar lo = eval_f_mu(obj, x).value;
  return {lo, lo + Scalar(0.5) * obj.mu() * M * M};
}

/// Smoothing schedule: a constant, or 2D / (M_max sqrt(t + 1)).
class MuSchedule {
 public:
  static MuSchedule fixed(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("fixed mu must be positive");
    return MuSchedule(mu, 0.0, 0.0, false);
  }
  static MuSchedule adaptive(double D, double M_max) {
    if (!(D > 0.0) || !(M_max > 0.0)) {
      throw std::invalid_argument("adaptive schedule needs positive D and M_max");
    }
    return MuSchedule(0.0, D, M_max, true);
  }

  bool is_adaptive() const { return adaptive_; }

  /// t is zero-based: the first solver iteration uses t = 0.
  double at(std::int64_t t) const {
    if (!adaptive_) return mu_;
    if (t < 0) throw std::invalid_argument("schedule index must be nonnegative");
    return 2.0 * D_ / (M_max_ * std::sqrt(static_cast<double>(t) + 1.0));
  }

 private:
  MuSchedule(double mu, double D, double M_max, bool adaptive)
      : mu_(mu), D_(D), M_max_(M_max), adaptive_(adaptive) {}

  double mu_;
  double D_;
  double M_max_;
  bool adaptive_;
};

inline double mu_at(const MuSchedule& schedule, std::int64_t t) { return schedule.at(t); }

}  // namespace rofw
