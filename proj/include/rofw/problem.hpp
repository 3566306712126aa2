#pragma once

#include <memory>
#include <optional>
#include <string>

#include "rofw/oracles.hpp"
#include "rofw/uncertainty.hpp"

namespace rofw {

/// Feasible region (through its oracle) paired with an uncertainty set.
class ProblemInstance {
 public:
  /// diameter_x defaults to the oracle's own bound; constants override the set-derived M, M_max.
  ProblemInstance(std::string name, std::shared_ptr<const LinearOracle> lmo, UncertaintySet uncertainty,
                  std::optional<double> diameter_x = std::nullopt,
                  std::optional<GeometricConstants> constants = std::nullopt)
      : name_(std::move(name)), lmo_(std::move(lmo)), uncertainty_(std::move(uncertainty)) {
    if (!lmo_) throw InstanceError("instance: missing oracle");
    if (lmo_->dimension() < 1) throw InstanceError("instance: dimension must be positive");
    if (rofw::dimension(uncertainty_) != lmo_->dimension()) {
      throw InstanceError("instance: uncertainty dimension differs from the oracle's");
    }
    constants_ = rofw::constants(uncertainty_);
    constants_.D = diameter_x.value_or(lmo_->diameter_bound());
    if (constants) {
      constants_.M = constants->M;
      constants_.M_max = constants->M_max;
      if (constants->D > 0.0 && !diameter_x) constants_.D = constants->D;
    }
    if (!(constants_.D >= 0.0) || !(constants_.M >= 0.0) || !(constants_.M_max >= 0.0)) {
      throw InstanceError("instance: geometric constants must be nonnegative");
    }
  }

  Index dimension() const { return lmo_->dimension(); }
  const std::string& name() const { return name_; }
  const LinearOracle& lmo() const { return *lmo_; }
  std::shared_ptr<const LinearOracle> lmo_handle() const { return lmo_; }
  const UncertaintySet& uncertainty() const { return uncertainty_; }
  double diameter_x() const { return constants_.D; }
  const GeometricConstants& constants() const { return constants_; }

 private:
  std::string name_;
  std::shared_ptr<const LinearOracle> lmo_;
  UncertaintySet uncertainty_;
  GeometricConstants constants_;
};

}  // namespace rofw
