#pragma once

#include <span>
#include <vector>

#include "relfix/core/types.hpp"

namespace relfix {

/// Total map F on a finite point table, stored as id -> id.
class SelfMap {
 public:
  SelfMap() = default;
  /// Throws Error(invalid_argument) unless every image is in 0..images.size()-1.
  explicit SelfMap(std::vector<PointId> images, bool r_continuous_declared = false);

  static SelfMap identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  PointId operator()(PointId p) const;
  std::span<const PointId> images() const noexcept { return images_; }

  /// User assertion that F is R-continuous; never verified.
  bool r_continuous_declared() const noexcept { return r_continuous_; }

  bool operator==(const SelfMap&) const = default;

 private:
  std::vector<PointId> images_;
  bool r_continuous_ = false;
};

/// Caristi potential phi : M -> [0, inf).
class Potential {
 public:
  Potential() = default;
  /// Throws Error(invalid_argument) on negative or non-finite values.
  explicit Potential(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator()(PointId p) const;
  std::span<const double> values() const noexcept { return values_; }

  Potential scaled(double factor) const;

 private:
  std::vector<double> values_;
};

}  // namespace relfix
