#include "relfix/core/self_map.hpp"

#include <cmath>
#include <string>

namespace relfix {

SelfMap::SelfMap(std::vector<PointId> images, bool r_continuous_declared)
    : images_(std::move(images)), r_continuous_(r_continuous_declared) {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (index(images_[i]) >= images_.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "map is not a self map: image of point " + std::to_string(i) + " is outside the space");
    }
  }
}

SelfMap SelfMap::identity(std::size_t n) {
  std::vector<PointId> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = point_id(i);
  return SelfMap(std::move(images));
}

PointId SelfMap::operator()(PointId p) const {
  if (index(p) >= images_.size()) {
    throw Error(ErrorKind::unknown_point, "unknown point id " + std::to_string(index(p)));
  }
  return images_[index(p)];
}

Potential::Potential(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw Error(ErrorKind::invalid_argument,
                  "potential must map into [0, inf): value at point " + std::to_string(i) + " is " +
                      std::to_string(values_[i]));
    }
  }
}

double Potential::operator()(PointId p) const {
  if (index(p) >= values_.size()) {
    throw Error(ErrorKind::unknown_point, "unknown point id " + std::to_string(index(p)));
  }
  return values_[index(p)];
}

Potential Potential::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return Potential(std::move(out));
}

}  // namespace relfix
