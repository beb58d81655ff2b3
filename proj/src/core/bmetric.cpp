#include "relfix/core/bmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace relfix {

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::squared_difference: return "squared-difference";
    case MetricKind::absolute_difference: return "absolute-difference";
    case MetricKind::table: return "table";
  }
  return "?";
}

std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept {
  if (name == "squared-difference") return MetricKind::squared_difference;
  if (name == "absolute-difference") return MetricKind::absolute_difference;
  if (name == "table") return MetricKind::table;
  return std::nullopt;
}

namespace {

void validate_common(const std::vector<double>& coordinates, double s) {
  if (coordinates.empty()) throw Error(ErrorKind::invalid_argument, "space needs at least one point");
  if (!(s >= 1.0) || !std::isfinite(s)) {
    throw Error(ErrorKind::invalid_argument, "s >= 1 required (got " + std::to_string(s) + ")");
  }
  for (double c : coordinates) {
    if (!std::isfinite(c)) throw Error(ErrorKind::invalid_argument, "point coordinates must be finite");
  }
  auto sorted = coordinates;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::invalid_argument, "point coordinates must be distinct");
  }
}

}  // namespace

BMetricSpace BMetricSpace::from_formula(std::vector<double> coordinates, MetricKind kind, double s) {
  if (kind == MetricKind::table) throw Error(ErrorKind::invalid_argument, "table metric needs explicit distances");
  validate_common(coordinates, s);
  BMetricSpace space;
  space.coordinates_ = std::move(coordinates);
  space.kind_ = kind;
  space.s_ = s;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (!std::isfinite(space.distance(point_id(i), point_id(j)))) {
        throw Error(ErrorKind::invalid_argument, "pairwise distances must be finite");
      }
    }
  }
  return space;
}

BMetricSpace BMetricSpace::from_table(std::vector<double> coordinates, std::vector<double> table, double s) {
  validate_common(coordinates, s);
  const std::size_t n = coordinates.size();
  if (table.size() != n * n) {
    throw Error(ErrorKind::invalid_argument, "distance table must be square (" + std::to_string(n) + "x" +
                                                 std::to_string(n) + ")");
  }
  for (double v : table) {
    if (!std::isfinite(v) || v < 0.0) throw Error(ErrorKind::invalid_argument, "distances must be finite and nonnegative");
  }
  BMetricSpace space;
  space.coordinates_ = std::move(coordinates);
  space.table_ = std::move(table);
  space.kind_ = MetricKind::table;
  space.s_ = s;
  return space;
}

void BMetricSpace::check(PointId p) const {
  if (index(p) >= size()) {
    throw Error(ErrorKind::unknown_point, "unknown point id " + std::to_string(index(p)));
  }
}

double BMetricSpace::coordinate(PointId p) const {
  check(p);
  return coordinates_[index(p)];
}

double BMetricSpace::distance(PointId a, PointId b) const {
  check(a);
  check(b);
  switch (kind_) {
    case MetricKind::squared_difference: {
      const double diff = coordinates_[index(a)] - coordinates_[index(b)];
      return diff * diff;
    }
    case MetricKind::absolute_difference:
      return std::abs(coordinates_[index(a)] - coordinates_[index(b)]);
    case MetricKind::table:
      return table_[index(a) * size() + index(b)];
  }
  return 0.0;
}

std::optional<PointId> BMetricSpace::find(double coordinate) const noexcept {
  auto it = std::find(coordinates_.begin(), coordinates_.end(), coordinate);
  if (it == coordinates_.end()) return std::nullopt;
  return point_id(static_cast<std::size_t>(it - coordinates_.begin()));
}

std::optional<double> BMetricSpace::min_nonzero_distance() const {
  std::optional<double> best;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      const double d = distance(point_id(i), point_id(j));
      if (d > 0.0 && (!best || d < *best)) best = d;
    }
  }
  return best;
}

BMetricSpace BMetricSpace::with_coefficient(double s) const {
  if (!(s >= 1.0) || !std::isfinite(s)) {
    throw Error(ErrorKind::invalid_argument, "s >= 1 required (got " + std::to_string(s) + ")");
  }
  BMetricSpace copy = *this;
  copy.s_ = s;
  return copy;
}

double BMetricSpace::default_tolerance() const noexcept {
  return kind_ == MetricKind::table ? 0.0 : 1e-12;
}

AxiomReport verify_bmetric_axioms(const BMetricSpace& space) {
  return verify_bmetric_axioms(space, space.default_tolerance());
}

AxiomReport verify_bmetric_axioms(const BMetricSpace& space, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be nonnegative");
  AxiomReport report;
  report.coefficient = space.coefficient();
  report.tolerance = tol;
  const std::size_t n = space.size();
  const double s = space.coefficient();

  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = space.distance(point_id(i), point_id(j));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dij = d[i * n + j];
      // d(a, b) = 0 iff a = b
      if ((i == j && dij > tol) || (i != j && dij <= 0.0)) {
        report.identity_witnesses.emplace_back(point_id(i), point_id(j));
      }
      if (i < j && std::abs(dij - d[j * n + i]) > tol) {
        report.symmetry_witnesses.emplace_back(point_id(i), point_id(j));
      }
    }
  }

  double worst = 1.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      const double lhs = d[a * n + c];
      for (std::size_t b = 0; b < n; ++b) {
        const double rhs = d[a * n + b] + d[b * n + c];
        double ratio = 0.0;
        if (rhs > 0.0) {
          ratio = lhs / rhs;
        } else if (lhs > 0.0) {
          ratio = std::numeric_limits<double>::infinity();
        }
        worst = std::max(worst, ratio);
        // The ratio clause keeps s = min_feasible_s from tripping on the
        // rounding of s * rhs.
        if (lhs > s * rhs + tol && ratio > s) {
          report.triangle_witnesses.push_back({point_id(a), point_id(c), point_id(b), lhs, rhs});
        }
      }
    }
  }
  report.min_feasible_s = worst;
  report.identity_ok = report.identity_witnesses.empty();
  report.symmetry_ok = report.symmetry_witnesses.empty();
  report.triangle_ok = report.triangle_witnesses.empty();
  return report;
}

}  // namespace relfix
