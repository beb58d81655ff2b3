#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "relfix/core/types.hpp"

namespace relfix {

enum class MetricKind { squared_difference, absolute_difference, table };

std::string_view to_string(MetricKind kind) noexcept;
std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept;

/// A finite b-metric space: a point table, a distance and the relaxation
/// coefficient s of d(x, z) <= s [d(x, y) + d(y, z)].
///
/// Construction validates the structural invariants (s >= 1, finite
/// coordinates, square nonnegative table). The axioms themselves are not
/// enforced here; verify_bmetric_axioms reports on them.
class BMetricSpace {
 public:
  static BMetricSpace from_formula(std::vector<double> coordinates, MetricKind kind, double s);
  /// `table` is row-major, n*n entries.
  static BMetricSpace from_table(std::vector<double> coordinates, std::vector<double> table, double s);

  std::size_t size() const noexcept { return coordinates_.size(); }
  MetricKind kind() const noexcept { return kind_; }
  double coefficient() const noexcept { return s_; }
  double coordinate(PointId p) const;
  std::span<const double> coordinates() const noexcept { return coordinates_; }

  /// Throws Error(unknown_point) for ids outside 0..n-1.
  double distance(PointId a, PointId b) const;

  std::optional<PointId> find(double coordinate) const noexcept;

  /// Smallest positive pairwise distance, or nullopt with fewer than two
  /// distinct points.
  std::optional<double> min_nonzero_distance() const;

  /// b-completeness cannot be decided from finite data; it is carried as a
  /// user assertion.
  bool complete_declared() const noexcept { return complete_; }
  void declare_complete(bool complete) noexcept { complete_ = complete; }

  /// Marks the points as a sample of a continuum rather than the whole carrier.
  bool sampled() const noexcept { return sampled_; }
  void mark_sampled(bool sampled) noexcept { sampled_ = sampled; }

  BMetricSpace with_coefficient(double s) const;

  /// 1e-12 for formula metrics, 0 for explicit tables.
  double default_tolerance() const noexcept;

 private:
  BMetricSpace() = default;
  void check(PointId p) const;

  std::vector<double> coordinates_;
  std::vector<double> table_;
  MetricKind kind_ = MetricKind::squared_difference;
  double s_ = 1.0;
  bool complete_ = true;
  bool sampled_ = false;
};

struct TriangleWitness {
  PointId from;
  PointId to;
  PointId via;
  double lhs;  // d(from, to)
  double rhs;  // d(from, via) + d(via, to), before scaling by s
};

struct AxiomReport {
  bool identity_ok = true;
  bool symmetry_ok = true;
  bool triangle_ok = true;
  double coefficient = 1.0;
  double tolerance = 0.0;
  /// max d(a,c) / (d(a,b) + d(b,c)) over triples with positive denominator,
  /// floored at 1. Infinite when a positive distance sits over a zero sum.
  double min_feasible_s = 1.0;
  std::vector<PointPair> identity_witnesses;
  std::vector<PointPair> symmetry_witnesses;
  std::vector<TriangleWitness> triangle_witnesses;  // sorted by (from, to, via)

  bool all_ok() const noexcept { return identity_ok && symmetry_ok && triangle_ok; }
};

AxiomReport verify_bmetric_axioms(const BMetricSpace& space, double tol);
AxiomReport verify_bmetric_axioms(const BMetricSpace& space);

}  // namespace relfix
