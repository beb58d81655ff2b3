#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relfix/core/contraction.hpp"

namespace relfix {

enum class Termination { exact_fixed_point, tolerance, max_iterations };
std::string_view to_string(Termination t) noexcept;

struct SolverOptions {
  double tol = 0.0;
  std::size_t max_iter = 0;  // 0 selects 10 * |M|
  /// Permit a start outside M(F; R). The first step is then not required to
  /// be related and the trace records the violation.
  bool allow_unsafe_start = false;
};

/// C_{n+1} / C_n for an index n >= 1 with C_n > 0.
struct StepRatio {
  std::size_t n;
  double value;
};

/// Picard orbit x_0, x_1 = F x_0, ... with the quantities used by the
/// convergence argument. steps[k] holds C_{k+1} = d(x_k, x_{k+1}).
struct IterationTrace {
  std::vector<PointId> orbit;
  std::vector<double> steps;
  std::vector<StepRatio> ratios;
  std::vector<double> phi_values;
  double phi_limit = 0.0;  // phi at the last orbit point
  /// Max ratio over the last half of the ratios between positive steps, and
  /// the first index from which every ratio stays below it. Only set when the
  /// orbit has at least three positive steps.
  std::optional<double> rho;
  std::optional<std::size_t> n0;
  double residual = 0.0;  // d(x_N, F x_N)
  Termination terminated_by = Termination::max_iterations;
  bool start_in_mfr = true;

  PointId terminal() const { return orbit.back(); }
  std::size_t positive_steps() const;
};

/// Throws Error(solver) when the start is outside M(F; R) (unless
/// overridden) or when a step leaves the relation.
IterationTrace picard_iterate(const ContractionProblem& problem, PointId start, const SolverOptions& options = {});

struct RatioBoundRow {
  std::size_t n;
  double ratio;     // C_{n+1} / C_n
  double phi_drop;  // phi(x_{n-1}) - phi(x_n)
  bool holds;
};

struct TelescopeRow {
  std::size_t n;
  double partial_sum;  // sum_{k<=n} C_{k+1} / C_k
  double bound;        // phi(x_0) - phi(x_n)
  bool holds;
};

struct DecayRow {
  std::size_t n;
  double step;       // C_n
  double next_step;  // C_{n+1}
  bool holds;        // C_{n+1} <= rho * C_n
};

struct RatioDiagnostics {
  double tolerance = 0.0;
  bool ratio_bound_ok = true;
  std::vector<RatioBoundRow> ratio_bounds;
  bool telescoping_ok = true;
  std::vector<TelescopeRow> telescoping;
  double ratio_sum = 0.0;
  double phi_gap = 0.0;  // phi(x_0) - phi limit
  bool phi_descent_ok = true;  // phi strictly decreasing across positive steps
  bool asymptotic_exercised = false;
  std::optional<double> rho;
  std::optional<std::size_t> n0;
  bool rho_below_one = false;
  bool decay_ok = false;
  std::vector<DecayRow> decay;

  bool all_ok() const noexcept {
    return ratio_bound_ok && telescoping_ok && phi_descent_ok && (!asymptotic_exercised || (rho_below_one && decay_ok));
  }
};

/// Checks the step-ratio relations of the convergence argument along a trace. The asymptotic checks
/// are only exercised with at least three positive steps.
RatioDiagnostics ratio_diagnostics(const IterationTrace& trace, const Potential& phi, double tol = 1e-9);

/// Exhaustive scan for x with F x = x.
std::vector<PointId> enumerate_fixed_points(const BMetricSpace& space, const SelfMap& map);

struct ConnectedFixedPoints {
  PointId a;
  PointId b;
  Path path;  // from a to b, or from b to a when only that direction exists
  std::string reason;
};

struct FixedPointCertificate {
  std::vector<PointId> fixed_points;
  PointId solver_result{};
  bool unique = false;
  bool contraction_passed = false;
  /// Pairs of distinct fixed points joined by an R-path while the
  /// contraction condition verified: data the uniqueness theorem rules out.
  std::vector<ConnectedFixedPoints> contradictions;
  /// Pairs of distinct fixed points with an R-path, regardless of verdicts.
  std::vector<ConnectedFixedPoints> connected_pairs;
};

/// Throws Error(certificate) when the trace hit max_iter or its terminal
/// point is not a fixed point.
FixedPointCertificate certify(const ContractionProblem& problem, const IterationTrace& trace, double tol);
FixedPointCertificate certify(const ContractionProblem& problem, const IterationTrace& trace);

}  // namespace relfix
