#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relfix/core/bmetric.hpp"
#include "relfix/core/relation.hpp"
#include "relfix/core/self_map.hpp"
#include "relfix/core/simulation.hpp"

namespace relfix {

/// The data of a relational Caristi-Banach fixed-point problem. All
/// components live on the same point table.
struct ContractionProblem {
  BMetricSpace space;
  BinaryRelation relation;
  SelfMap map;
  Potential potential;
  SimulationFunction zeta;

  /// Throws Error(invalid_argument) if the components disagree on |M|.
  void validate() const;
};

/// M(F; R) = { x : (x, Fx) in R }, ascending.
std::vector<PointId> compute_mfr(const BMetricSpace& space, const BinaryRelation& relation, const SelfMap& map);

/// 0 for table metrics, 1e-9 for formula metrics.
double default_contraction_tolerance(const BMetricSpace& space) noexcept;

enum class PairVerdict { vacuous, pass, fail };
std::string_view to_string(PairVerdict v) noexcept;

/// One related pair (sigma, rho) of the contraction condition
///   d(sigma, F sigma) > 0  =>  zeta(t, s_arg) >= 0
/// with t = s * d(F sigma, F rho) and
/// s_arg = (phi(sigma) - phi(F sigma)) * d(sigma, rho).
struct LedgerRow {
  PointId sigma{};
  PointId rho{};
  bool active = false;  // d(sigma, F sigma) > 0
  double t = 0.0;
  double s_arg = 0.0;
  std::optional<double> zeta_value;
  PairVerdict verdict = PairVerdict::vacuous;
  /// s_arg == 0 with t > 0: the outcome depends on how the condition is
  /// read for pairs whose potential gap or distance vanishes.
  bool definition_sensitive = false;
  std::string note;
};

struct ContractionLedger {
  std::vector<LedgerRow> rows;  // ordered by (sigma, rho); one per pair of R
  double tolerance = 0.0;
  std::size_t active = 0;
  std::size_t vacuous = 0;
  std::vector<PointPair> failures;
  bool passed = true;
};

ContractionLedger verify_contraction(const ContractionProblem& problem, double tol);
ContractionLedger verify_contraction(const ContractionProblem& problem);

/// Smallest lambda for which the linear family satisfies every active row:
/// lambda * s_arg >= t, i.e. lambda >= max t / s_arg. Computed from the ledger
/// arguments only, so it does not depend on the problem's own zeta.
struct LambdaThreshold {
  bool feasible = false;        // some lambda in (0, 1) works
  double lambda_min = 0.0;      // meaningful when every active row has s_arg > 0 or t == 0
  std::vector<PointPair> binding;  // rows attaining lambda_min
  std::vector<PointPair> blocking;  // rows no lambda can satisfy
};

LambdaThreshold linear_lambda_threshold(const ContractionProblem& problem);

enum class ConditionIII { r_continuous_declared, bd_self_closed_verified, neither };
std::string_view to_string(ConditionIII c) noexcept;

struct HypothesisReport {
  std::vector<PointId> mfr;
  bool mfr_nonempty = false;
  PropertyCheck<PointPair> f_closed;
  PropertyCheck<RelatedTriple> transitive;
  ConditionIII condition_iii = ConditionIII::neither;
  BdSelfClosedCheck bd_self_closed;
  ContractionLedger contraction;
  bool all_hypotheses_ok = false;
  std::vector<std::string> caveats;
};

HypothesisReport verify_all_hypotheses(const ContractionProblem& problem, double tol);
HypothesisReport verify_all_hypotheses(const ContractionProblem& problem);

struct UniquenessCheck {
  bool holds = false;
  std::optional<Path> path;
  /// (path front, path back) when R is transitive: the path collapses to a
  /// single related pair.
  std::optional<PointPair> collapsed_pair;
};

UniquenessCheck verify_uniqueness_condition(const ContractionProblem& problem, PointId a, PointId b);

/// Distances around one pair, for the b-simulation and Banach-ratio remarks.
struct PairProbe {
  PointId sigma{};
  PointId rho{};
  bool related = false;
  double distance = 0.0;        // d(sigma, rho)
  double image_distance = 0.0;  // d(F sigma, F rho)
  std::optional<double> lipschitz_ratio;  // image_distance / distance
  BSimulationBound b_simulation{};        // d(sigma, rho) - s * d(F sigma, F rho)
};

PairProbe probe_pair(const ContractionProblem& problem, PointId sigma, PointId rho);

/// Banach-ratio diagnostic: d(Fx, Fy) / d(x, y) over related pairs with x != y.
struct BanachRatioReport {
  std::vector<PairProbe> rows;
  double max_ratio = 0.0;
  std::vector<PointPair> attaining;
  bool banach_contraction = true;  // max_ratio < 1
};

BanachRatioReport banach_ratio_report(const ContractionProblem& problem);

}  // namespace relfix
