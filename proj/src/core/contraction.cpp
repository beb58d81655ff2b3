#include "relfix/core/contraction.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace relfix {

void ContractionProblem::validate() const {
  const std::size_t n = space.size();
  if (relation.universe() != n || map.size() != n || potential.size() != n) {
    throw Error(ErrorKind::invalid_argument,
                fmt::format("problem components disagree on the point count (space {}, relation {}, map {}, potential {})",
                            n, relation.universe(), map.size(), potential.size()));
  }
}

std::vector<PointId> compute_mfr(const BMetricSpace& space, const BinaryRelation& relation, const SelfMap& map) {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (relation.contains(point_id(i), map(point_id(i)))) out.push_back(point_id(i));
  }
  return out;
}

double default_contraction_tolerance(const BMetricSpace& space) noexcept {
  return space.kind() == MetricKind::table ? 0.0 : 1e-9;
}

std::string_view to_string(PairVerdict v) noexcept {
  switch (v) {
    case PairVerdict::vacuous: return "vacuous";
    case PairVerdict::pass: return "pass";
    case PairVerdict::fail: return "fail";
  }
  return "?";
}

std::string_view to_string(ConditionIII c) noexcept {
  switch (c) {
    case ConditionIII::r_continuous_declared: return "r-continuous-declared";
    case ConditionIII::bd_self_closed_verified: return "bd-self-closed-verified";
    case ConditionIII::neither: return "neither";
  }
  return "?";
}

namespace {

LedgerRow ledger_row(const ContractionProblem& p, PointId sigma, PointId rho, double tol) {
  const PointId f_sigma = p.map(sigma);
  LedgerRow row;
  row.sigma = sigma;
  row.rho = rho;
  row.active = p.space.distance(sigma, f_sigma) > 0.0;
  row.t = p.space.coefficient() * p.space.distance(f_sigma, p.map(rho));
  row.s_arg = (p.potential(sigma) - p.potential(f_sigma)) * p.space.distance(sigma, rho);
  row.definition_sensitive = row.active && row.s_arg == 0.0 && row.t > 0.0;
  if (!row.active) {
    row.verdict = PairVerdict::vacuous;
    return row;
  }
  if (row.s_arg < 0.0) {
    row.verdict = PairVerdict::fail;
    row.note = "potential increases along F: second argument is outside the domain of zeta";
    return row;
  }
  if (!p.zeta.defined_at(row.t, row.s_arg)) {
    row.verdict = PairVerdict::fail;
    row.note = "zeta is undefined at these arguments";
    return row;
  }
  row.zeta_value = p.zeta(row.t, row.s_arg);
  row.verdict = *row.zeta_value >= -tol ? PairVerdict::pass : PairVerdict::fail;
  if (row.definition_sensitive) row.note = "definition-sensitive: s_arg = 0 with t > 0";
  return row;
}

}  // namespace

ContractionLedger verify_contraction(const ContractionProblem& problem) {
  return verify_contraction(problem, default_contraction_tolerance(problem.space));
}

ContractionLedger verify_contraction(const ContractionProblem& problem, double tol) {
  problem.validate();
  if (!(tol >= 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be nonnegative");
  ContractionLedger ledger;
  ledger.tolerance = tol;
  ledger.rows.reserve(problem.relation.size());
  for (const auto& [sigma, rho] : problem.relation.pairs()) {
    LedgerRow row = ledger_row(problem, sigma, rho, tol);
    if (row.active) {
      ++ledger.active;
    } else {
      ++ledger.vacuous;
    }
    if (row.verdict == PairVerdict::fail) ledger.failures.emplace_back(sigma, rho);
    ledger.rows.push_back(std::move(row));
  }
  ledger.passed = ledger.failures.empty();
  return ledger;
}

LambdaThreshold linear_lambda_threshold(const ContractionProblem& problem) {
  problem.validate();
  LambdaThreshold out;
  double worst = 0.0;
  for (const auto& [sigma, rho] : problem.relation.pairs()) {
    const LedgerRow row = ledger_row(problem, sigma, rho, 0.0);
    if (!row.active || (row.t == 0.0 && row.s_arg >= 0.0)) continue;
    if (row.s_arg <= 0.0) {
      out.blocking.emplace_back(sigma, rho);
      continue;
    }
    const double ratio = row.t / row.s_arg;
    if (ratio > worst) {
      worst = ratio;
      out.binding.clear();
    }
    if (ratio == worst) out.binding.emplace_back(sigma, rho);
  }
  out.lambda_min = worst;
  out.feasible = out.blocking.empty() && worst < 1.0;
  return out;
}

HypothesisReport verify_all_hypotheses(const ContractionProblem& problem) {
  return verify_all_hypotheses(problem, default_contraction_tolerance(problem.space));
}

HypothesisReport verify_all_hypotheses(const ContractionProblem& problem, double tol) {
  problem.validate();
  HypothesisReport report;
  report.mfr = compute_mfr(problem.space, problem.relation, problem.map);
  report.mfr_nonempty = !report.mfr.empty();
  report.f_closed = is_f_closed(problem.relation, problem.map);
  report.transitive = is_transitive(problem.relation);
  report.bd_self_closed = check_bd_self_closed(problem.space, problem.relation);
  if (report.bd_self_closed.decision == Decision::holds) {
    report.condition_iii = ConditionIII::bd_self_closed_verified;
  } else if (problem.map.r_continuous_declared()) {
    report.condition_iii = ConditionIII::r_continuous_declared;
    report.caveats.emplace_back("R-continuity of F is a user declaration and was not verified");
  } else {
    report.condition_iii = ConditionIII::neither;
  }
  report.contraction = verify_contraction(problem, tol);
  if (problem.space.complete_declared()) {
    report.caveats.emplace_back("b-completeness of the space is assumed, not checked");
  }
  report.all_hypotheses_ok = report.mfr_nonempty && report.f_closed.holds && report.transitive.holds &&
                             report.condition_iii != ConditionIII::neither && report.contraction.passed;
  return report;
}

UniquenessCheck verify_uniqueness_condition(const ContractionProblem& problem, PointId a, PointId b) {
  problem.validate();
  UniquenessCheck out;
  out.path = find_path(problem.relation, a, b, std::max<std::size_t>(problem.space.size(), 1));
  out.holds = out.path.has_value();
  if (out.path && is_transitive(problem.relation).holds) {
    out.collapsed_pair = PointPair{out.path->nodes.front(), out.path->nodes.back()};
  }
  return out;
}

PairProbe probe_pair(const ContractionProblem& problem, PointId sigma, PointId rho) {
  problem.validate();
  PairProbe probe;
  probe.sigma = sigma;
  probe.rho = rho;
  probe.related = problem.relation.contains(sigma, rho);
  probe.distance = problem.space.distance(sigma, rho);
  probe.image_distance = problem.space.distance(problem.map(sigma), problem.map(rho));
  if (probe.distance > 0.0) probe.lipschitz_ratio = probe.image_distance / probe.distance;
  probe.b_simulation =
      check_b_simulation_inequality(probe.image_distance, probe.distance, problem.space.coefficient());
  return probe;
}

BanachRatioReport banach_ratio_report(const ContractionProblem& problem) {
  BanachRatioReport out;
  for (const auto& [sigma, rho] : problem.relation.pairs()) {
    if (sigma == rho) continue;
    PairProbe probe = probe_pair(problem, sigma, rho);
    if (!probe.lipschitz_ratio) continue;
    const double ratio = *probe.lipschitz_ratio;
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.attaining.clear();
    }
    if (ratio == out.max_ratio) out.attaining.emplace_back(sigma, rho);
    out.rows.push_back(probe);
  }
  out.banach_contraction = out.max_ratio < 1.0;
  return out;
}

}  // namespace relfix
