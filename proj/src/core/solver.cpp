#include "relfix/core/solver.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace relfix {

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::exact_fixed_point: return "exact-fixed-point";
    case Termination::tolerance: return "tolerance";
    case Termination::max_iterations: return "max-iterations";
  }
  return "?";
}

std::size_t IterationTrace::positive_steps() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](double c) { return c > 0.0; }));
}

namespace {

void estimate_rho(IterationTrace& trace) {
  // Ratios between two positive steps; the terminal zero step says nothing
  // about the decay rate.
  std::vector<const StepRatio*> positive;
  for (const auto& r : trace.ratios) {
    if (trace.steps[r.n] > 0.0) positive.push_back(&r);
  }
  if (trace.positive_steps() < 3 || positive.size() < 2) return;
  const std::size_t tail = (positive.size() + 1) / 2;
  double rho = 0.0;
  for (std::size_t i = positive.size() - tail; i < positive.size(); ++i) rho = std::max(rho, positive[i]->value);
  trace.rho = rho;

  std::size_t n0 = trace.ratios.back().n;
  for (auto it = trace.ratios.rbegin(); it != trace.ratios.rend() && it->value <= rho; ++it) n0 = it->n;
  trace.n0 = n0;
}

}  // namespace

IterationTrace picard_iterate(const ContractionProblem& problem, PointId start, const SolverOptions& options) {
  problem.validate();
  if (!(options.tol >= 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be nonnegative");
  const auto& space = problem.space;
  const auto& f = problem.map;
  const std::size_t max_iter = options.max_iter ? options.max_iter : 10 * space.size();

  IterationTrace trace;
  trace.orbit.push_back(start);
  trace.start_in_mfr = problem.relation.contains(start, f(start));
  if (!trace.start_in_mfr && !options.allow_unsafe_start) {
    throw Error(ErrorKind::solver, fmt::format("start point {} is not in M(F;R): ({}, F{}) is not related",
                                               space.coordinate(start), space.coordinate(start),
                                               space.coordinate(start)));
  }

  PointId current = start;
  for (std::size_t k = 0; k < max_iter; ++k) {
    const PointId next = f(current);
    const bool first_unsafe = k == 0 && !trace.start_in_mfr;
    if (!first_unsafe && !problem.relation.contains(current, next)) {
      throw Error(ErrorKind::solver,
                  fmt::format("orbit left the relation at step {}: ({}, {}) is not related; R is not F-closed "
                              "along this orbit",
                              k + 1, space.coordinate(current), space.coordinate(next)));
    }
    const double step = space.distance(current, next);
    trace.orbit.push_back(next);
    trace.steps.push_back(step);
    if (next == current) {
      trace.terminated_by = Termination::exact_fixed_point;
      break;
    }
    if (step <= options.tol) {
      trace.terminated_by = Termination::tolerance;
      current = next;
      break;
    }
    current = next;
  }

  for (PointId p : trace.orbit) trace.phi_values.push_back(problem.potential(p));
  trace.phi_limit = trace.phi_values.back();
  trace.residual = space.distance(trace.terminal(), f(trace.terminal()));
  // steps[n-1] = C_n
  for (std::size_t n = 1; n < trace.steps.size(); ++n) {
    if (trace.steps[n - 1] > 0.0) trace.ratios.push_back({n, trace.steps[n] / trace.steps[n - 1]});
  }
  estimate_rho(trace);
  return trace;
}

RatioDiagnostics ratio_diagnostics(const IterationTrace& trace, const Potential& phi, double tol) {
  if (trace.steps.empty()) throw Error(ErrorKind::invalid_argument, "trace has no steps");
  RatioDiagnostics out;
  out.tolerance = tol;
  const auto phi_at = [&](std::size_t k) { return phi(trace.orbit[k]); };

  for (const auto& r : trace.ratios) {
    const double drop = phi_at(r.n - 1) - phi_at(r.n);
    const bool holds = r.value <= drop + tol;
    out.ratio_bounds.push_back({r.n, r.value, drop, holds});
    out.ratio_bound_ok = out.ratio_bound_ok && holds;

    out.ratio_sum += r.value;
    const double bound = phi_at(0) - phi_at(r.n);
    const bool tele = out.ratio_sum <= bound + tol;
    out.telescoping.push_back({r.n, out.ratio_sum, bound, tele});
    out.telescoping_ok = out.telescoping_ok && tele;
  }
  out.phi_gap = phi_at(0) - trace.phi_limit;
  out.telescoping_ok = out.telescoping_ok && out.ratio_sum <= out.phi_gap + tol;

  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    if (trace.steps[k] > 0.0 && !(phi_at(k + 1) < phi_at(k))) out.phi_descent_ok = false;
  }

  out.asymptotic_exercised = trace.rho.has_value();
  if (out.asymptotic_exercised) {
    out.rho = trace.rho;
    out.n0 = trace.n0;
    out.rho_below_one = *trace.rho < 1.0;
    out.decay_ok = true;
    for (const auto& r : trace.ratios) {
      if (r.n < *trace.n0) continue;
      const double step = trace.steps[r.n - 1];
      const double next = trace.steps[r.n];
      const bool holds = next <= *trace.rho * step * (1.0 + tol);
      out.decay.push_back({r.n, step, next, holds});
      out.decay_ok = out.decay_ok && holds;
    }
  }
  return out;
}

std::vector<PointId> enumerate_fixed_points(const BMetricSpace& space, const SelfMap& map) {
  if (map.size() != space.size()) throw Error(ErrorKind::invalid_argument, "map and space disagree on the point set");
  std::vector<PointId> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (map(point_id(i)) == point_id(i)) out.push_back(point_id(i));
  }
  return out;
}

FixedPointCertificate certify(const ContractionProblem& problem, const IterationTrace& trace) {
  return certify(problem, trace, default_contraction_tolerance(problem.space));
}

FixedPointCertificate certify(const ContractionProblem& problem, const IterationTrace& trace, double tol) {
  problem.validate();
  if (trace.orbit.empty() || trace.terminated_by == Termination::max_iterations) {
    throw Error(ErrorKind::certificate, "trace did not terminate; nothing to certify");
  }
  FixedPointCertificate cert;
  cert.fixed_points = enumerate_fixed_points(problem.space, problem.map);
  cert.solver_result = trace.terminal();
  if (!std::binary_search(cert.fixed_points.begin(), cert.fixed_points.end(), cert.solver_result)) {
    throw Error(ErrorKind::certificate,
                fmt::format("solver result {} is not a fixed point (residual {}); the stopping tolerance is too loose "
                            "for a finite carrier",
                            problem.space.coordinate(cert.solver_result), trace.residual));
  }
  cert.unique = cert.fixed_points.size() == 1;
  cert.contraction_passed = verify_contraction(problem, tol).passed;

  const auto& fps = cert.fixed_points;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    for (std::size_t j = i + 1; j < fps.size(); ++j) {
      auto check = verify_uniqueness_condition(problem, fps[i], fps[j]);
      if (!check.holds) check = verify_uniqueness_condition(problem, fps[j], fps[i]);
      if (!check.holds) continue;
      ConnectedFixedPoints pair{fps[i], fps[j], *check.path, {}};
      if (cert.contraction_passed) {
        // Every pair starting at a fixed point has d(x, Fx) = 0, so the
        // contraction condition places no constraint on it.
        pair.reason =
            "contraction condition verified, yet both fixed points are joined by an R-path; the condition is "
            "vacuous at fixed points (d(x, Fx) = 0) and does not separate them";
        cert.contradictions.push_back(pair);
      } else {
        pair.reason = "joined by an R-path; contraction condition not verified";
      }
      cert.connected_pairs.push_back(std::move(pair));
    }
  }
  return cert;
}

}  // namespace relfix
