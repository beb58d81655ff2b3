#include "relfix/io/commands.hpp"

#include <fmt/format.h>

#include "relfix/core/solver.hpp"

namespace relfix::io {

using Json = nlohmann::ordered_json;

std::optional<Command> parse_command(std::string_view name) noexcept {
  if (name == "axioms") return Command::axioms;
  if (name == "verify") return Command::verify;
  if (name == "solve") return Command::solve;
  if (name == "certify") return Command::certify;
  if (name == "report") return Command::report;
  return std::nullopt;
}

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::axioms: return "axioms";
    case Command::verify: return "verify";
    case Command::solve: return "solve";
    case Command::certify: return "certify";
    case Command::report: return "report";
  }
  return "?";
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

namespace {

/// Emits both report forms while walking the results once.
class Emitter {
 public:
  explicit Emitter(const BMetricSpace& space) : space_(space) {}

  double at(PointId p) const { return space_.coordinate(p); }
  Json pair(PointId a, PointId b) const { return Json::array({at(a), at(b)}); }
  Json pair(const PointPair& p) const { return pair(p.first, p.second); }
  Json points(const std::vector<PointId>& ps) const {
    Json out = Json::array();
    for (PointId p : ps) out.push_back(at(p));
    return out;
  }
  Json pairs(const std::vector<PointPair>& ps) const {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(pair(p));
    return out;
  }
  std::string fmt_pair(const PointPair& p) const { return fmt::format("({}, {})", at(p.first), at(p.second)); }
  std::string fmt_points(const std::vector<PointId>& ps) const {
    std::string out = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) out += fmt::format("{}{}", i ? ", " : "", at(ps[i]));
    return out + "}";
  }

  void line(std::string s) {
    text += s;
    text += '\n';
  }
  void heading(std::string_view title) { line(fmt::format("\n== {} ==", title)); }
  void verdict(std::string_view label, bool ok, std::string_view detail = {}) {
    line(fmt::format("  {:<28} {}{}{}", label, ok ? "PASS" : "FAIL", detail.empty() ? "" : "  ", detail));
  }

  std::string text;

 private:
  const BMetricSpace& space_;
};

Json axioms_section(Emitter& em, const AxiomReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.triangle_witnesses) {
    witnesses.push_back({{"from", em.at(w.from)},
                         {"to", em.at(w.to)},
                         {"via", em.at(w.via)},
                         {"lhs", w.lhs},
                         {"rhs", w.rhs},
                         {"scaled_rhs", r.coefficient * w.rhs}});
  }
  em.heading("b-metric axioms");
  em.verdict("identity", r.identity_ok);
  em.verdict("symmetry", r.symmetry_ok);
  em.verdict("relaxed triangle", r.triangle_ok, fmt::format("s = {}, min feasible s = {}", r.coefficient, r.min_feasible_s));
  for (std::size_t i = 0; i < r.triangle_witnesses.size() && i < 5; ++i) {
    const auto& w = r.triangle_witnesses[i];
    em.line(fmt::format("    witness (from, to, via) = ({}, {}, {}): {} > {} * ({})", em.at(w.from), em.at(w.to),
                        em.at(w.via), w.lhs, r.coefficient, w.rhs));
  }
  if (r.triangle_witnesses.size() > 5) em.line(fmt::format("    ... {} witnesses in total", r.triangle_witnesses.size()));
  return Json{{"identity_ok", r.identity_ok},
              {"symmetry_ok", r.symmetry_ok},
              {"triangle_ok", r.triangle_ok},
              {"s", r.coefficient},
              {"tolerance", r.tolerance},
              {"min_feasible_s", r.min_feasible_s},
              {"identity_witnesses", em.pairs(r.identity_witnesses)},
              {"symmetry_witnesses", em.pairs(r.symmetry_witnesses)},
              {"triangle_witnesses", witnesses},
              {"ok", r.all_ok()}};
}

Json zeta_description(const SimulationFunction& z) {
  Json out{{"family", std::string(to_string(z.family()))}};
  if (z.family() != ZetaFamily::custom_table) out["lambda"] = z.lambda();
  if (z.family() == ZetaFamily::scaled) out["mu"] = z.mu();
  if (z.family() == ZetaFamily::custom_table) out["entries"] = z.table().size();
  return out;
}

Json zeta_section(Emitter& em, const SimulationFunction& z, const ZetaAxiomReport& r) {
  Json z2 = Json::array();
  for (const auto& w : r.zeta2_witnesses) z2.push_back({{"t", w.t}, {"s", w.s}, {"value", w.value}});
  Json z3 = Json::array();
  for (const auto& w : r.zeta3_witnesses) z3.push_back({{"sequence", w.sequence}, {"limsup_estimate", w.limsup_estimate}});
  em.heading("simulation function");
  em.line(fmt::format("  family {}{}", to_string(z.family()),
                      z.family() == ZetaFamily::custom_table ? "" : fmt::format(", lambda = {}", z.lambda())));
  em.verdict("zeta1 (exact)", r.zeta1_ok, r.zeta1_note);
  em.verdict("zeta2 (sampled)", r.zeta2_ok, fmt::format("{} samples", r.zeta2_samples));
  for (const auto& w : r.zeta2_witnesses) {
    em.line(fmt::format("    witness zeta({}, {}) = {} is not below {}", w.t, w.s, w.value, w.s - w.t));
  }
  em.verdict("zeta3 (sampled)", r.zeta3_ok, fmt::format("{} sequences", r.zeta3_sequences));
  for (const auto& w : r.zeta3_witnesses) {
    em.line(fmt::format("    witness {}: limsup ~ {}", w.sequence, w.limsup_estimate));
  }
  if (!r.not_evaluated.empty()) em.line(fmt::format("  {} samples outside the table support", r.not_evaluated.size()));
  em.line(fmt::format("  note: {}", ZetaAxiomReport::caveat));
  return Json{{"zeta", zeta_description(z)},
              {"zeta1_ok", r.zeta1_ok},
              {"zeta1_note", r.zeta1_note},
              {"zeta2_ok", r.zeta2_ok},
              {"zeta2_samples", r.zeta2_samples},
              {"zeta2_witnesses", z2},
              {"zeta3_ok", r.zeta3_ok},
              {"zeta3_sequences", r.zeta3_sequences},
              {"zeta3_witnesses", z3},
              {"not_evaluated", r.not_evaluated},
              {"sample_spec",
               {{"grid", r.sample_spec.grid},
                {"limits", r.sample_spec.limits},
                {"tail_indices", r.sample_spec.tail_indices}}},
              {"caveat", std::string(ZetaAxiomReport::caveat)},
              {"ok", r.all_ok()}};
}

template <typename W, typename F>
Json check_json(const PropertyCheck<W>& c, F&& witness) {
  Json ws = Json::array();
  for (const auto& w : c.witnesses) ws.push_back(witness(w));
  return Json{{"holds", c.holds}, {"witnesses", ws}};
}

Json relation_section(Emitter& em, const BinaryRelation& rel, const RelationReport& r) {
  const auto point = [&](PointId p) { return Json(em.at(p)); };
  const auto pair = [&](const PointPair& p) { return em.pair(p); };
  const auto triple = [&](const RelatedTriple& t) { return Json::array({em.at(t.a), em.at(t.b), em.at(t.c)}); };

  em.heading("relation");
  em.line(fmt::format("  {} pairs", rel.size()));
  em.verdict("transitive", r.transitive.holds);
  em.verdict("F-closed", r.f_closed.holds);
  for (const auto& w : r.f_closed.witnesses) em.line(fmt::format("    witness {}: image pair not related", em.fmt_pair(w)));
  em.line(fmt::format("  {:<28} {}", "complete (distinct pairs)", r.complete.holds ? "yes" : "no"));
  em.line(fmt::format("  {:<28} {}", "b-d-self-closed", to_string(r.bd_self_closed.decision)));
  em.line(fmt::format("  reflexive {} / irreflexive {} / symmetric {} / antisymmetric {}",
                      r.order.reflexive.holds ? "yes" : "no", r.order.irreflexive.holds ? "yes" : "no",
                      r.order.symmetric.holds ? "yes" : "no", r.order.antisymmetric.holds ? "yes" : "no"));

  Json pairs = Json::array();
  for (const auto& p : rel.pairs()) pairs.push_back(em.pair(p));
  return Json{{"pairs", pairs},
              {"transitive", check_json(r.transitive, triple)},
              {"f_closed", check_json(r.f_closed, pair)},
              {"complete", check_json(r.complete, pair)},
              {"completeness_convention", std::string(RelationReport::completeness_convention)},
              {"bd_self_closed",
               {{"decision", std::string(to_string(r.bd_self_closed.decision))},
                {"justification", r.bd_self_closed.justification}}},
              {"reflexive", check_json(r.order.reflexive, point)},
              {"irreflexive", check_json(r.order.irreflexive, point)},
              {"symmetric", check_json(r.order.symmetric, pair)},
              {"antisymmetric", check_json(r.order.antisymmetric, pair)}};
}

Json hypotheses_section(Emitter& em, const ContractionProblem& problem, const HypothesisReport& h) {
  Json ledger = Json::array();
  for (const auto& row : h.contraction.rows) {
    Json j{{"sigma", em.at(row.sigma)},
           {"rho", em.at(row.rho)},
           {"active", row.active},
           {"t", row.t},
           {"s_arg", row.s_arg},
           {"zeta", row.zeta_value ? Json(*row.zeta_value) : Json(nullptr)},
           {"verdict", std::string(to_string(row.verdict))},
           {"definition_sensitive", row.definition_sensitive}};
    if (!row.note.empty()) j["note"] = row.note;
    ledger.push_back(std::move(j));
  }

  em.heading("hypotheses");
  em.verdict("(i) M(F;R) nonempty", h.mfr_nonempty, "M(F;R) = " + em.fmt_points(h.mfr));
  em.verdict("(ii) F-closed", h.f_closed.holds);
  em.verdict("(ii) transitive", h.transitive.holds);
  em.verdict("(iii) continuity/closedness", h.condition_iii != ConditionIII::neither, to_string(h.condition_iii));
  em.verdict("(iv) contraction", h.contraction.passed,
             fmt::format("{} active, {} vacuous, tol {}", h.contraction.active, h.contraction.vacuous,
                         h.contraction.tolerance));
  em.line("    ledger: t = s*d(F sigma, F rho), s_arg = (phi(sigma) - phi(F sigma)) * d(sigma, rho)");
  for (const auto& row : h.contraction.rows) {
    if (!row.active && row.verdict == PairVerdict::vacuous) continue;
    em.line(fmt::format("    ({}, {})  t = {}  s_arg = {}  zeta = {}  {}{}", em.at(row.sigma), em.at(row.rho), row.t,
                        row.s_arg, row.zeta_value ? fmt::format("{}", *row.zeta_value) : std::string("n/a"),
                        to_string(row.verdict), row.definition_sensitive ? " (definition-sensitive)" : ""));
  }
  for (const auto& c : h.caveats) em.line("  caveat: " + c);
  em.line(fmt::format("  all hypotheses: {}", h.all_hypotheses_ok ? "PASS" : "FAIL"));

  Json out{{"mfr", em.points(h.mfr)},
           {"mfr_nonempty", h.mfr_nonempty},
           {"f_closed", h.f_closed.holds},
           {"f_closed_witnesses", em.pairs(h.f_closed.witnesses)},
           {"transitive", h.transitive.holds},
           {"condition_iii", std::string(to_string(h.condition_iii))},
           {"contraction",
            {{"ok", h.contraction.passed},
             {"tolerance", h.contraction.tolerance},
             {"active", h.contraction.active},
             {"vacuous", h.contraction.vacuous},
             {"failures", em.pairs(h.contraction.failures)},
             {"ledger", ledger}}},
           {"caveats", h.caveats},
           {"all_hypotheses_ok", h.all_hypotheses_ok}};

  if (problem.zeta.family() == ZetaFamily::linear) {
    const auto th = linear_lambda_threshold(problem);
    em.line(fmt::format("  linear zeta threshold: lambda >= {}{}", th.lambda_min, th.feasible ? "" : " (infeasible)"));
    out["linear_lambda_threshold"] = {{"lambda_min", th.lambda_min},
                                      {"feasible", th.feasible},
                                      {"binding", em.pairs(th.binding)},
                                      {"blocking", em.pairs(th.blocking)}};
  }
  return out;
}

Json probe_json(Emitter& em, const PairProbe& p) {
  return Json{{"sigma", em.at(p.sigma)},
              {"rho", em.at(p.rho)},
              {"related", p.related},
              {"distance", p.distance},
              {"image_distance", p.image_distance},
              {"lipschitz_ratio", p.lipschitz_ratio ? Json(*p.lipschitz_ratio) : Json(nullptr)},
              {"b_simulation_bound", p.b_simulation.value},
              {"b_simulation_sign", std::string(to_string(p.b_simulation.sign))}};
}

Json banach_section(Emitter& em, const ContractionProblem& problem) {
  const auto b = banach_ratio_report(problem);
  Json rows = Json::array();
  for (const auto& p : b.rows) rows.push_back(probe_json(em, p));
  em.heading("Banach ratio d(Fx, Fy) / d(x, y) over related pairs");
  em.line(fmt::format("  max ratio {} at {} pair(s); Banach contraction: {}", b.max_ratio, b.attaining.size(),
                      b.banach_contraction ? "yes" : "no"));
  return Json{{"max_ratio", b.max_ratio},
              {"attaining", em.pairs(b.attaining)},
              {"banach_contraction", b.banach_contraction},
              {"rows", rows}};
}

Json probes_section(Emitter& em, const LoadedProblem& loaded, const ContractionProblem& problem) {
  Json out = Json::array();
  if (loaded.probes.empty()) return out;
  em.heading("probes");
  for (const auto& [a, b] : loaded.probes) {
    const auto p = probe_pair(problem, a, b);
    em.line(fmt::format("  ({}, {}): d = {}, d(F.,F.) = {}, ratio = {}, d - s*d(F.,F.) = {} ({})", em.at(a), em.at(b),
                        p.distance, p.image_distance,
                        p.lipschitz_ratio ? fmt::format("{}", *p.lipschitz_ratio) : std::string("n/a"),
                        p.b_simulation.value, to_string(p.b_simulation.sign)));
    out.push_back(probe_json(em, p));
  }
  return out;
}

struct SolveOutcome {
  std::optional<IterationTrace> trace;
  std::optional<RatioDiagnostics> diagnostics;
  std::string error;
  bool ok = false;
};

SolveOutcome solve(const ContractionProblem& problem, const LoadedProblem& loaded, const RunOptions& options) {
  SolveOutcome out;
  std::optional<PointId> start;
  if (options.start) {
    start = resolve_point(problem.space, *options.start);
  } else if (loaded.start) {
    start = loaded.start;
  } else {
    const auto mfr = compute_mfr(problem.space, problem.relation, problem.map);
    if (!mfr.empty()) start = mfr.front();
  }
  if (!start) {
    out.error = "M(F;R) is empty: no admissible starting point";
    return out;
  }
  SolverOptions so;
  so.tol = options.tol.value_or(loaded.solver_tol.value_or(default_contraction_tolerance(problem.space)));
  so.max_iter = options.max_iter.value_or(loaded.max_iter.value_or(0));
  so.allow_unsafe_start = loaded.unsafe_start;
  try {
    out.trace = picard_iterate(problem, *start, so);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::solver) throw;
    out.error = e.what();
    return out;
  }
  out.diagnostics = ratio_diagnostics(*out.trace, problem.potential);
  out.ok = out.trace->terminated_by != Termination::max_iterations;
  return out;
}

Json solve_section(Emitter& em, const SolveOutcome& s) {
  em.heading("Picard iteration");
  if (!s.trace) {
    em.line("  FAIL  " + s.error);
    return Json{{"ok", false}, {"error", s.error}};
  }
  const auto& t = *s.trace;
  const auto& d = *s.diagnostics;
  em.line("  orbit " + em.fmt_points(t.orbit));
  em.line(fmt::format("  terminated by {}, residual {}, {} positive steps", to_string(t.terminated_by), t.residual,
                      t.positive_steps()));
  if (!t.start_in_mfr) em.line("  warning: start point is outside M(F;R) (unsafe start)");
  em.verdict("ratio bound", d.ratio_bound_ok, "C_{n+1}/C_n <= phi(x_{n-1}) - phi(x_n)");
  em.verdict("telescoping", d.telescoping_ok, fmt::format("sum = {} <= {}", d.ratio_sum, d.phi_gap));
  em.verdict("potential descent", d.phi_descent_ok);
  if (d.asymptotic_exercised) {
    em.verdict("eventual decay", d.rho_below_one && d.decay_ok, fmt::format("rho = {}, n0 = {}", *d.rho, *d.n0));
  } else {
    em.line("  eventual decay               not exercised (fewer than three positive steps)");
  }

  Json ratios = Json::array();
  for (const auto& r : t.ratios) ratios.push_back({{"n", r.n}, {"value", r.value}});
  Json bounds = Json::array();
  for (const auto& r : d.ratio_bounds) {
    bounds.push_back({{"n", r.n}, {"ratio", r.ratio}, {"phi_drop", r.phi_drop}, {"holds", r.holds}});
  }
  Json tele = Json::array();
  for (const auto& r : d.telescoping) {
    tele.push_back({{"n", r.n}, {"partial_sum", r.partial_sum}, {"bound", r.bound}, {"holds", r.holds}});
  }
  Json decay = Json::array();
  for (const auto& r : d.decay) {
    decay.push_back({{"n", r.n}, {"step", r.step}, {"next_step", r.next_step}, {"holds", r.holds}});
  }
  Json trace{{"orbit", em.points(t.orbit)},
             {"steps", t.steps},
             {"ratios", ratios},
             {"phi_values", t.phi_values},
             {"phi_limit", t.phi_limit},
             {"rho", t.rho ? Json(*t.rho) : Json(nullptr)},
             {"n0", t.n0 ? Json(*t.n0) : Json(nullptr)},
             {"residual", t.residual},
             {"terminated_by", std::string(to_string(t.terminated_by))},
             {"start_in_mfr", t.start_in_mfr}};
  Json diag{{"tolerance", d.tolerance},
            {"ratio_bound_ok", d.ratio_bound_ok},
            {"ratio_bounds", bounds},
            {"telescoping_ok", d.telescoping_ok},
            {"telescoping", tele},
            {"ratio_sum", d.ratio_sum},
            {"phi_gap", d.phi_gap},
            {"phi_descent_ok", d.phi_descent_ok},
            {"asymptotic_exercised", d.asymptotic_exercised},
            {"rho", d.rho ? Json(*d.rho) : Json(nullptr)},
            {"n0", d.n0 ? Json(*d.n0) : Json(nullptr)},
            {"rho_below_one", d.rho_below_one},
            {"decay_ok", d.decay_ok},
            {"decay", decay},
            {"ok", d.all_ok()}};
  return Json{{"ok", s.ok}, {"fixed_point", em.at(t.terminal())}, {"trace", trace}, {"diagnostics", diag}};
}

Json certificate_section(Emitter& em, const ContractionProblem& problem, const SolveOutcome& s, double tol, bool& ok) {
  em.heading("certificate");
  ok = false;
  if (!s.trace || !s.ok) {
    em.line("  FAIL  no terminated trace to certify");
    return Json{{"ok", false}, {"error", "no terminated trace to certify"}};
  }
  try {
    const auto cert = certify(problem, *s.trace, tol);
    const auto connected = [&](const std::vector<ConnectedFixedPoints>& v) {
      Json out = Json::array();
      for (const auto& c : v) {
        out.push_back({{"a", em.at(c.a)}, {"b", em.at(c.b)}, {"path", em.points(c.path.nodes)}, {"reason", c.reason}});
      }
      return out;
    };
    ok = cert.unique && cert.contradictions.empty();
    em.line("  fixed points (exhaustive) " + em.fmt_points(cert.fixed_points));
    em.line(fmt::format("  solver result {}", em.at(cert.solver_result)));
    em.verdict("unique fixed point", cert.unique);
    for (const auto& c : cert.contradictions) {
      em.line(fmt::format("    contradiction: {} and {} joined by path {}: {}", em.at(c.a), em.at(c.b),
                          em.fmt_points(c.path.nodes), c.reason));
    }
    return Json{{"fixed_points", em.points(cert.fixed_points)},
                {"solver_result", em.at(cert.solver_result)},
                {"unique", cert.unique},
                {"contraction_passed", cert.contraction_passed},
                {"contradictions", connected(cert.contradictions)},
                {"connected_pairs", connected(cert.connected_pairs)},
                {"ok", ok}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::certificate) throw;
    em.line(std::string("  FAIL  ") + e.what());
    return Json{{"ok", false}, {"error", e.what()}};
  }
}

}  // namespace

RunResult run_command(Command command, const LoadedProblem& loaded, const RunOptions& options,
                      std::string_view input_text) {
  ContractionProblem problem = loaded.problem;
  if (options.s) {
    try {
      problem.space = problem.space.with_coefficient(*options.s);
    } catch (const Error& e) {
      throw ParseError(ErrorKind::semantic, 0, 0, e.what());
    }
  }
  if (options.tol && !(*options.tol >= 0.0)) throw ParseError(ErrorKind::semantic, 0, 0, "tolerance must be nonnegative");
  const double axiom_tol = options.tol.value_or(problem.space.default_tolerance());
  const double contraction_tol = options.tol.value_or(default_contraction_tolerance(problem.space));

  Emitter em(problem.space);
  Json doc;
  doc["header"] = {{"tool", "relfix"},
                   {"version", std::string(kToolVersion)},
                   {"schema", std::string(kReportSchema)},
                   {"command", std::string(to_string(command))},
                   {"input_digest", input_digest(input_text)}};
  doc["problem"] = {{"name", loaded.file.name},
                    {"points", problem.space.coordinates()},
                    {"metric", std::string(to_string(problem.space.kind()))},
                    {"s", problem.space.coefficient()},
                    {"complete_declared", problem.space.complete_declared()},
                    {"relation_pairs", problem.relation.size()}};
  em.line(fmt::format("relfix {} | {} | {} points, {} metric, s = {}", to_string(command),
                      loaded.file.name.empty() ? "(unnamed)" : loaded.file.name, problem.space.size(),
                      to_string(problem.space.kind()), problem.space.coefficient()));

  Json verdicts;
  const bool want_axioms = command == Command::axioms || command == Command::report;
  const bool want_verify = command == Command::verify || command == Command::report;
  const bool want_solve = command == Command::solve || command == Command::certify || command == Command::report;
  const bool want_cert = command == Command::certify || command == Command::report;

  if (want_axioms) {
    const auto axioms = verify_bmetric_axioms(problem.space, axiom_tol);
    doc["axioms"] = axioms_section(em, axioms);
    const auto zeta = check_zeta_axioms(problem.zeta, loaded.zeta_samples);
    doc["zeta_axioms"] = zeta_section(em, problem.zeta, zeta);
    verdicts["axioms"] = axioms.all_ok();
    verdicts["zeta_axioms"] = zeta.all_ok();
  }
  if (want_verify) {
    doc["relation"] = relation_section(em, problem.relation, relation_report(problem.space, problem.relation, problem.map));
    const auto h = verify_all_hypotheses(problem, contraction_tol);
    doc["hypotheses"] = hypotheses_section(em, problem, h);
    doc["banach_ratio"] = banach_section(em, problem);
    doc["probes"] = probes_section(em, loaded, problem);
    verdicts["hypotheses"] = h.all_hypotheses_ok;
  }
  if (want_solve) {
    const auto outcome = solve(problem, loaded, options);
    doc["solve"] = solve_section(em, outcome);
    verdicts["solve"] = outcome.ok;
    if (want_cert) {
      bool cert_ok = false;
      doc["certificate"] = certificate_section(em, problem, outcome, contraction_tol, cert_ok);
      verdicts["certificate"] = cert_ok;
    }
  }

  bool passed = true;
  for (const auto& [key, value] : verdicts.items()) passed = passed && value.get<bool>();
  doc["verdicts"] = verdicts;
  doc["passed"] = passed;
  em.line(fmt::format("\noverall: {}", passed ? "PASS" : "FAIL"));

  RunResult result;
  result.json = std::move(doc);
  result.text = std::move(em.text);
  result.passed = passed;
  result.exit_status = passed ? kExitPass : kExitVerdictFailure;
  return result;
}

}  // namespace relfix::io
