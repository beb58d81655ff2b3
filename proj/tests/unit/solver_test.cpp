#include <gtest/gtest.h>

#include "relfix/core/solver.hpp"
#include "support/example.hpp"
#include "support/generators.hpp"

namespace relfix {
namespace {

using testing::pt;

TEST(Picard, ExampleFromThree) {
  const auto p = testing::example_problem();
  const auto trace = picard_iterate(p, pt(3));
  EXPECT_EQ(trace.orbit, (std::vector<PointId>{pt(3), pt(2), pt(1), pt(1)}));
  EXPECT_EQ(trace.steps, (std::vector<double>{1, 1, 0}));
  EXPECT_EQ(trace.residual, 0.0);
  EXPECT_EQ(trace.terminated_by, Termination::exact_fixed_point);
  EXPECT_EQ(trace.terminal(), pt(1));
  EXPECT_EQ(trace.positive_steps(), 2u);
  ASSERT_EQ(trace.ratios.size(), 2u);
  EXPECT_EQ(trace.ratios[0].n, 1u);
  EXPECT_EQ(trace.ratios[0].value, 1.0);
  EXPECT_EQ(trace.phi_limit, 3.0);
  EXPECT_FALSE(trace.rho.has_value());
}

TEST(Picard, ExampleOtherStarts) {
  const auto p = testing::example_problem();
  const auto from1 = picard_iterate(p, pt(1));
  EXPECT_EQ(from1.orbit, (std::vector<PointId>{pt(1), pt(1)}));
  EXPECT_EQ(from1.positive_steps(), 0u);
  const auto from2 = picard_iterate(p, pt(2));
  EXPECT_EQ(from2.orbit, (std::vector<PointId>{pt(2), pt(1), pt(1)}));
  EXPECT_EQ(from2.steps.front(), 1.0);
}

TEST(Picard, StartOutsideMfr) {
  const auto p = testing::example_problem();
  try {
    (void)picard_iterate(p, pt(4));
    FAIL() << "expected a solver error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::solver);
  }
  SolverOptions unsafe;
  unsafe.allow_unsafe_start = true;
  const auto trace = picard_iterate(p, pt(4), unsafe);
  EXPECT_FALSE(trace.start_in_mfr);
  EXPECT_EQ(trace.terminal(), pt(1));
}

TEST(Picard, OrbitLeavingRelationThrows) {
  auto p = testing::example_problem();
  // (3,2) related, (2,1) not: the second step leaves R.
  p.relation = testing::relation_of(4, {{pt(3), pt(2)}});
  EXPECT_THROW((void)picard_iterate(p, pt(3)), Error);
}

TEST(Picard, MaxIterationsOnCycle) {
  const auto space = BMetricSpace::from_formula({0, 1}, MetricKind::absolute_difference, 1.0);
  ContractionProblem p{space, BinaryRelation::full(2), SelfMap({point_id(1), point_id(0)}), Potential({0, 0}),
                       SimulationFunction::linear(0.5)};
  SolverOptions opt;
  opt.max_iter = 5;
  const auto trace = picard_iterate(p, point_id(0), opt);
  EXPECT_EQ(trace.terminated_by, Termination::max_iterations);
  EXPECT_EQ(trace.steps.size(), 5u);
  EXPECT_THROW((void)certify(p, trace), Error);
}

TEST(Picard, ToleranceStop) {
  auto p = testing::example_problem();
  SolverOptions opt;
  opt.tol = 1.0;
  const auto trace = picard_iterate(p, pt(3), opt);
  EXPECT_EQ(trace.terminated_by, Termination::tolerance);
  EXPECT_EQ(trace.terminal(), pt(2));
  try {
    (void)certify(p, trace);
    FAIL() << "expected a certificate error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::certificate);
  }
}

TEST(Diagnostics, ExampleTrace) {
  const auto p = testing::example_problem();
  const auto diag = ratio_diagnostics(picard_iterate(p, pt(3)), p.potential);
  ASSERT_FALSE(diag.ratio_bounds.empty());
  EXPECT_EQ(diag.ratio_bounds[0].ratio, 1.0);
  EXPECT_EQ(diag.ratio_bounds[0].phi_drop, 3.0);
  EXPECT_TRUE(diag.ratio_bound_ok);
  EXPECT_EQ(diag.ratio_sum, 1.0);
  EXPECT_EQ(diag.phi_gap, 6.0);
  EXPECT_TRUE(diag.telescoping_ok);
  EXPECT_TRUE(diag.phi_descent_ok);
  EXPECT_FALSE(diag.asymptotic_exercised);
  EXPECT_TRUE(diag.all_ok());
}

TEST(Diagnostics, SingleStepNotExercised) {
  const auto p = testing::example_problem();
  const auto diag = ratio_diagnostics(picard_iterate(p, pt(1)), p.potential);
  EXPECT_FALSE(diag.asymptotic_exercised);
  EXPECT_TRUE(diag.ratio_bounds.empty());
}

TEST(Diagnostics, DetectsRatioViolation) {
  // Steps 1, 2 along 0 -> 1 -> 3 with phi dropping by 1: ratio 2 > 1.
  const auto space = BMetricSpace::from_formula({0, 1, 3}, MetricKind::absolute_difference, 1.0);
  ContractionProblem p{space, BinaryRelation::full(3), SelfMap({point_id(1), point_id(2), point_id(2)}),
                       Potential({2, 1, 0}), SimulationFunction::linear(0.5)};
  const auto diag = ratio_diagnostics(picard_iterate(p, point_id(0)), p.potential);
  EXPECT_FALSE(diag.ratio_bound_ok);
  EXPECT_FALSE(diag.telescoping_ok);
  EXPECT_FALSE(diag.all_ok());
}

TEST(FixedPoints, Enumeration) {
  EXPECT_EQ(enumerate_fixed_points(testing::example_space(), testing::example_map()), std::vector<PointId>{pt(1)});
  EXPECT_EQ(enumerate_fixed_points(testing::example_space(), SelfMap::identity(4)).size(), 4u);
  EXPECT_THROW(SelfMap({point_id(0), point_id(0), point_id(3)}), Error);
}

TEST(Certificate, Example) {
  const auto p = testing::example_problem();
  const auto cert = certify(p, picard_iterate(p, pt(3)));
  EXPECT_TRUE(cert.unique);
  EXPECT_EQ(cert.fixed_points, std::vector<PointId>{pt(1)});
  EXPECT_EQ(cert.solver_result, pt(1));
  EXPECT_TRUE(cert.contraction_passed);
  EXPECT_TRUE(cert.contradictions.empty());
}

TEST(Certificate, IdentityWithFullRelationRecordsContradiction) {
  // The contraction condition only constrains points that move, so the
  // identity passes it vacuously while every point is a fixed point.
  ContractionProblem p{BMetricSpace::from_formula({0, 1, 2}, MetricKind::absolute_difference, 1.0),
                       BinaryRelation::full(3), SelfMap::identity(3), Potential({0, 0, 0}),
                       SimulationFunction::linear(0.5)};
  const auto cert = certify(p, picard_iterate(p, point_id(1)));
  EXPECT_FALSE(cert.unique);
  EXPECT_TRUE(cert.contraction_passed);
  EXPECT_EQ(cert.contradictions.size(), 3u);
  EXPECT_EQ(cert.connected_pairs.size(), 3u);
  EXPECT_NE(cert.contradictions[0].reason.find("vacuous"), std::string::npos);
}

TEST(Certificate, FailingContractionClaimsNoContradiction) {
  // 0 and 1 fixed, 2 -> 0 with a flat potential: the contraction fails.
  ContractionProblem p{BMetricSpace::from_formula({0, 1, 2}, MetricKind::absolute_difference, 1.0),
                       BinaryRelation::full(3), SelfMap({point_id(0), point_id(1), point_id(0)}),
                       Potential({1, 1, 1}), SimulationFunction::linear(0.5)};
  const auto cert = certify(p, picard_iterate(p, point_id(2)));
  EXPECT_FALSE(cert.unique);
  EXPECT_FALSE(cert.contraction_passed);
  EXPECT_TRUE(cert.contradictions.empty());
  ASSERT_EQ(cert.connected_pairs.size(), 1u);
  EXPECT_EQ(cert.connected_pairs[0].path.nodes, (std::vector<PointId>{point_id(0), point_id(1)}));
}

TEST(SolverProperty, TracesPreserveRelationAndEndAtOracleFixedPoints) {
  testing::Rng rng(0x5eed0007);
  int solved = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = testing::random_problem(rng);
    if (!verify_all_hypotheses(p).all_hypotheses_ok) continue;
    const auto fixed = enumerate_fixed_points(p.space, p.map);
    for (PointId start : compute_mfr(p.space, p.relation, p.map)) {
      const auto trace = picard_iterate(p, start);
      ASSERT_NE(trace.terminated_by, Termination::max_iterations);
      for (std::size_t k = 0; k + 1 < trace.orbit.size(); ++k)
        ASSERT_TRUE(p.relation.contains(trace.orbit[k], trace.orbit[k + 1]));
      ASSERT_TRUE(std::binary_search(fixed.begin(), fixed.end(), trace.terminal()));
      const auto diag = ratio_diagnostics(trace, p.potential);
      ASSERT_TRUE(diag.ratio_bound_ok);
      ASSERT_TRUE(diag.telescoping_ok);
      ASSERT_TRUE(diag.phi_descent_ok);
      // Short finite orbits can carry ratios above 1 (the bound is the phi
      // drop, not 1), so only the decay rows are checked against the estimate.
      if (diag.asymptotic_exercised) {
        ASSERT_TRUE(diag.decay_ok);
      }
      ++solved;
    }
  }
  EXPECT_GT(solved, 50);
}

}  // namespace
}  // namespace relfix
