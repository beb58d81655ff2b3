#include <gtest/gtest.h>

#include <algorithm>

#include "relfix/core/contraction.hpp"
#include "support/example.hpp"
#include "support/generators.hpp"

namespace relfix {
namespace {

using testing::pt;

PointPair pp(int a, int b) { return {pt(a), pt(b)}; }

const LedgerRow& row_for(const ContractionLedger& ledger, int a, int b) {
  const auto it = std::find_if(ledger.rows.begin(), ledger.rows.end(),
                               [&](const LedgerRow& r) { return r.sigma == pt(a) && r.rho == pt(b); });
  if (it == ledger.rows.end()) throw std::runtime_error("no ledger row");
  return *it;
}

TEST(Mfr, Example) {
  const auto mfr = compute_mfr(testing::example_space(), testing::example_relation(), testing::example_map());
  EXPECT_EQ(mfr, (std::vector<PointId>{pt(1), pt(2), pt(3)}));
  EXPECT_TRUE(compute_mfr(testing::example_space(), BinaryRelation(4), testing::example_map()).empty());
}

TEST(Contraction, ExampleLedgerAtPointNine) {
  const auto ledger = verify_contraction(testing::example_problem(0.9));
  EXPECT_TRUE(ledger.passed);
  EXPECT_EQ(ledger.rows.size(), 12u);
  EXPECT_EQ(ledger.active, 8u);
  EXPECT_EQ(ledger.vacuous, 4u);

  const auto& r23 = row_for(ledger, 2, 3);
  EXPECT_EQ(r23.t, 2.0);
  EXPECT_EQ(r23.s_arg, 3.0);
  ASSERT_TRUE(r23.zeta_value.has_value());
  EXPECT_DOUBLE_EQ(*r23.zeta_value, 0.7);
  EXPECT_EQ(r23.verdict, PairVerdict::pass);

  for (int rho = 1; rho <= 4; ++rho) EXPECT_EQ(row_for(ledger, 1, rho).verdict, PairVerdict::vacuous);
}

TEST(Contraction, ExampleFailsAtOneHalf) {
  const auto ledger = verify_contraction(testing::example_problem(0.5));
  EXPECT_FALSE(ledger.passed);
  const auto& r23 = row_for(ledger, 2, 3);
  EXPECT_DOUBLE_EQ(*r23.zeta_value, -0.5);
  EXPECT_EQ(r23.verdict, PairVerdict::fail);
  EXPECT_EQ(ledger.failures, (std::vector<PointPair>{pp(2, 3), pp(2, 4), pp(3, 2), pp(3, 4)}));
}

TEST(Contraction, LambdaThresholdIsTwoThirds) {
  const auto th = linear_lambda_threshold(testing::example_problem(0.5));
  EXPECT_TRUE(th.feasible);
  EXPECT_DOUBLE_EQ(th.lambda_min, 2.0 / 3.0);
  EXPECT_EQ(th.binding, (std::vector<PointPair>{pp(2, 3), pp(2, 4), pp(3, 2), pp(3, 4)}));
  EXPECT_TRUE(th.blocking.empty());
}

TEST(Contraction, IncreasingPotentialBlocks) {
  auto p = testing::example_problem();
  p.potential = Potential({12, 9, 6, 3});
  const auto ledger = verify_contraction(p);
  EXPECT_FALSE(ledger.passed);
  EXPECT_EQ(row_for(ledger, 2, 3).verdict, PairVerdict::fail);
  EXPECT_FALSE(row_for(ledger, 2, 3).note.empty());
  const auto th = linear_lambda_threshold(p);
  EXPECT_FALSE(th.feasible);
  EXPECT_FALSE(th.blocking.empty());
}

TEST(Contraction, DefinitionSensitiveRowsAreFlagged) {
  // phi(2) = phi(1): the second argument vanishes while t stays positive.
  auto p = testing::example_problem();
  p.potential = Potential({3, 3, 9, 12});
  const auto ledger = verify_contraction(p);
  const auto& r23 = row_for(ledger, 2, 3);
  EXPECT_EQ(r23.s_arg, 0.0);
  EXPECT_GT(r23.t, 0.0);
  EXPECT_TRUE(r23.definition_sensitive);
  EXPECT_EQ(r23.verdict, PairVerdict::fail);
}

TEST(Contraction, RejectsMismatchedComponents) {
  auto p = testing::example_problem();
  p.potential = Potential({1, 2, 3});
  EXPECT_THROW(verify_contraction(p), Error);
  EXPECT_THROW(verify_contraction(testing::example_problem(), -1.0), Error);
}

TEST(Hypotheses, ExamplePasses) {
  const auto rep = verify_all_hypotheses(testing::example_problem(0.9));
  EXPECT_TRUE(rep.all_hypotheses_ok);
  EXPECT_TRUE(rep.mfr_nonempty);
  EXPECT_TRUE(rep.f_closed.holds);
  EXPECT_TRUE(rep.transitive.holds);
  EXPECT_EQ(rep.condition_iii, ConditionIII::bd_self_closed_verified);
  EXPECT_FALSE(rep.caveats.empty());
}

TEST(Hypotheses, FailuresAreLocalised) {
  auto p = testing::example_problem();
  p.relation = testing::relation_of(4, {pp(3, 4)});
  const auto rep = verify_all_hypotheses(p);
  EXPECT_FALSE(rep.f_closed.holds);
  EXPECT_EQ(rep.f_closed.witnesses, std::vector<PointPair>{pp(3, 4)});
  EXPECT_FALSE(rep.all_hypotheses_ok);

  p.relation = BinaryRelation(4);
  EXPECT_FALSE(verify_all_hypotheses(p).mfr_nonempty);
}

TEST(Hypotheses, SampledSpaceFallsBackToDeclaredContinuity) {
  auto p = testing::example_problem();
  p.space.mark_sampled(true);
  EXPECT_EQ(verify_all_hypotheses(p).condition_iii, ConditionIII::neither);
  p.map = SelfMap({pt(1), pt(1), pt(2), pt(3)}, true);
  const auto rep = verify_all_hypotheses(p);
  EXPECT_EQ(rep.condition_iii, ConditionIII::r_continuous_declared);
  EXPECT_TRUE(rep.all_hypotheses_ok);
}

TEST(Uniqueness, PathsInExample) {
  const auto p = testing::example_problem();
  const auto u14 = verify_uniqueness_condition(p, pt(1), pt(4));
  EXPECT_TRUE(u14.holds);
  EXPECT_EQ(u14.path->nodes, (std::vector<PointId>{pt(1), pt(4)}));
  EXPECT_EQ(u14.collapsed_pair, pp(1, 4));
  EXPECT_FALSE(verify_uniqueness_condition(p, pt(4), pt(1)).holds);
  EXPECT_TRUE(verify_uniqueness_condition(p, pt(2), pt(2)).holds);
}

TEST(Probe, RemarkPair) {
  const auto probe = probe_pair(testing::example_problem(), pt(2), pt(4));
  EXPECT_TRUE(probe.related);
  EXPECT_EQ(probe.distance, 4.0);
  EXPECT_EQ(probe.image_distance, 4.0);
  EXPECT_EQ(probe.b_simulation.value, -4.0);
  EXPECT_EQ(probe.b_simulation.sign, Sign::negative);

  auto usual = testing::example_problem();
  usual.space = BMetricSpace::from_formula({1, 2, 3, 4}, MetricKind::absolute_difference, 1.0);
  const auto u = probe_pair(usual, pt(2), pt(4));
  EXPECT_EQ(u.distance, 2.0);
  EXPECT_EQ(u.image_distance, 2.0);
  EXPECT_EQ(u.lipschitz_ratio, 1.0);
  EXPECT_FALSE(banach_ratio_report(usual).banach_contraction);
}

TEST(ContractionProperty, IdentityMapIsVacuous) {
  testing::Rng rng(0x5eed0005);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = testing::uniform_size(rng, 1, 8);
    ContractionProblem p{testing::random_space(rng, n), testing::random_relation(rng, n, 0.5), SelfMap::identity(n),
                         testing::random_potential(rng, SelfMap::identity(n)), SimulationFunction::linear(0.5)};
    const auto ledger = verify_contraction(p);
    ASSERT_TRUE(ledger.passed);
    ASSERT_EQ(ledger.active, 0u);
  }
}

// Oracle for the threshold: exact rational comparison of t / s_arg on
// integer data, independent of the ledger.
TEST(ContractionProperty, ThresholdSeparatesPassAndFail) {
  testing::Rng rng(0x5eed0006);
  int feasible = 0;
  for (int iter = 0; iter < 200; ++iter) {
    auto p = testing::random_problem(rng);
    const auto th = linear_lambda_threshold(p);
    long long num = 0, den = 1;
    bool blocked = false;
    for (const auto& [a, b] : p.relation.pairs()) {
      const PointId fa = p.map(a);
      if (p.space.distance(a, fa) == 0.0) continue;
      const auto t = static_cast<long long>(p.space.coefficient() * p.space.distance(fa, p.map(b)));
      const auto s = static_cast<long long>((p.potential(a) - p.potential(fa)) * p.space.distance(a, b));
      if (t == 0 && s >= 0) continue;
      if (s <= 0) {
        blocked = true;
        continue;
      }
      if (t * den > num * s) {
        num = t;
        den = s;
      }
    }
    ASSERT_EQ(th.blocking.empty(), !blocked);
    ASSERT_DOUBLE_EQ(th.lambda_min, static_cast<double>(num) / static_cast<double>(den));
    if (!th.feasible || th.lambda_min == 0.0) continue;
    ++feasible;
    const double above = std::min(0.999999, th.lambda_min * 1.001);
    p.zeta = SimulationFunction::linear(above);
    ASSERT_TRUE(verify_contraction(p, 0.0).passed);
    p.zeta = SimulationFunction::linear(th.lambda_min * 0.999);
    ASSERT_FALSE(verify_contraction(p, 0.0).passed);
  }
  EXPECT_GT(feasible, 10);
}

}  // namespace
}  // namespace relfix
