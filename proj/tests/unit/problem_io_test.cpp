#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "relfix/io/problem_file.hpp"
#include "support/generators.hpp"

namespace relfix::io {
namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(RELFIX_FIXTURES_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Minimal valid problem with one line left for the caller to vary.
std::string problem_with(const std::string& space_extra, const std::string& potential) {
  return "[space]\npoints = 1 2 3\nmetric = absolute-difference\n" + space_extra +
         "\n[relation]\npairs = (1, 2)\n[map]\nimage = 1 -> 1\nimage = 2 -> 1\nimage = 3 -> 2\n[potential]\n" +
         potential + "\n[zeta]\nfamily = linear\nlambda = 0.5\n";
}

ParseError parse_error_of(const std::string& text) {
  try {
    (void)load_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  throw std::runtime_error("text parsed without error");
}

TEST(ProblemFile, ExampleFixture) {
  const auto loaded = load_problem(read_fixture("example-3-1.rfx"));
  EXPECT_EQ(loaded.file.name, "example-3-1");
  EXPECT_EQ(loaded.problem.space.size(), 4u);
  EXPECT_EQ(loaded.problem.relation.size(), 12u);
  EXPECT_EQ(loaded.file.potential.kind, PotentialBlock::Kind::linear);
  EXPECT_EQ(loaded.file.potential.coefficient, 3.0);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(loaded.problem.potential(point_id(i)), 3.0 * static_cast<double>(i + 1));
  }
  EXPECT_EQ(loaded.problem.map.images()[3], point_id(2));
  EXPECT_EQ(loaded.file.map.pieces.size(), 3u);
  EXPECT_FALSE(loaded.file.map.pieces[1].lo_closed);
  EXPECT_EQ(loaded.start, point_id(2));
  EXPECT_EQ(loaded.problem.zeta.lambda(), 0.9);
}

TEST(ProblemFile, AllFixturesLoad) {
  for (const char* name :
       {"example-3-1.rfx", "remark-b-simulation.rfx", "remark-usual-metric.rfx", "synthetic-geometric.rfx"}) {
    SCOPED_TRACE(name);
    const auto text = read_fixture(name);
    ASSERT_FALSE(text.empty());
    EXPECT_NO_THROW((void)load_problem(text));
  }
  EXPECT_EQ(load_problem(read_fixture("synthetic-geometric.rfx")).problem.space.size(), 20u);
  EXPECT_EQ(load_problem(read_fixture("remark-b-simulation.rfx")).probes.size(), 1u);
}

TEST(ProblemFile, SemanticErrorsNameTheInvariant) {
  const auto s_err = parse_error_of(problem_with("s = 0.5", "linear = 1"));
  EXPECT_EQ(s_err.kind(), ErrorKind::semantic);
  EXPECT_NE(s_err.message().find("s >= 1 required"), std::string::npos);
  EXPECT_EQ(s_err.line(), 4);

  const auto phi_err = parse_error_of(problem_with("", "value = 1 -> 0\nvalue = 2 -> -1\nvalue = 3 -> 0"));
  EXPECT_EQ(phi_err.kind(), ErrorKind::semantic);
  EXPECT_NE(phi_err.message().find("codomain [0, inf)"), std::string::npos);

  const auto total = parse_error_of(
      "[space]\npoints = 1 2 3\n[relation]\n[map]\npiece = [1, 2] -> 1\n[potential]\nlinear = 1\n"
      "[zeta]\nfamily = linear\nlambda = 0.5\n");
  EXPECT_NE(total.message().find("map is not total"), std::string::npos);

  const auto off_carrier = parse_error_of(
      "[space]\npoints = 2 3 4\n[relation]\n[map]\nimage = 2 -> 1\nimage = 3 -> 2\nimage = 4 -> 3\n"
      "[potential]\nlinear = 1\n[zeta]\nfamily = linear\nlambda = 0.5\n");
  EXPECT_NE(off_carrier.message().find("map is not total"), std::string::npos);

  std::string bad_lambda = problem_with("", "linear = 1");
  bad_lambda.replace(bad_lambda.find("lambda = 0.5"), 12, "lambda = 1");
  EXPECT_EQ(parse_error_of(bad_lambda).kind(), ErrorKind::semantic);
}

TEST(ProblemFile, SyntaxErrorsCarryLineAndColumn) {
  const auto e = parse_error_of("[space]\npoints = 1 2 x\n");
  EXPECT_EQ(e.kind(), ErrorKind::syntax);
  EXPECT_EQ(e.line(), 2);
  EXPECT_GT(e.column(), 0);
  EXPECT_EQ(std::string(e.what()).rfind("line 2:", 0), 0u);

  EXPECT_EQ(parse_error_of("[nope]\n").kind(), ErrorKind::syntax);
  EXPECT_EQ(parse_error_of("[space]\npoints 1 2\n").line(), 2);
  EXPECT_EQ(parse_error_of("[space]\npoints = 1\n[space]\n").line(), 3);
  EXPECT_EQ(parse_error_of("[space]\npoints = 1 2\n").kind(), ErrorKind::syntax);  // sections missing
  EXPECT_EQ(parse_error_of(problem_with("metric = cosine", "linear = 1")).line(), 4);
}

TEST(ProblemFile, PointReferences) {
  const auto coord = parse_point_ref("2.5");
  ASSERT_TRUE(coord.has_value());
  EXPECT_FALSE(coord->by_id);
  EXPECT_EQ(coord->coordinate, 2.5);
  const auto id = parse_point_ref("@3");
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(id->by_id);
  EXPECT_EQ(id->id, 3u);
  EXPECT_FALSE(parse_point_ref("three").has_value());
  EXPECT_EQ(format_point_ref(*id), "@3");

  const auto space = BMetricSpace::from_formula({1, 2, 3}, MetricKind::absolute_difference, 1.0);
  EXPECT_EQ(resolve_point(space, *parse_point_ref("3")), point_id(2));
  EXPECT_THROW((void)resolve_point(space, *parse_point_ref("@7")), ParseError);
  EXPECT_THROW((void)resolve_point(space, *parse_point_ref("2.5")), ParseError);
}

TEST(ProblemFile, RangeGridAndClosures) {
  const auto loaded = load_problem(
      "[space]\nrange = 0 1\nstep = 0.25\nsampled = true\n[relation]\npairs = (0, 0.25) (0.25, 0.5)\n"
      "close = transitive\nclose = symmetric\n[map]\npiece = [0, 1] -> 0\n[potential]\nlinear = 2\n"
      "[zeta]\nfamily = scaled\nlambda = 0.5\nmu = 2\n");
  EXPECT_EQ(loaded.problem.space.size(), 5u);
  EXPECT_TRUE(loaded.problem.space.sampled());
  // Symmetric closure first, then transitive: the three points become one
  // equivalence class.
  EXPECT_EQ(loaded.problem.relation.size(), 9u);
  EXPECT_EQ(loaded.problem.zeta.family(), ZetaFamily::scaled);
}

TEST(ProblemFile, SerializeFixtureRoundTrip) {
  const auto file = parse_problem(read_fixture("example-3-1.rfx"));
  const auto text = serialize_problem(file);
  EXPECT_EQ(parse_problem(text), file);
  EXPECT_EQ(serialize_problem(parse_problem(text)), text);
}

// Random valid problem files, built directly as ProblemFile values.
ProblemFile random_file(testing::Rng& rng) {
  ProblemFile f;
  f.name = "random-" + std::to_string(testing::uniform_size(rng, 0, 9999));
  const std::size_t n = testing::uniform_size(rng, 1, 8);
  std::vector<double> pts = testing::random_coordinates(rng, n);
  if (testing::coin(rng)) {
    for (auto& p : pts) p = p / 8.0 + 0.1;  // non-integer coordinates
  }
  f.space.points = pts;
  f.space.metric = testing::coin(rng) ? MetricKind::squared_difference : MetricKind::absolute_difference;
  f.space.s = f.space.metric == MetricKind::squared_difference ? 2.0 : 1.0 + 0.5 * static_cast<double>(testing::uniform_size(rng, 0, 2));
  f.space.complete = testing::coin(rng);
  f.space.sampled = testing::coin(rng, 0.2);

  auto ref = [&](std::size_t i) {
    PointRef r;
    if (testing::coin(rng)) {
      r.by_id = true;
      r.id = i;
    } else {
      r.coordinate = pts[i];
    }
    return r;
  };
  const std::size_t npairs = testing::uniform_size(rng, 0, 10);
  for (std::size_t k = 0; k < npairs; ++k) {
    f.relation.pairs.push_back({ref(testing::uniform_size(rng, 0, n - 1)), ref(testing::uniform_size(rng, 0, n - 1)), {}});
  }
  f.relation.close_symmetric = testing::coin(rng, 0.3);
  f.relation.close_transitive = testing::coin(rng, 0.3);

  if (testing::coin(rng)) {
    f.map.kind = MapBlock::Kind::table;
    for (std::size_t i = 0; i < n; ++i) f.map.images.push_back({ref(i), ref(testing::uniform_size(rng, 0, n - 1)), {}});
  } else {
    f.map.kind = MapBlock::Kind::piecewise;
    for (std::size_t i = 0; i < n; ++i) {
      PiecewiseRow row;
      row.lo = pts[i];
      row.hi = pts[i];
      row.image = ref(testing::uniform_size(rng, 0, n - 1));
      f.map.pieces.push_back(row);
    }
  }
  f.map.r_continuous = testing::coin(rng, 0.3);

  if (testing::coin(rng)) {
    f.potential.kind = PotentialBlock::Kind::linear;
    f.potential.coefficient = static_cast<double>(testing::uniform_size(rng, 0, 5));
  } else {
    f.potential.kind = PotentialBlock::Kind::table;
    for (std::size_t i = 0; i < n; ++i) {
      f.potential.values.push_back({ref(i), static_cast<double>(testing::uniform_size(rng, 0, 40)) / 4.0, {}});
    }
  }

  switch (testing::uniform_size(rng, 0, 2)) {
    case 0:
      f.zeta.family = ZetaFamily::linear;
      f.zeta.lambda = 0.125 * static_cast<double>(testing::uniform_size(rng, 1, 7));
      break;
    case 1:
      f.zeta.family = ZetaFamily::scaled;
      f.zeta.lambda = 0.5;
      f.zeta.mu = 0.75 + static_cast<double>(testing::uniform_size(rng, 0, 3));
      break;
    default:
      f.zeta.family = ZetaFamily::custom_table;
      f.zeta.entries = {{0, 0, 0}, {1, 2, 0.5}};
      break;
  }
  if (testing::coin(rng, 0.3)) f.zeta.grid = std::vector<double>{0.5, 1, 3};
  if (testing::coin(rng, 0.3)) f.zeta.limits = std::vector<double>{1, 2};

  if (testing::coin(rng)) f.solver.start = ref(testing::uniform_size(rng, 0, n - 1));
  if (testing::coin(rng, 0.3)) f.solver.tol = 1e-6;
  if (testing::coin(rng, 0.3)) f.solver.max_iter = testing::uniform_size(rng, 1, 100);
  f.solver.unsafe_start = testing::coin(rng, 0.2);
  if (testing::coin(rng, 0.3)) f.probes.push_back({ref(0), ref(n - 1), {}});
  return f;
}

TEST(ProblemFileProperty, RandomRoundTrip) {
  testing::Rng rng(0x5eed0008);
  for (int iter = 0; iter < 300; ++iter) {
    const ProblemFile f = random_file(rng);
    const std::string text = serialize_problem(f);
    ProblemFile back;
    ASSERT_NO_THROW(back = parse_problem(text)) << text;
    ASSERT_EQ(back, f) << text;
    ASSERT_EQ(serialize_problem(back), text);
    ASSERT_NO_THROW((void)build_problem(back)) << text;
  }
}

}  // namespace
}  // namespace relfix::io
