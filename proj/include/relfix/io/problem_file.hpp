#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/core/contraction.hpp"
#include "relfix/core/simulation.hpp"

namespace relfix::io {

/// Source line of a parsed item. Compares equal to every other line so that
/// structural equality of problem files ignores layout.
struct SourceLine {
  int value = 0;
  friend bool operator==(const SourceLine&, const SourceLine&) noexcept { return true; }
};

/// A point named in a problem file: by coordinate ("3", "0.25") or by
/// dense id ("@2").
struct PointRef {
  bool by_id = false;
  double coordinate = 0.0;
  std::size_t id = 0;
  bool operator==(const PointRef&) const = default;
};

struct PairRef {
  PointRef first;
  PointRef second;
  SourceLine line;
  bool operator==(const PairRef&) const = default;
};

struct SpaceBlock {
  std::vector<double> points;  // explicit list, or empty when a range is used
  std::optional<double> range_lo;
  std::optional<double> range_hi;
  std::optional<double> step;
  MetricKind metric = MetricKind::squared_difference;
  std::vector<std::vector<double>> table_rows;
  double s = 1.0;
  bool complete = true;
  bool sampled = false;
  SourceLine line;
  bool operator==(const SpaceBlock&) const = default;
};

struct RelationBlock {
  std::vector<PairRef> pairs;
  bool close_symmetric = false;
  bool close_transitive = false;
  bool operator==(const RelationBlock&) const = default;
};

/// One interval row of a piecewise map: points in the interval map to `image`.
struct PiecewiseRow {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;
  PointRef image;
  SourceLine line;
  bool operator==(const PiecewiseRow&) const = default;
};

struct MapBlock {
  enum class Kind { table, piecewise };
  Kind kind = Kind::table;
  std::vector<PairRef> images;  // point -> image
  std::vector<PiecewiseRow> pieces;
  bool r_continuous = false;
  SourceLine line;
  bool operator==(const MapBlock&) const = default;
};

struct PotentialValue {
  PointRef point;
  double value = 0.0;
  SourceLine line;
  bool operator==(const PotentialValue&) const = default;
};

struct PotentialBlock {
  enum class Kind { table, linear };
  Kind kind = Kind::table;
  double coefficient = 0.0;  // phi(x) = coefficient * x
  std::vector<PotentialValue> values;
  SourceLine line;
  bool operator==(const PotentialBlock&) const = default;
};

struct ZetaBlock {
  ZetaFamily family = ZetaFamily::linear;
  double lambda = 0.0;
  double mu = 1.0;
  std::vector<ZetaTableEntry> entries;
  std::optional<std::vector<double>> grid;
  std::optional<std::vector<double>> limits;
  SourceLine line;
  bool operator==(const ZetaBlock&) const = default;
};

struct SolverBlock {
  std::optional<PointRef> start;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  bool unsafe_start = false;
  SourceLine line;
  bool operator==(const SolverBlock&) const = default;
};

/// Syntactic content of a problem file. Serializing and re-parsing yields an
/// equal value.
struct ProblemFile {
  std::string name;
  SpaceBlock space;
  RelationBlock relation;
  MapBlock map;
  PotentialBlock potential;
  ZetaBlock zeta;
  SolverBlock solver;
  std::vector<PairRef> probes;
  bool operator==(const ProblemFile&) const = default;
};

/// Error with a 1-based line (and column when known) in the problem text.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// A problem file resolved against its own point table.
struct LoadedProblem {
  ProblemFile file;
  ContractionProblem problem;
  ZetaSampleSpec zeta_samples;
  std::optional<PointId> start;
  std::optional<double> solver_tol;
  std::optional<std::size_t> max_iter;
  bool unsafe_start = false;
  std::vector<PointPair> probes;
};

/// Syntax and semantic validation; throws ParseError on the first problem.
ProblemFile parse_problem(std::string_view text);

/// Resolves point references, closures and formulas into a ContractionProblem.
/// Throws ParseError(semantic) naming the violated invariant.
LoadedProblem build_problem(const ProblemFile& file);

LoadedProblem load_problem(std::string_view text);

std::string serialize_problem(const ProblemFile& file);

/// Throws ParseError(semantic) when the reference names no point.
PointId resolve_point(const BMetricSpace& space, const PointRef& ref, int line = 0);

/// Parses a point reference as written on the command line ("3", "@2").
std::optional<PointRef> parse_point_ref(std::string_view token);
std::string format_point_ref(const PointRef& ref);

}  // namespace relfix::io
