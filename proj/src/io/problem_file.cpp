#include "relfix/io/problem_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <set>

namespace relfix::io {

ParseError::ParseError(ErrorKind kind, int line, int column, const std::string& message)
    : Error(kind, column > 0 ? fmt::format("line {}:{}: {}", line, column, message)
                             : (line > 0 ? fmt::format("line {}: {}", line, message) : message)),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

[[noreturn]] void semantic(int line, const std::string& message) {
  throw ParseError(ErrorKind::semantic, line, 0, message);
}

/// Cursor over one value string, reporting columns relative to the line.
class Scanner {
 public:
  Scanner(std::string_view text, int line, int column0) : text_(text), line_(line), column0_(column0) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorKind::syntax, line_, column0_ + static_cast<int>(pos_), message);
  }
  void expect(char c) {
    if (peek() != c) fail(fmt::format("expected '{}'", c));
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect_arrow() {
    skip_space();
    if (text_.substr(pos_, 2) != "->") fail("expected '->'");
    pos_ += 2;
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != ',' &&
           text_[pos_] != ')' && text_[pos_] != ']' && text_[pos_] != '(' && text_[pos_] != '[') {
      if (text_.substr(pos_, 2) == "->") break;
      ++pos_;
    }
    if (start == pos_) fail("expected a value");
    return text_.substr(start, pos_ - start);
  }
  double number() {
    skip_space();
    const std::size_t start = pos_;
    const std::string_view w = word();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || ptr != w.data() + w.size() || !std::isfinite(v)) {
      pos_ = start;
      fail(fmt::format("'{}' is not a finite number", w));
    }
    return v;
  }
  std::size_t count() {
    skip_space();
    const std::size_t start = pos_;
    const std::string_view w = word();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || ptr != w.data() + w.size()) {
      pos_ = start;
      fail(fmt::format("'{}' is not a nonnegative integer", w));
    }
    return v;
  }
  PointRef point() {
    if (accept('@')) return PointRef{true, 0.0, count()};
    return PointRef{false, number(), 0};
  }
  PairRef pair() {
    expect('(');
    PairRef p;
    p.first = point();
    expect(',');
    p.second = point();
    expect(')');
    p.line.value = line_;
    return p;
  }
  bool boolean() {
    const std::string_view w = word();
    if (w == "true") return true;
    if (w == "false") return false;
    fail(fmt::format("expected true or false, got '{}'", w));
  }
  void finish() {
    if (!done()) fail("unexpected trailing text");
  }

 private:
  std::string_view text_;
  int line_;
  int column0_;
  std::size_t pos_ = 0;
};

std::vector<double> number_list(Scanner& sc) {
  std::vector<double> out;
  while (!sc.done()) out.push_back(sc.number());
  if (out.empty()) sc.fail("expected at least one number");
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

enum class Section { top, space, relation, map, potential, zeta, solver, probe };

std::optional<Section> section_named(std::string_view name) {
  if (name == "space") return Section::space;
  if (name == "relation") return Section::relation;
  if (name == "map") return Section::map;
  if (name == "potential") return Section::potential;
  if (name == "zeta") return Section::zeta;
  if (name == "solver") return Section::solver;
  if (name == "probe") return Section::probe;
  return std::nullopt;
}

struct Seen {
  std::set<std::string> keys;
  std::set<Section> sections;
};

void parse_entry(ProblemFile& file, Section section, std::string_view key, Scanner& sc, int line, Seen& seen,
                 int key_column) {
  const auto key_error = [&](const std::string& message) {
    throw ParseError(ErrorKind::syntax, line, key_column, message);
  };
  const std::set<std::string_view> repeatable{"row", "pairs", "close", "piece", "image", "value", "entry", "pair"};
  const std::string qualified = fmt::format("{}.{}", static_cast<int>(section), key);
  if (!repeatable.count(key) && !seen.keys.insert(qualified).second) key_error(fmt::format("duplicate key '{}'", key));

  switch (section) {
    case Section::top:
      if (key != "name") key_error(fmt::format("unknown top-level key '{}'", key));
      file.name = std::string(sc.word());
      break;

    case Section::space: {
      auto& sp = file.space;
      if (key == "points") {
        sp.points = number_list(sc);
      } else if (key == "range") {
        sp.range_lo = sc.number();
        sp.range_hi = sc.number();
      } else if (key == "step") {
        sp.step = sc.number();
      } else if (key == "metric") {
        const auto w = sc.word();
        const auto kind = parse_metric_kind(w);
        if (!kind) sc.fail(fmt::format("unknown metric '{}'", w));
        sp.metric = *kind;
      } else if (key == "row") {
        sp.table_rows.push_back(number_list(sc));
      } else if (key == "s") {
        sp.s = sc.number();
        if (!(sp.s >= 1.0)) semantic(line, fmt::format("s >= 1 required (got {})", sp.s));
      } else if (key == "complete") {
        sp.complete = sc.boolean();
      } else if (key == "sampled") {
        sp.sampled = sc.boolean();
      } else {
        key_error(fmt::format("unknown key '{}' in [space]", key));
      }
      break;
    }

    case Section::relation:
      if (key == "pairs") {
        do {
          file.relation.pairs.push_back(sc.pair());
        } while (!sc.done());
      } else if (key == "close") {
        const auto w = sc.word();
        if (w == "symmetric") {
          file.relation.close_symmetric = true;
        } else if (w == "transitive") {
          file.relation.close_transitive = true;
        } else {
          sc.fail(fmt::format("unknown closure '{}' (symmetric or transitive)", w));
        }
      } else {
        key_error(fmt::format("unknown key '{}' in [relation]", key));
      }
      break;

    case Section::map:
      if (key == "piece") {
        PiecewiseRow row;
        if (sc.accept('[')) {
          row.lo_closed = true;
        } else {
          sc.expect('(');
          row.lo_closed = false;
        }
        row.lo = sc.number();
        sc.expect(',');
        row.hi = sc.number();
        if (sc.accept(']')) {
          row.hi_closed = true;
        } else {
          sc.expect(')');
          row.hi_closed = false;
        }
        sc.expect_arrow();
        row.image = sc.point();
        row.line.value = line;
        if (row.hi < row.lo) semantic(line, "interval upper end is below its lower end");
        file.map.pieces.push_back(row);
      } else if (key == "image") {
        PairRef p;
        p.first = sc.point();
        sc.expect_arrow();
        p.second = sc.point();
        p.line.value = line;
        file.map.images.push_back(p);
      } else if (key == "r-continuous") {
        file.map.r_continuous = sc.boolean();
      } else {
        key_error(fmt::format("unknown key '{}' in [map]", key));
      }
      break;

    case Section::potential:
      if (key == "linear") {
        file.potential.kind = PotentialBlock::Kind::linear;
        file.potential.coefficient = sc.number();
      } else if (key == "value") {
        PotentialValue v;
        v.point = sc.point();
        sc.expect_arrow();
        v.value = sc.number();
        v.line.value = line;
        if (v.value < 0.0) {
          semantic(line, fmt::format("potential must map into the codomain [0, inf) (got {})", v.value));
        }
        file.potential.values.push_back(v);
      } else {
        key_error(fmt::format("unknown key '{}' in [potential]", key));
      }
      break;

    case Section::zeta:
      if (key == "family") {
        const auto w = sc.word();
        if (w == "linear") {
          file.zeta.family = ZetaFamily::linear;
        } else if (w == "scaled") {
          file.zeta.family = ZetaFamily::scaled;
        } else if (w == "custom-table") {
          file.zeta.family = ZetaFamily::custom_table;
        } else {
          sc.fail(fmt::format("unknown zeta family '{}'", w));
        }
      } else if (key == "lambda") {
        file.zeta.lambda = sc.number();
      } else if (key == "mu") {
        file.zeta.mu = sc.number();
      } else if (key == "entry") {
        ZetaTableEntry e{};
        e.t = sc.number();
        e.s = sc.number();
        sc.expect_arrow();
        e.value = sc.number();
        file.zeta.entries.push_back(e);
      } else if (key == "grid") {
        file.zeta.grid = number_list(sc);
      } else if (key == "limits") {
        file.zeta.limits = number_list(sc);
      } else {
        key_error(fmt::format("unknown key '{}' in [zeta]", key));
      }
      break;

    case Section::solver:
      if (key == "start") {
        file.solver.start = sc.point();
      } else if (key == "tol") {
        file.solver.tol = sc.number();
        if (*file.solver.tol < 0.0) semantic(line, "solver tolerance must be nonnegative");
      } else if (key == "max-iter") {
        file.solver.max_iter = sc.count();
        if (*file.solver.max_iter == 0) semantic(line, "max-iter must be positive");
      } else if (key == "unsafe-start") {
        file.solver.unsafe_start = sc.boolean();
      } else {
        key_error(fmt::format("unknown key '{}' in [solver]", key));
      }
      break;

    case Section::probe:
      if (key != "pair") key_error(fmt::format("unknown key '{}' in [probe]", key));
      file.probes.push_back(sc.pair());
      break;
  }
  sc.finish();
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile file;
  Section section = Section::top;
  Seen seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const int indent = static_cast<int>(raw.find_first_not_of(" \t")) + 1;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(ErrorKind::syntax, line_no, indent, "unterminated section header");
      const auto name = trim(line.substr(1, line.size() - 2));
      const auto sec = section_named(name);
      if (!sec) throw ParseError(ErrorKind::syntax, line_no, indent + 1, fmt::format("unknown section '{}'", name));
      if (!seen.sections.insert(*sec).second) {
        throw ParseError(ErrorKind::syntax, line_no, indent, fmt::format("duplicate section [{}]", name));
      }
      section = *sec;
      switch (section) {
        case Section::space: file.space.line.value = line_no; break;
        case Section::map: file.map.line.value = line_no; break;
        case Section::potential: file.potential.line.value = line_no; break;
        case Section::zeta: file.zeta.line.value = line_no; break;
        case Section::solver: file.solver.line.value = line_no; break;
        default: break;
      }
      if (eol == text.size()) break;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(ErrorKind::syntax, line_no, indent, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ParseError(ErrorKind::syntax, line_no, indent, "missing key before '='");
    const std::string_view value = line.substr(eq + 1);
    Scanner sc(value, line_no, indent + static_cast<int>(eq) + 1);
    parse_entry(file, section, key, sc, line_no, seen, indent);
    if (eol == text.size()) break;
  }

  for (auto [sec, name] : {std::pair{Section::space, "space"}, std::pair{Section::map, "map"},
                           std::pair{Section::potential, "potential"}, std::pair{Section::zeta, "zeta"}}) {
    if (!seen.sections.count(sec)) throw ParseError(ErrorKind::syntax, line_no, 0, fmt::format("missing [{}] section", name));
  }
  if (!file.map.pieces.empty() && !file.map.images.empty()) {
    semantic(file.map.line.value, "map mixes 'piece' and 'image' rows");
  }
  file.map.kind = file.map.pieces.empty() ? MapBlock::Kind::table : MapBlock::Kind::piecewise;
  if (file.potential.kind == PotentialBlock::Kind::linear && !file.potential.values.empty()) {
    semantic(file.potential.line.value, "potential mixes 'linear' and 'value' rows");
  }

  build_problem(file);  // semantic validation
  return file;
}

PointId resolve_point(const BMetricSpace& space, const PointRef& ref, int line) {
  if (ref.by_id) {
    if (ref.id >= space.size()) semantic(line, fmt::format("point @{} does not exist ({} points)", ref.id, space.size()));
    return point_id(ref.id);
  }
  const auto p = space.find(ref.coordinate);
  if (!p) semantic(line, fmt::format("{} is not a point of the space", ref.coordinate));
  return *p;
}

namespace {

BMetricSpace build_space(const SpaceBlock& sp) {
  const int line = sp.line.value;
  std::vector<double> coords = sp.points;
  const bool has_range = sp.range_lo || sp.range_hi || sp.step;
  if (has_range) {
    if (!coords.empty()) semantic(line, "give either 'points' or 'range' with 'step', not both");
    if (!sp.range_lo || !sp.step) semantic(line, "'range' needs a matching 'step'");
    if (!(*sp.step > 0.0)) semantic(line, "grid step must be positive");
    const double lo = *sp.range_lo;
    const double hi = *sp.range_hi;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / *sp.step + 1e-9)) + 1;
    if (count > 100000) semantic(line, "grid has more than 100000 points");
    for (std::size_t k = 0; k < count; ++k) coords.push_back(lo + static_cast<double>(k) * *sp.step);
  }
  if (coords.empty()) semantic(line, "space has no points");
  {
    auto sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) semantic(line, "points must be distinct");
  }
  if (!(sp.s >= 1.0)) semantic(line, fmt::format("s >= 1 required (got {})", sp.s));

  try {
    BMetricSpace space = [&] {
      if (sp.metric == MetricKind::table) {
        if (sp.table_rows.size() != coords.size()) {
          semantic(line, fmt::format("table metric needs {} rows (got {})", coords.size(), sp.table_rows.size()));
        }
        std::vector<double> flat;
        for (const auto& row : sp.table_rows) {
          if (row.size() != coords.size()) semantic(line, fmt::format("table rows need {} entries", coords.size()));
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return BMetricSpace::from_table(coords, flat, sp.s);
      }
      if (!sp.table_rows.empty()) semantic(line, "'row' entries need metric = table");
      return BMetricSpace::from_formula(coords, sp.metric, sp.s);
    }();
    space.declare_complete(sp.complete);
    space.mark_sampled(sp.sampled);
    return space;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    semantic(line, e.what());
  }
}

bool in_piece(const PiecewiseRow& row, double x) {
  const bool above = row.lo_closed ? x >= row.lo : x > row.lo;
  const bool below = row.hi_closed ? x <= row.hi : x < row.hi;
  return above && below;
}

SelfMap build_map(const MapBlock& mb, const BMetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::optional<PointId>> images(n);
  if (mb.kind == MapBlock::Kind::piecewise) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = space.coordinate(point_id(i));
      const PiecewiseRow* hit = nullptr;
      for (const auto& row : mb.pieces) {
        if (!in_piece(row, x)) continue;
        if (hit) semantic(row.line.value, fmt::format("point {} lies in two map intervals", x));
        hit = &row;
      }
      if (!hit) semantic(mb.line.value, fmt::format("map is not total: no interval contains point {}", x));
      if (!hit->image.by_id && !space.find(hit->image.coordinate)) {
        semantic(hit->line.value, fmt::format("map is not total on the carrier: image {} of point {} is not a point "
                                              "of the space",
                                              hit->image.coordinate, x));
      }
      images[i] = resolve_point(space, hit->image, hit->line.value);
    }
  } else {
    for (const auto& entry : mb.images) {
      const PointId from = resolve_point(space, entry.first, entry.line.value);
      if (images[index(from)]) {
        semantic(entry.line.value, fmt::format("point {} has two images", space.coordinate(from)));
      }
      if (!entry.second.by_id && !space.find(entry.second.coordinate)) {
        semantic(entry.line.value, fmt::format("map is not total on the carrier: image {} of point {} is not a point "
                                               "of the space",
                                               entry.second.coordinate, space.coordinate(from)));
      }
      images[index(from)] = resolve_point(space, entry.second, entry.line.value);
    }
  }
  std::vector<PointId> table;
  for (std::size_t i = 0; i < n; ++i) {
    if (!images[i]) {
      semantic(mb.line.value, fmt::format("map is not total: point {} has no image", space.coordinate(point_id(i))));
    }
    table.push_back(*images[i]);
  }
  return SelfMap(std::move(table), mb.r_continuous);
}

Potential build_potential(const PotentialBlock& pb, const BMetricSpace& space) {
  std::vector<double> values(space.size(), 0.0);
  if (pb.kind == PotentialBlock::Kind::linear) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      values[i] = pb.coefficient * space.coordinate(point_id(i));
      if (!(values[i] >= 0.0)) {
        semantic(pb.line.value, fmt::format("potential must map into the codomain [0, inf): phi({}) = {}",
                                            space.coordinate(point_id(i)), values[i]));
      }
    }
    return Potential(std::move(values));
  }
  std::vector<bool> given(space.size(), false);
  for (const auto& v : pb.values) {
    const PointId p = resolve_point(space, v.point, v.line.value);
    if (given[index(p)]) semantic(v.line.value, fmt::format("potential given twice at {}", space.coordinate(p)));
    if (!(v.value >= 0.0)) {
      semantic(v.line.value, fmt::format("potential must map into the codomain [0, inf) (got {})", v.value));
    }
    given[index(p)] = true;
    values[index(p)] = v.value;
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!given[i]) {
      semantic(pb.line.value, fmt::format("potential has no value at point {}", space.coordinate(point_id(i))));
    }
  }
  return Potential(std::move(values));
}

SimulationFunction build_zeta(const ZetaBlock& zb) {
  try {
    switch (zb.family) {
      case ZetaFamily::linear: return SimulationFunction::linear(zb.lambda);
      case ZetaFamily::scaled: return SimulationFunction::scaled(zb.lambda, zb.mu);
      case ZetaFamily::custom_table: return SimulationFunction::custom_table(zb.entries);
    }
  } catch (const Error& e) {
    semantic(zb.line.value, e.what());
  }
  semantic(zb.line.value, "unknown zeta family");
}

}  // namespace

LoadedProblem build_problem(const ProblemFile& file) {
  BMetricSpace space = build_space(file.space);
  BinaryRelation relation(space.size());
  for (const auto& p : file.relation.pairs) {
    relation.insert(resolve_point(space, p.first, p.line.value), resolve_point(space, p.second, p.line.value));
  }
  if (file.relation.close_symmetric) relation = symmetric_closure(relation);
  if (file.relation.close_transitive) relation = transitive_closure(relation);
  SelfMap map = build_map(file.map, space);
  Potential potential = build_potential(file.potential, space);
  SimulationFunction zeta = build_zeta(file.zeta);

  LoadedProblem out{file,
                    ContractionProblem{std::move(space), std::move(relation), std::move(map), std::move(potential),
                                       std::move(zeta)},
                    {},
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    false,
                    {}};
  const auto& sp = out.problem.space;
  out.zeta_samples = ZetaSampleSpec::defaults_for(out.problem.zeta);
  if (file.zeta.grid) out.zeta_samples.grid = *file.zeta.grid;
  if (file.zeta.limits) {
    out.zeta_samples.limits = *file.zeta.limits;
  } else if (file.zeta.grid) {
    out.zeta_samples.limits = *file.zeta.grid;
  }
  if (file.solver.start) out.start = resolve_point(sp, *file.solver.start, file.solver.line.value);
  out.solver_tol = file.solver.tol;
  out.max_iter = file.solver.max_iter;
  out.unsafe_start = file.solver.unsafe_start;
  for (const auto& p : file.probes) {
    out.probes.emplace_back(resolve_point(sp, p.first, p.line.value), resolve_point(sp, p.second, p.line.value));
  }
  return out;
}

LoadedProblem load_problem(std::string_view text) { return build_problem(parse_problem(text)); }

std::optional<PointRef> parse_point_ref(std::string_view token) {
  try {
    Scanner sc(token, 0, 0);
    PointRef ref = sc.point();
    sc.finish();
    return ref;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::string format_point_ref(const PointRef& ref) {
  return ref.by_id ? fmt::format("@{}", ref.id) : fmt::format("{}", ref.coordinate);
}

namespace {

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += fmt::format("{}{}", i ? " " : "", values[i]);
  return out;
}

std::string format_pair(const PairRef& p) {
  return fmt::format("({}, {})", format_point_ref(p.first), format_point_ref(p.second));
}

}  // namespace

std::string serialize_problem(const ProblemFile& file) {
  std::string out;
  auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };
  if (!file.name.empty()) line(fmt::format("name = {}", file.name));

  line("\n[space]");
  const auto& sp = file.space;
  if (!sp.points.empty()) line("points = " + join(sp.points));
  if (sp.range_lo && sp.range_hi) line(fmt::format("range = {} {}", *sp.range_lo, *sp.range_hi));
  if (sp.step) line(fmt::format("step = {}", *sp.step));
  line(fmt::format("metric = {}", to_string(sp.metric)));
  for (const auto& row : sp.table_rows) line("row = " + join(row));
  line(fmt::format("s = {}", sp.s));
  line(fmt::format("complete = {}", sp.complete));
  line(fmt::format("sampled = {}", sp.sampled));

  line("\n[relation]");
  for (const auto& p : file.relation.pairs) line("pairs = " + format_pair(p));
  if (file.relation.close_symmetric) line("close = symmetric");
  if (file.relation.close_transitive) line("close = transitive");

  line("\n[map]");
  for (const auto& row : file.map.pieces) {
    line(fmt::format("piece = {}{}, {}{} -> {}", row.lo_closed ? '[' : '(', row.lo, row.hi, row.hi_closed ? ']' : ')',
                     format_point_ref(row.image)));
  }
  for (const auto& p : file.map.images) {
    line(fmt::format("image = {} -> {}", format_point_ref(p.first), format_point_ref(p.second)));
  }
  line(fmt::format("r-continuous = {}", file.map.r_continuous));

  line("\n[potential]");
  if (file.potential.kind == PotentialBlock::Kind::linear) {
    line(fmt::format("linear = {}", file.potential.coefficient));
  } else {
    for (const auto& v : file.potential.values) line(fmt::format("value = {} -> {}", format_point_ref(v.point), v.value));
  }

  line("\n[zeta]");
  const auto& z = file.zeta;
  line(fmt::format("family = {}", to_string(z.family)));
  if (z.family != ZetaFamily::custom_table) line(fmt::format("lambda = {}", z.lambda));
  if (z.family == ZetaFamily::scaled) line(fmt::format("mu = {}", z.mu));
  for (const auto& e : z.entries) line(fmt::format("entry = {} {} -> {}", e.t, e.s, e.value));
  if (z.grid) line("grid = " + join(*z.grid));
  if (z.limits) line("limits = " + join(*z.limits));

  const auto& sv = file.solver;
  if (sv.start || sv.tol || sv.max_iter || sv.unsafe_start) {
    line("\n[solver]");
    if (sv.start) line("start = " + format_point_ref(*sv.start));
    if (sv.tol) line(fmt::format("tol = {}", *sv.tol));
    if (sv.max_iter) line(fmt::format("max-iter = {}", *sv.max_iter));
    if (sv.unsafe_start) line("unsafe-start = true");
  }
  if (!file.probes.empty()) {
    line("\n[probe]");
    for (const auto& p : file.probes) line("pair = " + format_pair(p));
  }
  return out;
}

}  // namespace relfix::io
