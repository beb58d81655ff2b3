#include "relfix/core/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace relfix {

std::string_view to_string(ZetaFamily family) noexcept {
  switch (family) {
    case ZetaFamily::linear: return "linear";
    case ZetaFamily::scaled: return "scaled";
    case ZetaFamily::custom_table: return "custom-table";
  }
  return "?";
}

std::string_view to_string(Sign sign) noexcept {
  switch (sign) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

SimulationFunction SimulationFunction::linear(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorKind::invalid_argument, fmt::format("linear zeta needs 0 < lambda < 1 (got {})", lambda));
  }
  SimulationFunction z;
  z.family_ = ZetaFamily::linear;
  z.lambda_ = lambda;
  z.mu_ = 1.0;
  return z;
}

SimulationFunction SimulationFunction::scaled(double lambda, double mu) {
  if (!(lambda > 0.0 && lambda < mu) || !std::isfinite(mu)) {
    throw Error(ErrorKind::invalid_argument,
                fmt::format("scaled zeta needs 0 < lambda < mu (got lambda={}, mu={})", lambda, mu));
  }
  SimulationFunction z;
  z.family_ = ZetaFamily::scaled;
  z.lambda_ = lambda;
  z.mu_ = mu;
  return z;
}

SimulationFunction SimulationFunction::custom_table(std::vector<ZetaTableEntry> entries) {
  if (entries.empty()) throw Error(ErrorKind::invalid_argument, "custom zeta table is empty");
  for (const auto& e : entries) {
    if (!(e.t >= 0.0) || !(e.s >= 0.0) || !std::isfinite(e.t) || !std::isfinite(e.s) || !std::isfinite(e.value)) {
      throw Error(ErrorKind::invalid_argument, "custom zeta entries need finite arguments in [0, inf)");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return std::tie(x.t, x.s) < std::tie(y.t, y.s); });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].t == entries[i - 1].t && entries[i].s == entries[i - 1].s) {
      throw Error(ErrorKind::invalid_argument, fmt::format("duplicate zeta entry at ({}, {})", entries[i].t, entries[i].s));
    }
  }
  SimulationFunction z;
  z.family_ = ZetaFamily::custom_table;
  z.table_ = std::move(entries);
  return z;
}

bool SimulationFunction::defined_at(double t, double s) const noexcept {
  if (!(t >= 0.0) || !(s >= 0.0)) return false;
  if (family_ != ZetaFamily::custom_table) return true;
  return std::any_of(table_.begin(), table_.end(), [&](const auto& e) { return e.t == t && e.s == s; });
}

double SimulationFunction::operator()(double t, double s) const {
  if (!(t >= 0.0) || !(s >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, fmt::format("zeta is defined on [0, inf)^2 (got ({}, {}))", t, s));
  }
  switch (family_) {
    case ZetaFamily::linear: return lambda_ * s - t;
    case ZetaFamily::scaled: return lambda_ * s - mu_ * t;
    case ZetaFamily::custom_table:
      for (const auto& e : table_) {
        if (e.t == t && e.s == s) return e.value;
      }
      throw Error(ErrorKind::invalid_argument, fmt::format("custom zeta has no entry at ({}, {})", t, s));
  }
  return 0.0;
}

double evaluate(const SimulationFunction& zeta, double t, double s) { return zeta(t, s); }

ZetaSampleSpec ZetaSampleSpec::defaults() {
  const std::vector<double> grid{0.1, 0.5, 1.0, 2.0, 4.0, 8.0};
  return {grid, grid, {1e4, 1e5, 1e6}};
}

ZetaSampleSpec ZetaSampleSpec::defaults_for(const SimulationFunction& zeta) {
  if (zeta.family() != ZetaFamily::custom_table) return defaults();
  std::vector<double> grid;
  for (const auto& e : zeta.table()) {
    grid.push_back(e.t);
    grid.push_back(e.s);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return {grid, grid, {1e4, 1e5, 1e6}};
}

ZetaAxiomReport check_zeta_axioms(const SimulationFunction& zeta, const ZetaSampleSpec& spec) {
  if (spec.grid.empty()) throw Error(ErrorKind::invalid_argument, "zeta sample grid is empty");
  ZetaAxiomReport report;
  report.sample_spec = spec;

  if (zeta.defined_at(0.0, 0.0)) {
    const double z00 = zeta(0.0, 0.0);
    report.zeta1_ok = z00 == 0.0;
    report.zeta1_note = fmt::format("zeta(0, 0) = {}", z00);
  } else {
    report.zeta1_ok = false;
    report.zeta1_note = "zeta(0, 0) is undefined";
  }

  for (double t : spec.grid) {
    for (double s : spec.grid) {
      if (!(t > 0.0 && s > 0.0)) continue;
      if (!zeta.defined_at(t, s)) {
        report.not_evaluated.push_back(fmt::format("zeta2 at ({}, {})", t, s));
        continue;
      }
      ++report.zeta2_samples;
      const double value = zeta(t, s);
      if (!(value < s - t)) report.zeta2_witnesses.push_back({t, s, value});
    }
  }
  report.zeta2_ok = report.zeta2_witnesses.empty();

  for (double c : spec.grid) {
    if (!(c > 0.0)) continue;
    const std::string name = fmt::format("constant c={}", c);
    if (!zeta.defined_at(c, c)) {
      report.not_evaluated.push_back("zeta3 " + name);
      continue;
    }
    ++report.zeta3_sequences;
    const double limsup = zeta(c, c);
    if (!(limsup < 0.0)) report.zeta3_witnesses.push_back({name, limsup});
  }
  for (double limit : spec.limits) {
    if (!(limit > 0.0)) continue;
    const std::string name = fmt::format("t_n=L(1+1/n), s_n=L(1-1/(2n)) L={}", limit);
    bool evaluable = !spec.tail_indices.empty();
    double limsup = -std::numeric_limits<double>::infinity();
    for (double n : spec.tail_indices) {
      const double t = limit * (1.0 + 1.0 / n);
      const double s = limit * (1.0 - 1.0 / (2.0 * n));
      if (!zeta.defined_at(t, s)) {
        evaluable = false;
        break;
      }
      limsup = std::max(limsup, zeta(t, s));
    }
    if (!evaluable) {
      report.not_evaluated.push_back("zeta3 " + name);
      continue;
    }
    ++report.zeta3_sequences;
    if (!(limsup < 0.0)) report.zeta3_witnesses.push_back({name, limsup});
  }
  report.zeta3_ok = report.zeta3_witnesses.empty();
  return report;
}

BSimulationBound check_b_simulation_inequality(double t, double s_arg, double s_coeff) {
  if (!(t >= 0.0) || !(s_arg >= 0.0)) throw Error(ErrorKind::invalid_argument, "distances must be nonnegative");
  if (!(s_coeff >= 1.0)) throw Error(ErrorKind::invalid_argument, "s >= 1 required");
  const double value = s_arg - s_coeff * t;
  const Sign sign = value < 0.0 ? Sign::negative : (value > 0.0 ? Sign::positive : Sign::zero);
  return {value, sign};
}

}  // namespace relfix
