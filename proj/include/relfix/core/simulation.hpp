#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relfix/core/types.hpp"

namespace relfix {

enum class ZetaFamily { linear, scaled, custom_table };

std::string_view to_string(ZetaFamily family) noexcept;

struct ZetaTableEntry {
  double t;
  double s;
  double value;
  bool operator==(const ZetaTableEntry&) const = default;
};

/// A candidate simulation function zeta(t, s).
///
///   linear        zeta = lambda * s - t,       0 < lambda < 1
///   scaled        zeta = lambda * s - mu * t,  0 < lambda < mu
///   custom-table  explicit values on a finite set of (t, s) arguments
///
/// The family invariants are enforced at construction; the simulation
/// axioms are not (see check_zeta_axioms).
class SimulationFunction {
 public:
  static SimulationFunction linear(double lambda);
  static SimulationFunction scaled(double lambda, double mu);
  static SimulationFunction custom_table(std::vector<ZetaTableEntry> entries);

  ZetaFamily family() const noexcept { return family_; }
  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }
  const std::vector<ZetaTableEntry>& table() const noexcept { return table_; }

  /// Throws Error(invalid_argument) on negative arguments and, for tables,
  /// on arguments without an entry.
  double operator()(double t, double s) const;
  bool defined_at(double t, double s) const noexcept;

 private:
  SimulationFunction() = default;

  ZetaFamily family_ = ZetaFamily::linear;
  double lambda_ = 0.0;
  double mu_ = 1.0;
  std::vector<ZetaTableEntry> table_;
};

double evaluate(const SimulationFunction& zeta, double t, double s);

/// Sample points used by the sampled axiom checks. A passing report is only
/// evidence relative to these samples.
struct ZetaSampleSpec {
  std::vector<double> grid;             // t and s values for zeta2; constants for zeta3
  std::vector<double> limits;           // limits L of the convergent zeta3 sequences
  std::vector<double> tail_indices;     // n at which sequence terms are evaluated

  static ZetaSampleSpec defaults();
  /// Defaults for catalog families; the table's own arguments for custom tables.
  static ZetaSampleSpec defaults_for(const SimulationFunction& zeta);
};

struct Zeta2Witness {
  double t;
  double s;
  double value;  // zeta(t, s), not below s - t
};

struct Zeta3Witness {
  std::string sequence;  // e.g. "constant c=1" or "t_n=L(1+1/n), s_n=L(1-1/(2n)) L=2"
  double limsup_estimate;
};

struct ZetaAxiomReport {
  bool zeta1_ok = false;  // exact
  std::string zeta1_note;
  bool zeta2_ok = true;   // sampled
  std::vector<Zeta2Witness> zeta2_witnesses;
  bool zeta3_ok = true;   // sampled sequence families
  std::vector<Zeta3Witness> zeta3_witnesses;
  std::size_t zeta2_samples = 0;
  std::size_t zeta3_sequences = 0;
  std::vector<std::string> not_evaluated;  // samples outside a custom table's support
  ZetaSampleSpec sample_spec;
  static constexpr std::string_view caveat =
      "zeta2 and zeta3 are sampled: a pass is evidence relative to sample_spec, not a proof";

  bool all_ok() const noexcept { return zeta1_ok && zeta2_ok && zeta3_ok; }
};

ZetaAxiomReport check_zeta_axioms(const SimulationFunction& zeta, const ZetaSampleSpec& spec);

enum class Sign { negative, zero, positive };
std::string_view to_string(Sign sign) noexcept;

struct BSimulationBound {
  double value;  // s_arg - s_coeff * t
  Sign sign;
};

/// The b-simulation bound s_arg - s_coeff * t. A b-simulation function must
/// satisfy zeta(s_coeff * t, s_arg) < s_arg - s_coeff * t, so a negative bound
/// rules out any nonnegative zeta value at that argument.
BSimulationBound check_b_simulation_inequality(double t, double s_arg, double s_coeff);

}  // namespace relfix
