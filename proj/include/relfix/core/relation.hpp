#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relfix/core/bmetric.hpp"
#include "relfix/core/self_map.hpp"
#include "relfix/core/types.hpp"

namespace relfix {

/// Finite binary relation over the points 0..n-1 of a space.
/// Pairs are kept sorted and unique; membership is O(1).
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t universe) : universe_(universe), adjacency_(universe * universe, 0) {}
  BinaryRelation(std::size_t universe, std::span<const PointPair> pairs);

  static BinaryRelation full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  std::span<const PointPair> pairs() const noexcept { return pairs_; }

  bool contains(PointId a, PointId b) const;
  void insert(PointId a, PointId b);

  /// Successors of `a` in ascending id order.
  std::vector<PointId> successors(PointId a) const;

  bool operator==(const BinaryRelation& other) const { return universe_ == other.universe_ && pairs_ == other.pairs_; }

 private:
  void check(PointId p) const;

  std::size_t universe_ = 0;
  std::vector<char> adjacency_;
  std::vector<PointPair> pairs_;
};

/// True iff (a, b) is in R. Ids must be inside the relation's universe.
bool related(const BinaryRelation& r, PointId a, PointId b);

BinaryRelation symmetric_closure(const BinaryRelation& r);
BinaryRelation transitive_closure(const BinaryRelation& r);

struct RelatedTriple {
  PointId a;
  PointId b;
  PointId c;
  bool operator==(const RelatedTriple&) const = default;
};

template <typename Witness>
struct PropertyCheck {
  bool holds = true;
  std::vector<Witness> witnesses;
};

/// Witnesses are (a, b, c) with (a,b), (b,c) in R and (a,c) not in R.
PropertyCheck<RelatedTriple> is_transitive(const BinaryRelation& r);

/// Completeness over distinct pairs: witnesses are unordered pairs (a < b)
/// related in neither direction. Reflexive pairs are not required.
PropertyCheck<PointPair> is_complete(const BinaryRelation& r);

/// Witnesses are pairs (a, b) in R whose image (Fa, Fb) is not in R.
PropertyCheck<PointPair> is_f_closed(const BinaryRelation& r, const SelfMap& map);

struct DirectedPair {
  PointId a;
  PointId b;
  std::optional<PointId> common_successor;  // smallest eta with (a,eta), (b,eta) in R
};

struct DirectedCheck {
  bool holds = true;
  std::vector<DirectedPair> pairs;  // every unordered pair of D, including a = b
  std::vector<PointPair> witnesses;
};

DirectedCheck is_r_directed(std::span<const PointId> subset, const BinaryRelation& r);

struct Path {
  std::vector<PointId> nodes;
  std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
  bool operator==(const Path&) const = default;
};

/// Shortest path of length in [1, max_len] from source to target. Among
/// shortest paths the lexicographically smallest node sequence is chosen.
std::optional<Path> find_path(const BinaryRelation& r, PointId source, PointId target, std::size_t max_len);
std::optional<Path> find_path(const BinaryRelation& r, PointId source, PointId target);

enum class Decision { holds, fails, not_applicable };
std::string_view to_string(Decision d) noexcept;

struct BdSelfClosedCheck {
  Decision decision = Decision::not_applicable;
  std::string justification;
};

/// Decides b-d-self-closedness when the carrier has a positive minimal gap
/// (every finite carrier that is not flagged as a continuum sample).
BdSelfClosedCheck check_bd_self_closed(const BMetricSpace& space, const BinaryRelation& r);

/// Order-theoretic diagnostics. Witnesses: reflexive -> points without a
/// loop; irreflexive -> points with a loop; symmetric -> pairs whose reverse
/// is missing; antisymmetric -> pairs (a < b) related both ways.
struct OrderDiagnostics {
  PropertyCheck<PointId> reflexive;
  PropertyCheck<PointId> irreflexive;
  PropertyCheck<PointPair> symmetric;
  PropertyCheck<PointPair> antisymmetric;
};

OrderDiagnostics order_diagnostics(const BinaryRelation& r);

struct RelationReport {
  PropertyCheck<RelatedTriple> transitive;
  PropertyCheck<PointPair> complete;
  PropertyCheck<PointPair> f_closed;
  BdSelfClosedCheck bd_self_closed;
  OrderDiagnostics order;
  static constexpr std::string_view completeness_convention =
      "completeness is checked over distinct pairs; reflexive pairs are not required";
};

RelationReport relation_report(const BMetricSpace& space, const BinaryRelation& r, const SelfMap& map);

}  // namespace relfix
