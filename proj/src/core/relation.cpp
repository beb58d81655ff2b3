#include "relfix/core/relation.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace relfix {

BinaryRelation::BinaryRelation(std::size_t universe, std::span<const PointPair> pairs) : BinaryRelation(universe) {
  for (const auto& [a, b] : pairs) insert(a, b);
}

BinaryRelation BinaryRelation::full(std::size_t universe) {
  BinaryRelation r(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    for (std::size_t j = 0; j < universe; ++j) r.insert(point_id(i), point_id(j));
  }
  return r;
}

void BinaryRelation::check(PointId p) const {
  if (index(p) >= universe_) {
    throw Error(ErrorKind::unknown_point, "relation endpoint " + std::to_string(index(p)) + " is not a point");
  }
}

bool BinaryRelation::contains(PointId a, PointId b) const {
  check(a);
  check(b);
  return adjacency_[index(a) * universe_ + index(b)] != 0;
}

void BinaryRelation::insert(PointId a, PointId b) {
  check(a);
  check(b);
  char& cell = adjacency_[index(a) * universe_ + index(b)];
  if (cell) return;
  cell = 1;
  const PointPair p{a, b};
  pairs_.insert(std::lower_bound(pairs_.begin(), pairs_.end(), p), p);
}

std::vector<PointId> BinaryRelation::successors(PointId a) const {
  check(a);
  std::vector<PointId> out;
  for (std::size_t j = 0; j < universe_; ++j) {
    if (adjacency_[index(a) * universe_ + j]) out.push_back(point_id(j));
  }
  return out;
}

bool related(const BinaryRelation& r, PointId a, PointId b) { return r.contains(a, b); }

BinaryRelation symmetric_closure(const BinaryRelation& r) {
  BinaryRelation out = r;
  for (const auto& [a, b] : r.pairs()) out.insert(b, a);
  return out;
}

BinaryRelation transitive_closure(const BinaryRelation& r) {
  const std::size_t n = r.universe();
  std::vector<char> reach(n * n, 0);
  for (const auto& [a, b] : r.pairs()) reach[index(a) * n + index(b)] = 1;
  // Warshall
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k * n + j]) reach[i * n + j] = 1;
      }
    }
  }
  BinaryRelation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i * n + j]) out.insert(point_id(i), point_id(j));
    }
  }
  return out;
}

PropertyCheck<RelatedTriple> is_transitive(const BinaryRelation& r) {
  PropertyCheck<RelatedTriple> out;
  for (const auto& [a, b] : r.pairs()) {
    for (PointId c : r.successors(b)) {
      if (!r.contains(a, c)) out.witnesses.push_back({a, b, c});
    }
  }
  out.holds = out.witnesses.empty();
  return out;
}

PropertyCheck<PointPair> is_complete(const BinaryRelation& r) {
  PropertyCheck<PointPair> out;
  for (std::size_t i = 0; i < r.universe(); ++i) {
    for (std::size_t j = i + 1; j < r.universe(); ++j) {
      if (!r.contains(point_id(i), point_id(j)) && !r.contains(point_id(j), point_id(i))) {
        out.witnesses.emplace_back(point_id(i), point_id(j));
      }
    }
  }
  out.holds = out.witnesses.empty();
  return out;
}

PropertyCheck<PointPair> is_f_closed(const BinaryRelation& r, const SelfMap& map) {
  if (map.size() != r.universe()) throw Error(ErrorKind::invalid_argument, "map and relation disagree on the point set");
  PropertyCheck<PointPair> out;
  for (const auto& [a, b] : r.pairs()) {
    if (!r.contains(map(a), map(b))) out.witnesses.emplace_back(a, b);
  }
  out.holds = out.witnesses.empty();
  return out;
}

DirectedCheck is_r_directed(std::span<const PointId> subset, const BinaryRelation& r) {
  std::vector<PointId> d(subset.begin(), subset.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());

  DirectedCheck out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i; j < d.size(); ++j) {
      DirectedPair pair{d[i], d[j], std::nullopt};
      for (std::size_t eta = 0; eta < r.universe(); ++eta) {
        if (r.contains(d[i], point_id(eta)) && r.contains(d[j], point_id(eta))) {
          pair.common_successor = point_id(eta);
          break;
        }
      }
      if (!pair.common_successor) out.witnesses.emplace_back(d[i], d[j]);
      out.pairs.push_back(pair);
    }
  }
  out.holds = out.witnesses.empty();
  return out;
}

std::optional<Path> find_path(const BinaryRelation& r, PointId source, PointId target) {
  return find_path(r, source, target, std::max<std::size_t>(r.universe(), 1));
}

std::optional<Path> find_path(const BinaryRelation& r, PointId source, PointId target, std::size_t max_len) {
  if (max_len == 0) throw Error(ErrorKind::invalid_argument, "max_len must be positive");
  const std::size_t n = r.universe();
  r.contains(source, target);  // validates ids

  // Distances to target along reversed edges; target itself is at 0.
  constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> to_target(n, unreachable);
  std::deque<PointId> queue{target};
  to_target[index(target)] = 0;
  while (!queue.empty()) {
    const PointId v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n; ++u) {
      if (to_target[u] == unreachable && r.contains(point_id(u), v)) {
        to_target[u] = to_target[index(v)] + 1;
        queue.push_back(point_id(u));
      }
    }
  }

  // The first edge leaves the source even when source == target.
  std::size_t best = unreachable;
  for (PointId u : r.successors(source)) {
    if (to_target[index(u)] != unreachable) best = std::min(best, to_target[index(u)] + 1);
  }
  if (best == unreachable || best > max_len) return std::nullopt;

  Path path{{source}};
  PointId current = source;
  for (std::size_t remaining = best; remaining > 0; --remaining) {
    for (PointId u : r.successors(current)) {
      if (to_target[index(u)] == remaining - 1) {
        current = u;
        break;
      }
    }
    path.nodes.push_back(current);
  }
  return path;
}

std::string_view to_string(Decision d) noexcept {
  switch (d) {
    case Decision::holds: return "holds";
    case Decision::fails: return "fails";
    case Decision::not_applicable: return "not-applicable";
  }
  return "?";
}

BdSelfClosedCheck check_bd_self_closed(const BMetricSpace& space, const BinaryRelation& r) {
  if (r.universe() != space.size()) throw Error(ErrorKind::invalid_argument, "relation and space disagree on the point set");
  BdSelfClosedCheck out;
  if (space.sampled()) {
    out.decision = Decision::not_applicable;
    out.justification =
        "carrier is flagged as a sample of a continuum; convergent sequences need not be eventually constant";
    return out;
  }
  const auto gap = space.min_nonzero_distance();
  out.decision = Decision::holds;
  if (!gap) {
    out.justification = "single-point carrier: every sequence is constant, and an R-preserving one has (x, x) in R";
    return out;
  }
  out.justification =
      "eventually-constant tails: the minimal nonzero distance is " + std::to_string(*gap) +
      " > 0, so a b-convergent sequence equals its limit x from some index on; R-preservation then gives "
      "(x, x) in R on the tail, which serves as the subsequence in either direction";
  return out;
}

OrderDiagnostics order_diagnostics(const BinaryRelation& r) {
  OrderDiagnostics out;
  for (std::size_t i = 0; i < r.universe(); ++i) {
    if (r.contains(point_id(i), point_id(i))) {
      out.irreflexive.witnesses.push_back(point_id(i));
    } else {
      out.reflexive.witnesses.push_back(point_id(i));
    }
  }
  for (const auto& [a, b] : r.pairs()) {
    if (!r.contains(b, a)) out.symmetric.witnesses.emplace_back(a, b);
    if (a < b && r.contains(b, a)) out.antisymmetric.witnesses.emplace_back(a, b);
  }
  out.reflexive.holds = out.reflexive.witnesses.empty();
  out.irreflexive.holds = out.irreflexive.witnesses.empty();
  out.symmetric.holds = out.symmetric.witnesses.empty();
  out.antisymmetric.holds = out.antisymmetric.witnesses.empty();
  return out;
}

RelationReport relation_report(const BMetricSpace& space, const BinaryRelation& r, const SelfMap& map) {
  RelationReport out;
  out.transitive = is_transitive(r);
  out.complete = is_complete(r);
  out.f_closed = is_f_closed(r, map);
  out.bd_self_closed = check_bd_self_closed(space, r);
  out.order = order_diagnostics(r);
  return out;
}

}  // namespace relfix
