#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace relfix {

/// Dense index into a space's point table (0..n-1).
enum class PointId : std::uint32_t {};

constexpr std::size_t index(PointId id) noexcept { return static_cast<std::size_t>(id); }
constexpr PointId point_id(std::size_t i) noexcept { return static_cast<PointId>(i); }

using PointPair = std::pair<PointId, PointId>;

enum class ErrorKind {
  invalid_argument,  // precondition or invariant violated by the caller
  unknown_point,
  syntax,            // problem file does not parse
  semantic,          // problem file parses but violates a domain invariant
  solver,            // iteration aborted (bad start, orbit left the relation)
  certificate,       // solver result inconsistent with the fixed-point oracle
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace relfix
