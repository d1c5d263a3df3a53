#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdskit {

using Int = std::int64_t;

/// A query fell outside the set of integers an order or system is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller broke a precondition (equal arguments to a strict comparator,
/// mismatched dimensions, a target outside the orthant, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Closed integer interval [lo, hi]. Empty when lo > hi.
struct Interval {
  Int lo = 0;
  Int hi = -1;

  [[nodiscard]] constexpr bool empty() const { return lo > hi; }
  [[nodiscard]] constexpr Int size() const { return empty() ? 0 : hi - lo + 1; }
  [[nodiscard]] constexpr bool contains(Int v) const { return lo <= v && v <= hi; }
  constexpr bool operator==(const Interval&) const = default;
};

[[nodiscard]] inline std::string to_string(const Interval& w) {
  return "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
}

}  // namespace cdskit
