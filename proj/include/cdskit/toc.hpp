#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdskit/geometry.hpp"
#include "cdskit/order.hpp"

namespace cdskit {

/// Lattice path from source to target; consecutive points are grid
/// neighbours.
struct DigitalPath {
  std::vector<Point> points;

  [[nodiscard]] const Point& source() const { return points.front(); }
  [[nodiscard]] const Point& target() const { return points.back(); }
  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] bool empty() const { return points.empty(); }
  [[nodiscard]] bool contains(const Point& m) const;
  /// Index of m in the path, or -1.
  [[nodiscard]] std::ptrdiff_t index_of(const Point& m) const;
  [[nodiscard]] DigitalPath reversed() const;
  /// points[0..=i]
  [[nodiscard]] DigitalPath prefix(std::size_t i) const;

  bool operator==(const DigitalPath&) const = default;
};

[[nodiscard]] std::string to_string(const DigitalPath& path);

/// Ray construction inside one orthant: the point m with t.m = c moves along
/// the axis whose block in axis_order(t) contains rank(c) in
/// order[t.p, t.q-1].
///
/// Throws ContractError when q is not in O_t(p) and DomainError when the
/// order does not cover the window.
[[nodiscard]] DigitalPath build_segment(const OrderView& order, const Point& p, const Point& q,
                                        const Slope& t);

/// Same walk driven by precomputed ranks: ranks[i] is the 1-based rank of
/// t.p + i among the first |ranks| values. Only the first t.q - t.p entries
/// are read, and they must be a permutation of 1..(t.q - t.p).
[[nodiscard]] DigitalPath build_segment_ranked(std::span<const std::uint32_t> ranks,
                                               const Point& p, const Point& q, const Slope& t);

/// The order slope t must use at p so that all orthants agree with theta,
/// which is taken to be the order of the all-positive slope.
[[nodiscard]] OrderView derive_slope_order(const OrderView& theta, const Point& p,
                                           const Slope& t);

/// Segment of the ray system at p generated by theta.
[[nodiscard]] DigitalPath cdr_segment(const OrderView& theta, const Point& p, const Point& q);

/// Segment of the full system generated by theta (the union of the ray
/// systems at every point).
[[nodiscard]] DigitalPath cds_segment(const OrderView& theta, const Point& p, const Point& q);

/// Per-axis blocks: the endpoint with the smaller coordinate walks that axis.
[[nodiscard]] DigitalPath bounding_box_segment(const Point& p, const Point& q);

/// Greedy digitization: one lattice step per diagonal level, always taking
/// the step closest to the real line. Not consistent; kept as a counterexample.
[[nodiscard]] DigitalPath rounding_segment(const Point& p, const Point& q);

}  // namespace cdskit
