#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "cdskit/geometry.hpp"
#include "cdskit/order.hpp"
#include "cdskit/toc.hpp"

namespace cdskit {

/// Rays from one point p, all slope orders derived from theta.
struct TocCdr {
  OrderView theta;
  Point p;
};

/// Segments between any two points, generated by theta.
struct TocCds {
  OrderView theta;
};

/// Rays from p with an independently chosen order for every slope.
struct PerSlopeCdr {
  Point p;
  std::map<Slope, OrderView> orders;
};

struct BoundingBox {};
struct Rounding {};

using SystemKind = std::variant<TocCdr, TocCds, PerSlopeCdr, BoundingBox, Rounding>;

class SegmentSystem {
 public:
  SegmentSystem(SystemKind kind, int dim);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const SystemKind& kind() const { return kind_; }
  /// Fixed source for ray systems.
  [[nodiscard]] std::optional<Point> apex() const;
  [[nodiscard]] bool in_domain(const Point& p, const Point& q) const;
  [[nodiscard]] std::string name() const;

 private:
  SystemKind kind_;
  int dim_;
};

[[nodiscard]] SegmentSystem make_system(SystemKind kind, int dim);

/// Path the system assigns to (p, q). Throws DomainError for pairs outside
/// the system's domain.
[[nodiscard]] DigitalPath path_of(const SegmentSystem& system, const Point& p, const Point& q);

struct CdrWitness {
  Slope t;
  Slope t_prime;
  /// u < v in the t order at offset k from t.p, but the shifted pair is
  /// ordered the other way in the t' order.
  Int u = 0;
  Int v = 0;
};

struct CdrConditionResult {
  bool holds = true;
  /// In the plane every slope pair shares at most one axis line, so the
  /// per-orthant orders never constrain each other.
  bool vacuous = false;
  Int window_len = 0;
  std::optional<CdrWitness> witness;
};

/// Checks that every pair of slope orders agree after translating
/// [t.p, t.p + window_len) onto [t'.p, t'.p + window_len).
[[nodiscard]] CdrConditionResult check_cdr_condition(const std::map<Slope, OrderView>& orders,
                                                     const Point& p, Int window_len);

struct CdsConditionResult {
  bool holds = true;
  ConditionResult shift_two;
  ConditionResult neg_shift_inverse;
};

/// Both order conditions on [-W, W].
[[nodiscard]] CdsConditionResult check_cds_condition(const OrderView& theta, Int W);

/// The 2^d orders derive_slope_order(theta, p, t).
[[nodiscard]] std::map<Slope, OrderView> derived_orders(const OrderView& theta, const Point& p);

}  // namespace cdskit
