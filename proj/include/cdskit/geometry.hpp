#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cdskit/common.hpp"

namespace cdskit {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

/// Lattice point of Z^d, 2 <= d <= kMaxDim. Value type; exact integer arithmetic.
class Point {
 public:
  Point() = default;
  explicit Point(int dim);
  Point(std::initializer_list<Int> coords);
  explicit Point(const std::vector<Int>& coords);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] Int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  [[nodiscard]] std::vector<Int> coords() const;

  bool operator==(const Point& o) const;
  std::strong_ordering operator<=>(const Point& o) const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }

 private:
  std::array<Int, kMaxDim> c_{};
  int dim_ = 0;
};

[[nodiscard]] std::string to_string(const Point& p);
[[nodiscard]] Int l1_distance(const Point& a, const Point& b);
[[nodiscard]] Int squared_distance(const Point& a, const Point& b);

/// Sign vector in {+1,-1}^d.
class Slope {
 public:
  Slope() = default;
  explicit Slope(int dim);  // all +1
  Slope(std::initializer_list<int> signs);
  explicit Slope(const std::vector<int>& signs);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int operator[](int i) const { return s_[static_cast<std::size_t>(i)]; }
  void set(int i, int sign);

  [[nodiscard]] Slope negated() const;
  [[nodiscard]] bool all_positive() const;
  [[nodiscard]] std::vector<int> signs() const;

  bool operator==(const Slope& o) const;
  std::strong_ordering operator<=>(const Slope& o) const;

 private:
  std::array<std::int8_t, kMaxDim> s_{};
  int dim_ = 0;
};

[[nodiscard]] std::string to_string(const Slope& t);

/// All 2^d slopes, in lexicographic order of the sign vectors read as
/// (+1 before -1) in each coordinate.
[[nodiscard]] std::vector<Slope> all_slopes(int dim);

/// Coordinate processing order induced by a slope (0-based axis indices).
class AxisOrder {
 public:
  AxisOrder() = default;
  explicit AxisOrder(std::vector<int> axes);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::vector<int> axes() const;
  [[nodiscard]] AxisOrder reversed() const;
  /// Position of `axis` in this order.
  [[nodiscard]] int position_of(int axis) const;

  bool operator==(const AxisOrder& o) const;

 private:
  std::array<int, kMaxDim> a_{};
  int dim_ = 0;
};

/// "x2,x3,x1" (1-based, matching the usual coordinate names).
[[nodiscard]] std::string to_string(const AxisOrder& a);

/// Slope of the segment p -> q; coordinates with p_i == q_i get +1.
[[nodiscard]] Slope slope_of(const Point& p, const Point& q);

/// Positive axes in increasing index order, then negative axes in
/// decreasing index order.
[[nodiscard]] AxisOrder axis_order(const Slope& t);

/// q in O_t(p), i.e. t_i q_i >= t_i p_i for every i.
[[nodiscard]] bool orthant_contains(const Point& p, const Slope& t, const Point& q);

[[nodiscard]] Int dot(const Slope& t, const Point& p);

/// Throws ContractError unless both objects have dimension d.
void require_same_dim(int a, int b, const char* what);

/// Two distinct coordinate axes spanning a plane.
struct Plane {
  int first = 0;
  int second = 1;
};

/// Inclusive axis-aligned box.
struct Box {
  Point lo;
  Point hi;

  [[nodiscard]] int dim() const { return lo.dim(); }
  [[nodiscard]] bool contains(const Point& p) const;
  /// Strictly inside in every coordinate.
  [[nodiscard]] bool interior(const Point& p) const;
  [[nodiscard]] std::uint64_t count() const;
  /// Enumerates the box in lexicographic order.
  [[nodiscard]] std::vector<Point> points() const;
};

/// [lo, hi]^d
[[nodiscard]] Box cube(int dim, Int lo, Int hi);

}  // namespace cdskit
