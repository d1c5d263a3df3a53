#include "cdskit/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace cdskit {
namespace {

void check_dim(int d) {
  if (d < kMinDim || d > kMaxDim) {
    throw ContractError("dimension " + std::to_string(d) + " outside supported range [" +
                        std::to_string(kMinDim) + "," + std::to_string(kMaxDim) + "]");
  }
}

}  // namespace

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw ContractError(std::string("dimension mismatch in ") + what + ": " + std::to_string(a) +
                        " vs " + std::to_string(b));
  }
}

Point::Point(int dim) : dim_(dim) { check_dim(dim); }

Point::Point(std::initializer_list<Int> coords) : dim_(static_cast<int>(coords.size())) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point::Point(const std::vector<Int>& coords) : dim_(static_cast<int>(coords.size())) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

std::vector<Int> Point::coords() const { return {c_.begin(), c_.begin() + dim_}; }

bool Point::operator==(const Point& o) const {
  return dim_ == o.dim_ && std::equal(c_.begin(), c_.begin() + dim_, o.c_.begin());
}

std::strong_ordering Point::operator<=>(const Point& o) const {
  if (auto c = dim_ <=> o.dim_; c != 0) return c;
  for (int i = 0; i < dim_; ++i) {
    if (auto c = (*this)[i] <=> o[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Point& Point::operator+=(const Point& o) {
  require_same_dim(dim_, o.dim_, "point addition");
  for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(dim_, o.dim_, "point subtraction");
  for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
  return *this;
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (int i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Int l1_distance(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "l1_distance");
  Int s = 0;
  for (int i = 0; i < a.dim(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

Int squared_distance(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "squared_distance");
  Int s = 0;
  for (int i = 0; i < a.dim(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

Slope::Slope(int dim) : dim_(dim) {
  check_dim(dim);
  std::fill(s_.begin(), s_.begin() + dim, std::int8_t{1});
}

Slope::Slope(std::initializer_list<int> signs) : Slope(std::vector<int>(signs)) {}

Slope::Slope(const std::vector<int>& signs) : dim_(static_cast<int>(signs.size())) {
  check_dim(dim_);
  for (int i = 0; i < dim_; ++i) set(i, signs[static_cast<std::size_t>(i)]);
}

void Slope::set(int i, int sign) {
  if (sign != 1 && sign != -1) {
    throw ContractError("slope entries must be +1 or -1, got " + std::to_string(sign));
  }
  s_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(sign);
}

Slope Slope::negated() const {
  Slope out = *this;
  for (int i = 0; i < dim_; ++i) out.s_[static_cast<std::size_t>(i)] *= -1;
  return out;
}

bool Slope::all_positive() const {
  return std::all_of(s_.begin(), s_.begin() + dim_, [](auto s) { return s > 0; });
}

std::vector<int> Slope::signs() const { return {s_.begin(), s_.begin() + dim_}; }

bool Slope::operator==(const Slope& o) const {
  return dim_ == o.dim_ && std::equal(s_.begin(), s_.begin() + dim_, o.s_.begin());
}

std::strong_ordering Slope::operator<=>(const Slope& o) const {
  if (auto c = dim_ <=> o.dim_; c != 0) return c;
  for (int i = 0; i < dim_; ++i) {
    // +1 sorts before -1
    if (auto c = o[i] <=> (*this)[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Slope& t) {
  std::string s = "(";
  for (int i = 0; i < t.dim(); ++i) {
    if (i) s += ",";
    s += t[i] > 0 ? "+1" : "-1";
  }
  return s + ")";
}

std::vector<Slope> all_slopes(int dim) {
  check_dim(dim);
  std::vector<Slope> out;
  out.reserve(std::size_t{1} << dim);
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Slope t(dim);
    for (int i = 0; i < dim; ++i) {
      if (mask & (1u << (dim - 1 - i))) t.set(i, -1);
    }
    out.push_back(t);
  }
  return out;
}

AxisOrder::AxisOrder(std::vector<int> axes) : dim_(static_cast<int>(axes.size())) {
  check_dim(dim_);
  std::vector<bool> seen(axes.size(), false);
  for (int a : axes) {
    if (a < 0 || a >= dim_ || seen[static_cast<std::size_t>(a)]) {
      throw ContractError("axis order must be a permutation of 0..d-1");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
  std::copy(axes.begin(), axes.end(), a_.begin());
}

std::vector<int> AxisOrder::axes() const { return {a_.begin(), a_.begin() + dim_}; }

AxisOrder AxisOrder::reversed() const {
  auto v = axes();
  std::reverse(v.begin(), v.end());
  return AxisOrder(std::move(v));
}

int AxisOrder::position_of(int axis) const {
  for (int i = 0; i < dim_; ++i) {
    if ((*this)[i] == axis) return i;
  }
  throw ContractError("axis " + std::to_string(axis) + " not in axis order");
}

bool AxisOrder::operator==(const AxisOrder& o) const {
  return dim_ == o.dim_ && std::equal(a_.begin(), a_.begin() + dim_, o.a_.begin());
}

std::string to_string(const AxisOrder& a) {
  std::string s;
  for (int i = 0; i < a.dim(); ++i) {
    if (i) s += ",";
    s += "x" + std::to_string(a[i] + 1);
  }
  return s;
}

Slope slope_of(const Point& p, const Point& q) {
  require_same_dim(p.dim(), q.dim(), "slope_of");
  Slope t(p.dim());
  for (int i = 0; i < p.dim(); ++i) t.set(i, p[i] <= q[i] ? 1 : -1);
  return t;
}

AxisOrder axis_order(const Slope& t) {
  std::vector<int> axes;
  axes.reserve(static_cast<std::size_t>(t.dim()));
  for (int i = 0; i < t.dim(); ++i) {
    if (t[i] > 0) axes.push_back(i);
  }
  for (int i = t.dim() - 1; i >= 0; --i) {
    if (t[i] < 0) axes.push_back(i);
  }
  return AxisOrder(std::move(axes));
}

bool orthant_contains(const Point& p, const Slope& t, const Point& q) {
  require_same_dim(p.dim(), t.dim(), "orthant_contains");
  require_same_dim(p.dim(), q.dim(), "orthant_contains");
  for (int i = 0; i < p.dim(); ++i) {
    if (t[i] * q[i] < t[i] * p[i]) return false;
  }
  return true;
}

Int dot(const Slope& t, const Point& p) {
  require_same_dim(t.dim(), p.dim(), "dot");
  Int s = 0;
  for (int i = 0; i < p.dim(); ++i) s += t[i] * p[i];
  return s;
}

bool Box::contains(const Point& p) const {
  require_same_dim(dim(), p.dim(), "Box::contains");
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

bool Box::interior(const Point& p) const {
  require_same_dim(dim(), p.dim(), "Box::interior");
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] <= lo[i] || p[i] >= hi[i]) return false;
  }
  return true;
}

std::uint64_t Box::count() const {
  std::uint64_t n = 1;
  for (int i = 0; i < dim(); ++i) {
    if (hi[i] < lo[i]) return 0;
    n *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
  }
  return n;
}

std::vector<Point> Box::points() const {
  std::vector<Point> out;
  if (count() == 0) return out;
  out.reserve(count());
  Point cur = lo;
  while (true) {
    out.push_back(cur);
    int i = dim() - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

Box cube(int dim, Int lo, Int hi) {
  Point a(dim);
  Point b(dim);
  for (int i = 0; i < dim; ++i) {
    a[i] = lo;
    b[i] = hi;
  }
  return Box{a, b};
}

}  // namespace cdskit
