#include "cdskit/toc.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <memory>

namespace cdskit {

bool DigitalPath::contains(const Point& m) const { return index_of(m) >= 0; }

std::ptrdiff_t DigitalPath::index_of(const Point& m) const {
  auto it = std::find(points.begin(), points.end(), m);
  return it == points.end() ? -1 : it - points.begin();
}

DigitalPath DigitalPath::reversed() const {
  return DigitalPath{{points.rbegin(), points.rend()}};
}

DigitalPath DigitalPath::prefix(std::size_t i) const {
  return DigitalPath{{points.begin(), points.begin() + static_cast<std::ptrdiff_t>(i) + 1}};
}

std::string to_string(const DigitalPath& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += "->";
    s += to_string(path.points[i]);
  }
  return s;
}

DigitalPath build_segment_ranked(std::span<const std::uint32_t> ranks, const Point& p,
                                 const Point& q, const Slope& t) {
  if (!orthant_contains(p, t, q)) {
    throw ContractError("target " + to_string(q) + " is not in the orthant " + to_string(t) +
                        " of " + to_string(p));
  }
  const AxisOrder ax = axis_order(t);
  const int d = p.dim();
  std::array<Int, kMaxDim> cumulative{};
  Int total = 0;
  for (int k = 0; k < d; ++k) {
    total += std::abs(q[ax[k]] - p[ax[k]]);
    cumulative[static_cast<std::size_t>(k)] = total;
  }
  if (static_cast<Int>(ranks.size()) < total) {
    throw ContractError("rank table shorter than the segment");
  }

  DigitalPath path;
  path.points.reserve(static_cast<std::size_t>(total) + 1);
  Point cur = p;
  path.points.push_back(cur);
  for (Int i = 0; i < total; ++i) {
    const Int r = ranks[static_cast<std::size_t>(i)];
    int k = 0;
    while (cumulative[static_cast<std::size_t>(k)] < r) ++k;
    const int axis = ax[k];
    cur[axis] += t[axis];
    path.points.push_back(cur);
  }
  return path;
}

DigitalPath build_segment(const OrderView& order, const Point& p, const Point& q,
                          const Slope& t) {
  require_same_dim(p.dim(), q.dim(), "build_segment");
  require_same_dim(p.dim(), t.dim(), "build_segment");
  if (!orthant_contains(p, t, q)) {
    throw ContractError("target " + to_string(q) + " is not in the orthant " + to_string(t) +
                        " of " + to_string(p));
  }
  const Interval window{dot(t, p), dot(t, q) - 1};
  if (window.empty()) return DigitalPath{{p}};
  const auto ranks = window_ranks(order, window);
  return build_segment_ranked(ranks, p, q, t);
}

OrderView derive_slope_order(const OrderView& theta, const Point& p, const Slope& t) {
  const Slope positive(p.dim());
  const Int c = dot(t, p) - dot(positive, p);
  return make_order(Anchored{std::make_shared<const OrderView>(theta.shifted(c)), dot(t, p)});
}

DigitalPath cdr_segment(const OrderView& theta, const Point& p, const Point& q) {
  const Slope t = slope_of(p, q);
  return build_segment(derive_slope_order(theta, p, t), p, q, t);
}

DigitalPath cds_segment(const OrderView& theta, const Point& p, const Point& q) {
  return cdr_segment(theta, p, q);
}

DigitalPath bounding_box_segment(const Point& p, const Point& q) {
  require_same_dim(p.dim(), q.dim(), "bounding_box_segment");
  // Each endpoint raises its own low coordinates to the common maximum; the
  // two walks meet at the coordinatewise max.
  auto walk = [](Point from, const Point& to) {
    std::vector<Point> pts{from};
    for (int i = 0; i < from.dim(); ++i) {
      while (from[i] < to[i]) {
        ++from[i];
        pts.push_back(from);
      }
    }
    return pts;
  };
  std::vector<Point> a = walk(p, q);
  std::vector<Point> b = walk(q, p);
  DigitalPath path{std::move(a)};
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) path.points.push_back(*it);
  return path;
}

DigitalPath rounding_segment(const Point& p, const Point& q) {
  require_same_dim(p.dim(), q.dim(), "rounding_segment");
  const int d = p.dim();
  const Slope t = slope_of(p, q);
  const AxisOrder ax = axis_order(t);
  const Point dir = q - p;
  __int128 dd = 0;
  for (int i = 0; i < d; ++i) dd += static_cast<__int128>(dir[i]) * dir[i];

  // Squared distance to the line through p and q, scaled by |q-p|^2.
  auto off_line = [&](const Point& m) {
    __int128 mm = 0;
    __int128 md = 0;
    for (int i = 0; i < d; ++i) {
      const Int w = m[i] - p[i];
      mm += static_cast<__int128>(w) * w;
      md += static_cast<__int128>(w) * dir[i];
    }
    return mm * dd - md * md;
  };

  DigitalPath path{{p}};
  Point cur = p;
  while (cur != q) {
    Point best;
    __int128 best_score = 0;
    bool found = false;
    for (int k = 0; k < d; ++k) {
      const int axis = ax[k];
      if (cur[axis] == q[axis]) continue;
      Point next = cur;
      next[axis] += t[axis];
      const __int128 score = off_line(next);
      if (!found || score < best_score) {
        best = next;
        best_score = score;
        found = true;
      }
    }
    cur = best;
    path.points.push_back(cur);
  }
  return path;
}

}  // namespace cdskit
