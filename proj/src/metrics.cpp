#include "cdskit/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <thread>

namespace cdskit {
namespace {

using Wide = __int128;

// Exact ratio num/den with den > 0.
struct Ratio {
  Wide num = 0;
  Wide den = 1;
};

bool ratio_less(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduced first so equal ratios always convert to the same double.
double ratio_sqrt(const Ratio& r) {
  if (r.num == 0) return 0.0;
  const Wide g = wide_gcd(r.num, r.den);
  return std::sqrt(static_cast<double>(r.num / g) / static_cast<double>(r.den / g));
}

// Squared distance from a lattice point to the closed segment pq, with the
// segment parameter of the closest point.
struct VertexDistance {
  Ratio dist2;
  Ratio lambda;
};

VertexDistance vertex_to_segment(const Point& m, const Point& p, const Point& q) {
  const int d = p.dim();
  Wide dd = 0;
  Wide ww = 0;
  Wide wd = 0;
  for (int i = 0; i < d; ++i) {
    const Wide di = q[i] - p[i];
    const Wide wi = m[i] - p[i];
    dd += di * di;
    ww += wi * wi;
    wd += wi * di;
  }
  if (dd == 0 || wd <= 0) return {{ww, 1}, {0, 1}};
  if (wd >= dd) return {{static_cast<Wide>(squared_distance(m, q)), 1}, {1, 1}};
  return {{ww * dd - wd * wd, dd}, {wd, dd}};
}

std::vector<double> point_on_segment(const Point& p, const Point& q, const Ratio& lambda) {
  const double l = static_cast<double>(lambda.num) / static_cast<double>(lambda.den);
  std::vector<double> out(static_cast<std::size_t>(p.dim()));
  for (int i = 0; i < p.dim(); ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<double>(p[i]) + l * static_cast<double>(q[i] - p[i]);
  }
  return out;
}

// Farthest point of the segment from the vertex set. Squared distance from
// p + l*d to m_i is |d|^2 l^2 + a_i + b_i l, so the minimum over i is a
// convex term plus the lower envelope of the lines a_i + b_i l; the maximum
// over l sits at an envelope breakpoint or at an end of [0,1].
HausdorffResult segment_to_points(const DigitalPath& path, const Point& p, const Point& q) {
  const int d = p.dim();
  struct Line {
    Wide a;
    Wide b;
    std::size_t index;
  };
  Wide dd = 0;
  for (int i = 0; i < d; ++i) dd += static_cast<Wide>(q[i] - p[i]) * (q[i] - p[i]);
  std::vector<Line> lines;
  lines.reserve(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    Wide a = 0;
    Wide wd = 0;
    for (int i = 0; i < d; ++i) {
      const Wide w = path.points[k][i] - p[i];
      a += w * w;
      wd += w * (q[i] - p[i]);
    }
    lines.push_back({a, -2 * wd, k});
  }

  auto value_at = [&](const Line& ln, const Ratio& l) {
    // (dd*num^2 + a*den^2 + b*num*den) / den^2
    return Ratio{dd * l.num * l.num + ln.a * l.den * l.den + ln.b * l.num * l.den,
                 l.den * l.den};
  };

  // Walk the envelope from l = 0: start on the lowest line (steepest descent
  // on ties), then jump to the line crossing below it soonest.
  std::size_t cur = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& a = lines[k];
    const auto& b = lines[cur];
    if (a.a < b.a || (a.a == b.a && a.b < b.b)) cur = k;
  }
  Ratio at{0, 1};
  HausdorffResult best;
  best.direction = HausdorffResult::Direction::SegmentToPath;
  Ratio best_val = value_at(lines[cur], at);
  Ratio best_l = at;
  std::size_t best_line = cur;

  while (true) {
    std::optional<std::size_t> next;
    Ratio next_l{1, 1};
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (lines[k].b >= lines[cur].b) continue;
      // a_cur + b_cur l = a_k + b_k l
      Ratio l{lines[k].a - lines[cur].a, lines[cur].b - lines[k].b};
      if (!ratio_less(l, next_l)) {
        // Same crossing as the current candidate: prefer the steeper line.
        const bool tie = next && !ratio_less(next_l, l) && lines[k].b < lines[*next].b;
        if (!tie) continue;
      }
      next = k;
      next_l = l;
    }
    if (!next) break;
    // Breakpoint inside [at, 1).
    const Ratio v = value_at(lines[cur], next_l);
    if (ratio_less(best_val, v)) {
      best_val = v;
      best_l = next_l;
      best_line = cur;
    }
    cur = *next;
    at = next_l;
  }
  const Ratio end{1, 1};
  if (const Ratio v = value_at(lines[cur], end); ratio_less(best_val, v)) {
    best_val = v;
    best_l = end;
    best_line = cur;
  }
  best.value = ratio_sqrt(best_val);
  best.witness_lattice = path.points[lines[best_line].index];
  best.witness_real = point_on_segment(p, q, best_l);
  return best;
}

}  // namespace

HausdorffResult hausdorff(const DigitalPath& path, const Point& p, const Point& q,
                          PathModel model) {
  if (path.empty() || path.source() != p || path.target() != q) {
    throw ContractError("path does not run from " + to_string(p) + " to " + to_string(q));
  }
  HausdorffResult out;
  out.direction = HausdorffResult::Direction::PathToSegment;
  Ratio best{0, 1};
  Ratio best_l{0, 1};
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const auto vd = vertex_to_segment(path.points[k], p, q);
    if (ratio_less(best, vd.dist2)) {
      best = vd.dist2;
      best_l = vd.lambda;
      best_k = k;
    }
  }
  out.value = ratio_sqrt(best);
  out.witness_lattice = path.points[best_k];
  out.witness_real = point_on_segment(p, q, best_l);

  if (model == PathModel::LatticePoints && p != q) {
    HausdorffResult other = segment_to_points(path, p, q);
    if (other.value > out.value + 1e-9) return other;
  }
  return out;
}

namespace {

// ranks of base, base+1, ..., base+L-1 among themselves, for every L up to
// max_len, stored back to back: level L starts at L*(L-1)/2.
class RankTable {
 public:
  RankTable() = default;
  RankTable(const OrderView& order, Int base, Int max_len) {
    data_.reserve(static_cast<std::size_t>(max_len * (max_len + 1) / 2));
    for (Int len = 1; len <= max_len; ++len) {
      const Int x = base + len - 1;
      const std::size_t prev = static_cast<std::size_t>((len - 1) * (len - 2) / 2);
      std::uint32_t below = 0;
      for (Int i = 0; i + 1 < len; ++i) {
        const bool x_first = order.less(x, base + i);
        data_.push_back(data_[prev + static_cast<std::size_t>(i)] + (x_first ? 1u : 0u));
        if (!x_first) ++below;
      }
      data_.push_back(below + 1);
    }
  }

  static RankTable identity(Int max_len) {
    RankTable t;
    for (Int len = 1; len <= max_len; ++len) {
      for (Int i = 0; i < len; ++i) t.data_.push_back(static_cast<std::uint32_t>(i + 1));
    }
    return t;
  }

  [[nodiscard]] std::span<const std::uint32_t> level(Int len) const {
    return {data_.data() + len * (len - 1) / 2, static_cast<std::size_t>(len)};
  }

 private:
  std::vector<std::uint32_t> data_;
};

struct Candidate {
  Ratio value;
  Point q;
  bool set = false;
};

void offer(Candidate& best, const Ratio& v, const Point& q) {
  if (!best.set || ratio_less(best.value, v) ||
      (!ratio_less(v, best.value) && q < best.q)) {
    best = {v, q, true};
  }
}

// Polyline Hausdorff of the ray to q driven by `ranks`. Every vertex of a
// monotone path projects inside the segment, so only the distance to the
// line matters: (|w|^2 |d|^2 - (w.d)^2) / |d|^2 with w = m - p.
template <typename Acc>
Ratio walk_distance(std::span<const std::uint32_t> ranks, const Point& p, const Point& q,
                    const Slope& t) {
  const int d = p.dim();
  const AxisOrder ax = axis_order(t);
  std::array<Int, kMaxDim> cumulative{};
  std::array<Int, kMaxDim> delta{};
  std::array<Int, kMaxDim> w{};
  Int dd = 0;
  Int total = 0;
  for (int k = 0; k < d; ++k) {
    const int i = ax[k];
    delta[static_cast<std::size_t>(k)] = q[i] - p[i];
    dd += (q[i] - p[i]) * (q[i] - p[i]);
    total += std::abs(q[i] - p[i]);
    cumulative[static_cast<std::size_t>(k)] = total;
  }
  Acc ww = 0;
  Acc wd = 0;
  Acc best = 0;
  for (Int s = 0; s < total; ++s) {
    const Int r = ranks[static_cast<std::size_t>(s)];
    std::size_t k = 0;
    while (cumulative[k] < r) ++k;
    const Int sign = t[ax[static_cast<int>(k)]];
    ww += 2 * sign * w[k] + 1;
    w[k] += sign;
    wd += sign * delta[k];
    const Acc num = ww * dd - wd * wd;
    if (num > best) best = num;
  }
  return {static_cast<Wide>(best), dd == 0 ? 1 : static_cast<Wide>(dd)};
}

std::vector<Point> ball_targets(const Point& p, Int n, const SweepOptions& opt) {
  std::vector<int> axes;
  if (opt.plane) {
    axes = {opt.plane->first, opt.plane->second};
    std::sort(axes.begin(), axes.end());
  } else {
    for (int i = 0; i < p.dim(); ++i) axes.push_back(i);
  }
  const auto k = axes.size();
  std::vector<Int> off(k, -n);
  std::vector<Point> out;
  while (true) {
    Int l1 = 0;
    Int l2 = 0;
    for (Int v : off) {
      l1 += std::abs(v);
      l2 += v * v;
    }
    const bool inside = opt.norm == BallNorm::Manhattan ? l1 <= n : l2 <= n * n;
    if (inside) {
      Point q = p;
      for (std::size_t i = 0; i < k; ++i) q[axes[i]] += off[i];
      out.push_back(q);
    }
    std::size_t i = k;
    while (i > 0 && off[i - 1] == n) {
      off[i - 1] = -n;
      --i;
    }
    if (i == 0) break;
    ++off[i - 1];
  }
  return out;
}

}  // namespace

SweepResult max_hausdorff_over_ball(const SegmentSystem& system, const Point& p, Int n,
                                    const SweepOptions& options) {
  require_same_dim(system.dim(), p.dim(), "max_hausdorff_over_ball");
  if (n < 1) throw ContractError("sweep radius must be at least 1");
  if (options.plane) {
    const Plane pl = *options.plane;
    if (pl.first == pl.second || pl.first < 0 || pl.second < 0 || pl.first >= p.dim() ||
        pl.second >= p.dim()) {
      throw ContractError("plane axes must be two distinct coordinates");
    }
  }
  const auto targets = ball_targets(p, n, options);
  Int max_len = 0;
  for (const Point& q : targets) max_len = std::max(max_len, l1_distance(p, q));

  // Ray systems at p read the same ranks on [t.p, t.p + L) for every slope,
  // namely those of theta on [t'.p, t'.p + L) with t' all positive.
  const auto& kind = system.kind();
  RankTable shared;
  std::map<Slope, RankTable> per_slope;
  enum class Mode { Shared, PerSlope, Generic } mode = Mode::Generic;
  if (const auto* c = std::get_if<TocCdr>(&kind)) {
    if (c->p != p) throw DomainError("sweep source differs from the ray apex " + to_string(c->p));
    shared = RankTable(c->theta, dot(Slope(p.dim()), p), max_len);
    mode = Mode::Shared;
  } else if (const auto* s = std::get_if<TocCds>(&kind)) {
    shared = RankTable(s->theta, dot(Slope(p.dim()), p), max_len);
    mode = Mode::Shared;
  } else if (std::holds_alternative<BoundingBox>(kind)) {
    shared = RankTable::identity(max_len);
    mode = Mode::Shared;
  } else if (const auto* ps = std::get_if<PerSlopeCdr>(&kind)) {
    if (ps->p != p) throw DomainError("sweep source differs from the ray apex " + to_string(ps->p));
    for (const Point& q : targets) {
      const Slope t = slope_of(p, q);
      if (!per_slope.contains(t)) per_slope.emplace(t, RankTable(ps->orders.at(t), dot(t, p), max_len));
    }
    mode = Mode::PerSlope;
  }

  // |w|^2 |d|^2 stays below L^4, which fits 64 bits up to L = 30000.
  const bool narrow = max_len <= 30000;
  auto evaluate = [&](const Point& q) -> Ratio {
    if (q == p) return {0, 1};
    const Slope t = slope_of(p, q);
    const Int len = l1_distance(p, q);
    switch (mode) {
      case Mode::Shared:
        return narrow ? walk_distance<Int>(shared.level(len), p, q, t)
                      : walk_distance<Wide>(shared.level(len), p, q, t);
      case Mode::PerSlope:
        return narrow ? walk_distance<Int>(per_slope.at(t).level(len), p, q, t)
                      : walk_distance<Wide>(per_slope.at(t).level(len), p, q, t);
      case Mode::Generic: break;
    }
    Ratio best{0, 1};
    for (const Point& m : path_of(system, p, q).points) {
      const auto vd = vertex_to_segment(m, p, q);
      if (ratio_less(best, vd.dist2)) best = vd.dist2;
    }
    return best;
  };

  const int threads = std::max(1, options.threads);
  std::vector<Candidate> partial(static_cast<std::size_t>(threads));
  auto work = [&](int id) {
    const std::size_t lo = targets.size() * static_cast<std::size_t>(id) / static_cast<std::size_t>(threads);
    const std::size_t hi = targets.size() * static_cast<std::size_t>(id + 1) / static_cast<std::size_t>(threads);
    Candidate& best = partial[static_cast<std::size_t>(id)];
    for (std::size_t i = lo; i < hi; ++i) offer(best, evaluate(targets[i]), targets[i]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  Candidate best;
  for (const auto& c : partial) {
    if (c.set) offer(best, c.value, c.q);
  }
  SweepResult out;
  out.max_value = ratio_sqrt(best.value);
  out.argmax = best.q;
  out.targets = targets.size();
  return out;
}

double discrepancy(const OrderView& view, Int n) {
  if (n < 1) throw ContractError("discrepancy needs n >= 1");
  if (n > kMaxDiscrepancyN) {
    throw ContractError("discrepancy is capped at n = " + std::to_string(kMaxDiscrepancyN));
  }
  const auto ranks = window_ranks(view, Interval{0, n - 1});
  // For a value interval J the best position interval [i1, i2) maximizes
  // |g(i2) - g(i1)| with g(i) = #(pi(J) below i) - i|J|/n, i.e. max g - min g.
  // Work with n*g to stay in integers.
  Int best = 0;
  std::vector<Int> below(static_cast<std::size_t>(n) + 1);
  for (Int j1 = 0; j1 < n; ++j1) {
    std::fill(below.begin(), below.end(), 0);
    for (Int j2 = j1; j2 < n; ++j2) {
      const Int pos = ranks[static_cast<std::size_t>(j2)] - 1;
      for (Int i = pos + 1; i <= n; ++i) ++below[static_cast<std::size_t>(i)];
      const Int m = j2 - j1 + 1;
      Int hi = 0;
      Int lo = 0;
      for (Int i = 0; i <= n; ++i) {
        const Int g = n * below[static_cast<std::size_t>(i)] - i * m;
        hi = std::max(hi, g);
        lo = std::min(lo, g);
      }
      best = std::max(best, hi - lo);
    }
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

}  // namespace cdskit
