#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cdskit/metrics.hpp"

using namespace cdskit;

namespace {

using Vec = std::vector<double>;

Vec to_vec(const Point& m) {
  Vec v(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) v[static_cast<std::size_t>(i)] = static_cast<double>(m[i]);
  return v;
}

double dist(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

Vec lerp(const Vec& a, const Vec& b, double l) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + l * (b[i] - a[i]);
  return out;
}

// Samples of the segment a..b spaced at most `step` apart.
std::vector<Vec> sample_segment(const Vec& a, const Vec& b, double step) {
  const int n = std::max(1, static_cast<int>(std::ceil(dist(a, b) / step)));
  std::vector<Vec> out;
  for (int i = 0; i <= n; ++i) out.push_back(lerp(a, b, static_cast<double>(i) / n));
  return out;
}

double point_to_set(const Vec& x, const std::vector<Vec>& set) {
  double best = INFINITY;
  for (const Vec& y : set) best = std::min(best, dist(x, y));
  return best;
}

double point_to_segment(const Vec& x, const Vec& a, const Vec& b) {
  double dd = 0, wd = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dd += (b[i] - a[i]) * (b[i] - a[i]);
    wd += (x[i] - a[i]) * (b[i] - a[i]);
  }
  const double l = dd == 0 ? 0 : std::clamp(wd / dd, 0.0, 1.0);
  return dist(x, lerp(a, b, l));
}

// Samples each side at `step` and measures exactly against the other side.
double sampled_polyline_hausdorff(const std::vector<Vec>& verts, const Vec& a, const Vec& b,
                                  double step) {
  double h = 0;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    for (const Vec& x : sample_segment(verts[i], verts[i + 1], step)) {
      h = std::max(h, point_to_segment(x, a, b));
    }
  }
  if (verts.size() == 1) h = point_to_segment(verts[0], a, b);
  for (const Vec& y : sample_segment(a, b, step)) {
    double best = INFINITY;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      best = std::min(best, point_to_segment(y, verts[i], verts[i + 1]));
    }
    if (verts.size() == 1) best = dist(y, verts[0]);
    h = std::max(h, best);
  }
  return h;
}

double sampled_points_hausdorff(const std::vector<Vec>& verts, const Vec& a, const Vec& b,
                                double step) {
  double h = 0;
  for (const Vec& x : verts) h = std::max(h, point_to_segment(x, a, b));
  for (const Vec& y : sample_segment(a, b, step)) h = std::max(h, point_to_set(y, verts));
  return h;
}

DigitalPath random_monotone_path(std::mt19937_64& rng, const Point& p, const Point& q) {
  DigitalPath path{{p}};
  Point m = p;
  std::vector<int> moves;
  for (int i = 0; i < p.dim(); ++i) {
    for (Int k = 0; k < std::abs(q[i] - p[i]); ++k) moves.push_back(i);
  }
  std::shuffle(moves.begin(), moves.end(), rng);
  for (int ax : moves) {
    m[ax] += q[ax] > p[ax] ? 1 : -1;
    path.points.push_back(m);
  }
  return path;
}

// The distance from the segment to the nearest path vertex is the lower
// envelope of k parabolas with the same leading term; its maximum over
// [0,1] sits at an endpoint or where two parabolas cross.
double bisector_oracle(const DigitalPath& path, const Point& p, const Point& q) {
  const Vec a = to_vec(p), b = to_vec(q);
  std::vector<double> cands{0.0, 1.0};
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
  std::vector<std::pair<double, double>> lin;  // |x(l)-m|^2 - l^2|d|^2 = c0 + c1*l
  for (const Point& m : path.points) {
    const Vec mv = to_vec(m);
    double c0 = 0, c1 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      c0 += (a[i] - mv[i]) * (a[i] - mv[i]);
      c1 += 2 * (a[i] - mv[i]) * d[i];
    }
    lin.emplace_back(c0, c1);
  }
  for (std::size_t i = 0; i < lin.size(); ++i) {
    for (std::size_t j = i + 1; j < lin.size(); ++j) {
      const double den = lin[i].second - lin[j].second;
      if (den == 0) continue;
      const double l = (lin[j].first - lin[i].first) / den;
      if (l > 0 && l < 1) cands.push_back(l);
    }
  }
  double best = 0;
  std::vector<Vec> verts;
  for (const Point& m : path.points) verts.push_back(to_vec(m));
  for (double l : cands) best = std::max(best, point_to_set(lerp(a, b, l), verts));
  return best;
}

double vertex_side(const DigitalPath& path, const Point& p, const Point& q) {
  double best = 0;
  for (const Point& m : path.points) best = std::max(best, point_to_segment(to_vec(m), to_vec(p), to_vec(q)));
  return best;
}

double bounding_box_closed_form(Int n, BallNorm norm) {
  double best = 0;
  for (Int a = 0; a <= n; ++a) {
    for (Int b = 0; b <= n; ++b) {
      const bool inside = norm == BallNorm::Euclidean ? a * a + b * b <= n * n : a + b <= n;
      if (!inside || a + b == 0) continue;
      best = std::max(best, static_cast<double>(a * b) / std::sqrt(static_cast<double>(a * a + b * b)));
    }
  }
  return best;
}

SweepResult brute_sweep(const SegmentSystem& sys, const Point& p, Int n, BallNorm norm,
                        std::optional<Plane> plane) {
  SweepResult out;
  const int d = p.dim();
  for (const Point& off : cube(d, -n, n).points()) {
    bool skip = false;
    Int l1 = 0, l2 = 0;
    for (int i = 0; i < d; ++i) {
      l1 += std::abs(off[i]);
      l2 += off[i] * off[i];
      if (plane && i != plane->first && i != plane->second && off[i] != 0) skip = true;
    }
    if (skip || (norm == BallNorm::Euclidean ? l2 > n * n : l1 > n)) continue;
    const Point q = p + off;
    const double h = hausdorff(path_of(sys, p, q), p, q).value;
    ++out.targets;
    if (h > out.max_value + 1e-12) {
      out.max_value = h;
      out.argmax = q;
    }
  }
  return out;
}

}  // namespace

TEST(Hausdorff, AxisParallelPathIsExact) {
  const DigitalPath path{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}};
  EXPECT_EQ(hausdorff(path, {0, 0}, {3, 0}).value, 0.0);
  EXPECT_DOUBLE_EQ(hausdorff(path, {0, 0}, {3, 0}, PathModel::LatticePoints).value, 0.5);
}

TEST(Hausdorff, BoundingBoxCorner) {
  for (Int m = 1; m <= 12; ++m) {
    const Point q{m, m};
    const auto h = hausdorff(bounding_box_segment({0, 0}, q), {0, 0}, q);
    EXPECT_NEAR(h.value, static_cast<double>(m) / std::sqrt(2.0), 1e-12);
    EXPECT_EQ(h.witness_lattice, Point({m, 0}));
  }
}

TEST(Hausdorff, ParityOrderLowerBound) {
  const Point p{0, 0}, q{10, 20};
  const auto path = cds_segment(make_order(Tau{TauKind::OpEp}), p, q);
  EXPECT_GE(hausdorff(path, p, q).value, 10.0 / std::sqrt(5.0) - 1e-12);
}

TEST(Hausdorff, EndpointMismatchIsAContractError) {
  const DigitalPath path{{{0, 0}, {1, 0}}};
  EXPECT_THROW((void)hausdorff(path, {0, 0}, {2, 0}), ContractError);
}

TEST(Hausdorff, AgreesWithDenseSampling) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<Int> c(-4, 4);
  for (int rep = 0; rep < 200; ++rep) {
    const int d = rep % 2 ? 3 : 2;
    Point p(d), q(d);
    for (int i = 0; i < d; ++i) {
      p[i] = c(rng);
      q[i] = c(rng);
    }
    const auto path = random_monotone_path(rng, p, q);
    const double step = 1e-3;
    std::vector<Vec> verts;
    for (const Point& m : path.points) verts.push_back(to_vec(m));
    EXPECT_NEAR(hausdorff(path, p, q).value,
                sampled_polyline_hausdorff(verts, to_vec(p), to_vec(q), step), 2e-3);
    EXPECT_NEAR(hausdorff(path, p, q, PathModel::LatticePoints).value,
                sampled_points_hausdorff(verts, to_vec(p), to_vec(q), step), 2e-3);
  }
}

TEST(Hausdorff, LatticeModelMatchesBisectorCandidates) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Int> c(-9, 9);
  for (int rep = 0; rep < 300; ++rep) {
    const int d = 2 + rep % 3;
    Point p(d), q(d);
    for (int i = 0; i < d; ++i) {
      p[i] = c(rng);
      q[i] = c(rng);
    }
    const auto path = random_monotone_path(rng, p, q);
    const double expected = std::max(vertex_side(path, p, q), bisector_oracle(path, p, q));
    EXPECT_NEAR(hausdorff(path, p, q, PathModel::LatticePoints).value, expected, 1e-9);
    EXPECT_NEAR(hausdorff(path, p, q).value, vertex_side(path, p, q), 1e-9);
  }
}

TEST(HausdorffProperty, ReversalIsExactlySymmetric) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<Int> c(-30, 30);
  for (int rep = 0; rep < 300; ++rep) {
    Point p{c(rng), c(rng), c(rng)}, q{c(rng), c(rng), c(rng)};
    const auto path = random_monotone_path(rng, p, q);
    for (PathModel m : {PathModel::Polyline, PathModel::LatticePoints}) {
      EXPECT_EQ(hausdorff(path, p, q, m).value, hausdorff(path.reversed(), q, p, m).value);
    }
  }
}

TEST(Sweep, RadiusOneIsZero) {
  const auto sys = make_system(TocCds{make_order(Natural{})}, 2);
  EXPECT_EQ(max_hausdorff_over_ball(sys, {0, 0}, 1).max_value, 0.0);
}

TEST(Sweep, BoundingBoxMatchesClosedForm) {
  const auto sys = make_system(BoundingBox{}, 2);
  for (BallNorm norm : {BallNorm::Euclidean, BallNorm::Manhattan}) {
    for (Int n : {5, 17, 40}) {
      SweepOptions opt;
      opt.norm = norm;
      EXPECT_NEAR(max_hausdorff_over_ball(sys, {0, 0}, n, opt).max_value,
                  bounding_box_closed_form(n, norm), 1e-12)
          << n;
    }
  }
}

TEST(Sweep, FastPathAgreesWithDirectComputation) {
  std::map<Slope, OrderView> mixed{{Slope{1, 1}, make_order(VanDerCorput{0})},
                                   {Slope{1, -1}, make_order(Theta1Swap{})},
                                   {Slope{-1, 1}, make_order(Tau{TauKind::OpEp})},
                                   {Slope{-1, -1}, make_order(Alpha{2})}};
  const std::vector<SegmentSystem> systems{
      make_system(TocCds{make_order(Tau{TauKind::OpEp})}, 2),
      make_system(TocCds{make_order(VanDerCorput{0})}, 2),
      make_system(TocCdr{make_order(VanDerCorput{0}), {0, 0}}, 2),
      make_system(PerSlopeCdr{{0, 0}, mixed}, 2),
      make_system(BoundingBox{}, 2),
      make_system(Rounding{}, 2)};
  for (const auto& sys : systems) {
    for (BallNorm norm : {BallNorm::Euclidean, BallNorm::Manhattan}) {
      SweepOptions opt;
      opt.norm = norm;
      const auto fast = max_hausdorff_over_ball(sys, {0, 0}, 12, opt);
      const auto slow = brute_sweep(sys, {0, 0}, 12, norm, std::nullopt);
      EXPECT_EQ(fast.max_value, slow.max_value) << sys.name();
      EXPECT_EQ(fast.argmax, slow.argmax) << sys.name();
      EXPECT_EQ(fast.targets, slow.targets);
    }
  }
}

TEST(Sweep, PlaneRestrictionInThreeDimensions) {
  const Point p{0, 0, 0};
  const auto sys = make_system(TocCdr{make_order(VanDerCorput{0}), p}, 3);
  SweepOptions opt;
  opt.plane = Plane{0, 2};
  const auto fast = max_hausdorff_over_ball(sys, p, 9, opt);
  const auto slow = brute_sweep(sys, p, 9, BallNorm::Euclidean, Plane{0, 2});
  EXPECT_EQ(fast.max_value, slow.max_value);
  EXPECT_EQ(fast.argmax, slow.argmax);
}

TEST(Sweep, ThreadCountDoesNotChangeTheResult) {
  const auto sys = make_system(TocCds{make_order(VanDerCorput{0})}, 2);
  SweepOptions one, four;
  four.threads = 4;
  const auto a = max_hausdorff_over_ball(sys, {0, 0}, 30, one);
  const auto b = max_hausdorff_over_ball(sys, {0, 0}, 30, four);
  EXPECT_EQ(a.max_value, b.max_value);
  EXPECT_EQ(a.argmax, b.argmax);
}

TEST(Sweep, WrongApexIsADomainError) {
  const auto sys = make_system(TocCdr{make_order(Natural{}), {1, 1}}, 2);
  EXPECT_THROW((void)max_hausdorff_over_ball(sys, {0, 0}, 4), DomainError);
}

TEST(SweepProperty, ParityOrderGrowsLinearly) {
  const auto sys = make_system(TocCds{make_order(Tau{TauKind::OpEp})}, 2);
  for (Int n : {20, 40, 60}) {
    EXPECT_GE(max_hausdorff_over_ball(sys, {0, 0}, n).max_value,
              static_cast<double>(n) / 5.0 - 1.0)
        << n;
  }
}

TEST(SweepProperty, BitReversalGrowsSlowly) {
  const auto sys = make_system(TocCdr{make_order(VanDerCorput{0}), {0, 0}}, 2);
  SweepOptions opt;
  opt.norm = BallNorm::Manhattan;
  const double base = max_hausdorff_over_ball(sys, {0, 0}, 32, opt).max_value / 5.0;
  for (int k = 6; k <= 8; ++k) {
    const double m = max_hausdorff_over_ball(sys, {0, 0}, Int{1} << k, opt).max_value;
    EXPECT_LE(m / k, 2.0 * base) << k;
  }
}

namespace {

// O(n^4): every position interval against every value interval.
double brute_discrepancy(const OrderView& view, Int n) {
  const auto ranks = window_ranks(view, {0, n - 1});
  double best = 0;
  for (Int i0 = 0; i0 < n; ++i0) {
    for (Int i1 = i0; i1 < n; ++i1) {
      for (Int j0 = 0; j0 < n; ++j0) {
        for (Int j1 = j0; j1 < n; ++j1) {
          Int count = 0;
          for (Int v = j0; v <= j1; ++v) {
            const Int r = static_cast<Int>(ranks[static_cast<std::size_t>(v)]) - 1;
            count += (r >= i0 && r <= i1);
          }
          const double expect = static_cast<double>((i1 - i0 + 1) * (j1 - j0 + 1)) / static_cast<double>(n);
          best = std::max(best, std::abs(static_cast<double>(count) - expect));
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST(Discrepancy, MatchesBruteForce) {
  ExplicitWindow e{{0, 9}, {3, 1, 5, 7, 9, 8, 6, 4, 2, 0}, {}};
  validate(e);
  const std::vector<std::pair<OrderView, Int>> cases{
      {make_order(Natural{}), 24},          {make_order(VanDerCorput{0}), 32},
      {make_order(VanDerCorput{0}), 27},    {make_order(Tau{TauKind::OpEp}), 20},
      {make_order(Alpha{3}), 25},           {make_order(e), 10},
      {reverse(make_order(Natural{})), 16}, {make_order(Theta1Swap{}), 12}};
  for (const auto& [view, n] : cases) {
    EXPECT_NEAR(discrepancy(view, n), brute_discrepancy(view, n), 1e-12) << view.describe();
  }
}

TEST(Discrepancy, ReversalMatchesNatural) {
  for (Int n : {8, 33, 100}) {
    EXPECT_DOUBLE_EQ(discrepancy(reverse(make_order(Natural{})), n),
                     discrepancy(make_order(Natural{}), n));
  }
}

TEST(Discrepancy, BitReversalIsLogarithmic) {
  const auto vdc = make_order(VanDerCorput{0});
  const double base = discrepancy(vdc, 16) / 4.0;
  for (int k = 5; k <= 10; ++k) {
    EXPECT_LE(discrepancy(vdc, Int{1} << k) / k, 1.5 * base) << k;
  }
}

TEST(Discrepancy, RejectsOversizedWindows) {
  EXPECT_THROW((void)discrepancy(make_order(Natural{}), kMaxDiscrepancyN + 1), ContractError);
  EXPECT_THROW((void)discrepancy(make_order(Natural{}), 0), ContractError);
}
