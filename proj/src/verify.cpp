#include "cdskit/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>

namespace cdskit {
namespace {

bool is_ray_system(const SegmentSystem& s) { return s.apex().has_value(); }

std::optional<AxiomWitness> s1_failure(const DigitalPath& path, const Point& p, const Point& q) {
  if (path.empty() || path.source() != p || path.target() != q) {
    return AxiomWitness{p, q, std::nullopt, path, std::nullopt, "endpoints do not match the pair"};
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (l1_distance(path.points[i - 1], path.points[i]) != 1) {
      return AxiomWitness{p, q, path.points[i], path, std::nullopt,
                          "consecutive points are not grid neighbours"};
    }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> s5_failure(const DigitalPath& path, const Point& p, const Point& q) {
  if (static_cast<Int>(path.size()) != l1_distance(p, q) + 1) {
    return AxiomWitness{p, q, std::nullopt, path, std::nullopt,
                        "path length differs from the L1 distance"};
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Point& a = path.points[i - 1];
    const Point& b = path.points[i];
    for (int k = 0; k < p.dim(); ++k) {
      const Int step = b[k] - a[k];
      if (step == 0) continue;
      const Int want = q[k] - p[k];
      if (want == 0 || (step > 0) != (want > 0)) {
        return AxiomWitness{p, q, b, path, std::nullopt,
                            "coordinate x" + std::to_string(k + 1) + " is not monotone"};
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> s2_failure(const SegmentSystem& sys, const DigitalPath& path,
                                       const Point& p, const Point& q) {
  DigitalPath back = path_of(sys, q, p);
  if (back == path.reversed()) return std::nullopt;
  return AxiomWitness{p, q, std::nullopt, path, std::move(back),
                      "R(q,p) is not the reverse of R(p,q)"};
}

std::optional<AxiomWitness> s3_failure(const SegmentSystem& sys, const DigitalPath& path,
                                       const Point& p, const Point& q) {
  const bool ray = is_ray_system(sys);
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const Point& r = path.points[k];
    DigitalPath head = path_of(sys, p, r);
    if (head != path.prefix(k)) {
      return AxiomWitness{p, q, r, path, std::move(head), "R(p,r) leaves R(p,q)"};
    }
    if (!ray) {
      DigitalPath tail = path_of(sys, r, q);
      if (!std::equal(tail.points.begin(), tail.points.end(),
                      path.points.begin() + static_cast<std::ptrdiff_t>(k),
                      path.points.end()) ||
          tail.size() != path.size() - k) {
        return AxiomWitness{p, q, r, path, std::move(tail), "R(r,q) leaves R(p,q)"};
      }
    }
  }
  return std::nullopt;
}

bool is_prefix_of(const DigitalPath& a, const DigitalPath& b) {
  return a.size() <= b.size() && std::equal(a.points.begin(), a.points.end(), b.points.begin());
}

// Single-axis extensions in axis order, then the diagonal extension q + t.
std::vector<Point> prolongation_candidates(const Point& p, const Point& q) {
  const Slope t = slope_of(p, q);
  const AxisOrder ax = axis_order(t);
  std::vector<Point> out;
  for (int k = 0; k < q.dim(); ++k) {
    Point c = q;
    c[ax[k]] += t[ax[k]];
    out.push_back(c);
  }
  Point diag = q;
  for (int i = 0; i < q.dim(); ++i) diag[i] += t[i];
  out.push_back(diag);
  return out;
}

std::optional<AxiomWitness> s4_failure(const SegmentSystem& sys, const DigitalPath& path,
                                       const Point& p, const Point& q) {
  for (const Point& c : prolongation_candidates(p, q)) {
    if (is_prefix_of(path, path_of(sys, p, c))) return std::nullopt;
  }
  return AxiomWitness{p, q, std::nullopt, path, std::nullopt,
                      "no single-step or diagonal extension of q keeps R(p,q)"};
}

std::optional<AxiomWitness> check_with_path(const SegmentSystem& sys, Axiom axiom,
                                            const DigitalPath& path, const Point& p,
                                            const Point& q) {
  switch (axiom) {
    case Axiom::S1: return s1_failure(path, p, q);
    case Axiom::S2: return s2_failure(sys, path, p, q);
    case Axiom::S3: return s3_failure(sys, path, p, q);
    case Axiom::S4: return s4_failure(sys, path, p, q);
    case Axiom::S5: return s5_failure(path, p, q);
  }
  return std::nullopt;
}

AxiomWitness shrink(const SegmentSystem& sys, Axiom axiom, AxiomWitness w) {
  const bool ray = is_ray_system(sys);
  bool progress = true;
  while (progress) {
    progress = false;
    const Slope t = slope_of(w.p, w.q);
    const AxisOrder ax = axis_order(t);
    std::vector<std::pair<Point, Point>> candidates;
    for (int k = 0; k < w.p.dim(); ++k) {
      const int i = ax[k];
      if (w.p[i] == w.q[i]) continue;
      Point q2 = w.q;
      q2[i] -= t[i];
      candidates.emplace_back(w.p, q2);
    }
    if (!ray) {
      for (int k = 0; k < w.p.dim(); ++k) {
        const int i = ax[k];
        if (w.p[i] == w.q[i]) continue;
        Point p2 = w.p;
        p2[i] += t[i];
        candidates.emplace_back(p2, w.q);
      }
    }
    for (const auto& [p2, q2] : candidates) {
      if (auto f = check_pair(sys, axiom, p2, q2)) {
        w = std::move(*f);
        progress = true;
        break;
      }
    }
  }
  return w;
}

Point random_point(const Box& region, std::mt19937_64& rng) {
  Point out(region.dim());
  for (int i = 0; i < region.dim(); ++i) {
    std::uniform_int_distribution<Int> dist(region.lo[i], region.hi[i]);
    out[i] = dist(rng);
  }
  return out;
}

}  // namespace

std::string to_string(Axiom a) { return "S" + std::to_string(static_cast<int>(a) + 1); }

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  return std::none_of(axioms.begin(), axioms.end(),
                      [](const AxiomStatus& a) { return a.status == Status::Fail; });
}

bool AxiomReport::any_fail() const { return !all_pass(); }

std::optional<AxiomWitness> check_pair(const SegmentSystem& system, Axiom axiom, const Point& p,
                                       const Point& q) {
  if (axiom == Axiom::S2 && is_ray_system(system)) return std::nullopt;
  const DigitalPath path = path_of(system, p, q);
  return check_with_path(system, axiom, path, p, q);
}

AxiomReport check_axioms(const SegmentSystem& system, const Box& region,
                         const AxiomOptions& options) {
  require_same_dim(system.dim(), region.dim(), "check_axioms");
  AxiomReport report;
  report.system = system.name();
  report.region = region;
  report.seed = options.seed;

  const auto apex = system.apex();
  const std::uint64_t points = region.count();
  const std::uint64_t total = apex ? points : points * points;
  report.exhaustive = total <= options.pair_budget;

  std::vector<std::pair<Point, Point>> pairs;
  if (report.exhaustive) {
    const auto all = region.points();
    if (apex) {
      for (const Point& q : all) pairs.emplace_back(*apex, q);
    } else {
      for (const Point& p : all) {
        for (const Point& q : all) pairs.emplace_back(p, q);
      }
    }
  } else {
    std::mt19937_64 rng(options.seed);
    pairs.reserve(options.pair_budget);
    for (std::uint64_t i = 0; i < options.pair_budget; ++i) {
      const Point p = apex ? *apex : random_point(region, rng);
      pairs.emplace_back(p, random_point(region, rng));
    }
  }

  constexpr std::array<Axiom, 5> kAll{Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4, Axiom::S5};
  std::array<bool, 5> failed{};
  bool any_interior = false;
  for (const auto& [p, q] : pairs) {
    const DigitalPath path = path_of(system, p, q);
    const bool interior = region.interior(q);
    any_interior = any_interior || interior;
    for (Axiom a : kAll) {
      const auto idx = static_cast<std::size_t>(a);
      if (failed[idx]) continue;
      if (a == Axiom::S2 && apex) continue;
      if (a == Axiom::S4 && !interior) continue;
      // S2-S4 compare against other paths; they assume a well-formed path.
      if ((a == Axiom::S2 || a == Axiom::S3 || a == Axiom::S4) &&
          (failed[0] || failed[4])) {
        continue;
      }
      if (auto w = check_with_path(system, a, path, p, q)) {
        failed[idx] = true;
        report.axioms[idx].status = Status::Fail;
        report.axioms[idx].witness = options.shrink ? shrink(system, a, std::move(*w)) : *w;
        report.axioms[idx].detail = report.axioms[idx].witness->note;
      }
    }
    ++report.pairs_tested;
  }
  if (apex) {
    report.axioms[static_cast<std::size_t>(Axiom::S2)] = {
        Status::Skipped, "ray systems only define segments leaving the apex", std::nullopt};
  }
  if (!any_interior && !failed[static_cast<std::size_t>(Axiom::S4)]) {
    report.axioms[static_cast<std::size_t>(Axiom::S4)] = {
        Status::Skipped, "no tested target lies strictly inside the region", std::nullopt};
  }
  return report;
}

AxiomReport check_path_axioms(const DigitalPath& path) {
  AxiomReport report;
  report.system = "stored path";
  if (path.empty()) throw ContractError("empty path");
  const Point& p = path.source();
  const Point& q = path.target();
  Point lo = p;
  Point hi = p;
  for (const Point& m : path.points) {
    for (int i = 0; i < m.dim(); ++i) {
      lo[i] = std::min(lo[i], m[i]);
      hi[i] = std::max(hi[i], m[i]);
    }
  }
  report.region = Box{lo, hi};
  report.pairs_tested = 1;
  for (Axiom a : {Axiom::S2, Axiom::S3, Axiom::S4}) {
    report.axioms[static_cast<std::size_t>(a)] = {Status::Skipped,
                                                  "needs a segment system, not a single path",
                                                  std::nullopt};
  }
  for (Axiom a : {Axiom::S1, Axiom::S5}) {
    auto w = a == Axiom::S1 ? s1_failure(path, p, q) : s5_failure(path, p, q);
    if (w) {
      auto& slot = report.axioms[static_cast<std::size_t>(a)];
      slot.status = Status::Fail;
      slot.detail = w->note;
      slot.witness = std::move(w);
    }
  }
  return report;
}

IntersectionResult intersection_components(const DigitalPath& a, const DigitalPath& b) {
  IntersectionResult out;
  const std::set<Point> in_b(b.points.begin(), b.points.end());
  for (const Point& m : a.points) {
    if (in_b.contains(m)) out.common.push_back(m);
  }
  std::set<Point> unseen(out.common.begin(), out.common.end());
  while (!unseen.empty()) {
    ++out.components;
    std::deque<Point> queue{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!queue.empty()) {
      const Point m = queue.front();
      queue.pop_front();
      for (int i = 0; i < m.dim(); ++i) {
        for (Int s : {-1, 1}) {
          Point nb = m;
          nb[i] += s;
          if (auto it = unseen.find(nb); it != unseen.end()) {
            unseen.erase(it);
            queue.push_back(nb);
          }
        }
      }
    }
  }
  out.connected = out.components <= 1;
  return out;
}

IntersectionResult check_intersection_connected(const SegmentSystem& system, const Point& p,
                                                const Point& q, const Point& p2,
                                                const Point& q2) {
  return intersection_components(path_of(system, p, q), path_of(system, p2, q2));
}

SubtreeSets subtree_sets(const OrderView& theta, const Point& p, const Point& q, const Slope& t,
                         Int n, Plane plane) {
  require_same_dim(p.dim(), q.dim(), "subtree_sets");
  require_same_dim(p.dim(), t.dim(), "subtree_sets");
  if (plane.first == plane.second || plane.first < 0 || plane.second < 0 ||
      plane.first >= p.dim() || plane.second >= p.dim()) {
    throw ContractError("plane axes must be two distinct coordinates");
  }
  for (int i = 0; i < p.dim(); ++i) {
    if (i != plane.first && i != plane.second && p[i] != q[i]) {
      throw ContractError("q must differ from p only inside the plane");
    }
  }
  if (!orthant_contains(p, t, q)) throw ContractError("q is not in the orthant of p");
  if (p == q) throw ContractError("subtree sets need q != p");

  const AxisOrder ax = axis_order(t);
  const bool first_is_first = ax.position_of(plane.first) < ax.position_of(plane.second);
  const int a1 = first_is_first ? plane.first : plane.second;
  const int a2 = first_is_first ? plane.second : plane.first;

  SubtreeSets s;
  s.s1 = std::abs(q[a1] - p[a1]);
  s.s2 = std::abs(q[a2] - p[a2]);
  if (n <= s.s1 + s.s2) throw ContractError("n must exceed s1 + s2");

  const Int tp = dot(t, p);
  const Int tq = dot(t, q);
  s.left_window = Interval{tp, tq - 1};
  s.right_window = Interval{tq, tp + n - 1};
  const Interval complete{tp, tp + n - 1};

  const auto left = sorted_window(theta, s.left_window);
  const auto ranks = window_ranks(theta, complete);
  auto pos = [&](Int v) { return static_cast<Int>(ranks[static_cast<std::size_t>(v - tp)]); };

  s.i_a = s.s1 == 0 ? 0 : pos(left[static_cast<std::size_t>(s.s1 - 1)]);
  s.i_b = s.s2 == 0 ? n + 1 : pos(left[static_cast<std::size_t>(s.s1)]);
  for (Int v = s.right_window.lo; v <= s.right_window.hi; ++v) {
    const Int r = pos(v);
    if (r < s.i_a) {
      s.X1.push_back(v);
    } else if (r < s.i_b) {
      s.X2.push_back(v);
    } else {
      s.X3.push_back(v);
    }
  }
  return s;
}

bool passes_through_oracle(const OrderView& theta, const Point& p, const Point& q,
                           const Slope& t, const Point& r) {
  return build_segment(theta, p, r, t).contains(q);
}

PrefixLemmaResult check_prefix_lemma(const OrderView& theta, const Point& p, const Point& q,
                                     const Slope& t, Int n, Plane plane) {
  PrefixLemmaResult out;
  out.sets = subtree_sets(theta, p, q, t, n, plane);
  const AxisOrder ax = axis_order(t);
  const bool first_is_first = ax.position_of(plane.first) < ax.position_of(plane.second);
  const int a1 = first_is_first ? plane.first : plane.second;
  const int a2 = first_is_first ? plane.second : plane.first;
  const auto& s = out.sets;

  for (Int k = 0; k <= n; ++k) {
    Point r = p;
    r[a1] += t[a1] * k;
    r[a2] += t[a2] * (n - k);
    const bool oracle = passes_through_oracle(theta, p, q, t, r);
    const bool predicate = k >= s.s1 && n - k >= s.s2 && s.i_a <= k && k <= s.i_b - 1;
    ++out.points_checked;
    if (oracle != predicate) {
      out.holds = false;
      out.witness = PrefixLemmaWitness{r, oracle, predicate};
      return out;
    }
  }
  return out;
}

SubtreeResult check_subtree_property(const OrderView& theta_p, const OrderView& theta_q,
                                     const Point& p, const Point& q, const Slope& t, Int n,
                                     Plane plane) {
  SubtreeResult out;
  out.sets = subtree_sets(theta_p, p, q, t, n, plane);
  const auto& s = out.sets;
  auto require_before = [&](Int u, Int v, int rule) {
    if (theta_q.less(u, v)) return true;
    out.holds = false;
    out.witness = std::make_pair(u, v);
    out.rule = rule;
    return false;
  };
  for (Int u : s.X1) {
    for (Int v : s.X2) {
      if (!require_before(u, v, 1)) return out;
    }
  }
  for (const auto* xs : {&s.X1, &s.X2}) {
    for (Int u : *xs) {
      for (Int v : s.X3) {
        if (!require_before(u, v, 2)) return out;
      }
    }
  }
  for (Int u : s.X2) {
    for (Int v : s.X2) {
      if (u != v && theta_p.less(u, v) && !require_before(u, v, 3)) return out;
    }
  }
  return out;
}

std::optional<DisconnectedPair> find_disconnected_pair(const SegmentSystem& system,
                                                       const Box& region) {
  const auto pts = region.points();
  const auto apex = system.apex();
  std::vector<Point> sources = apex ? std::vector<Point>{*apex} : pts;

  for (const Point& p : sources) {
    std::vector<DigitalPath> paths;
    paths.reserve(pts.size());
    for (const Point& q : pts) paths.push_back(path_of(system, p, q));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        auto inter = intersection_components(paths[i], paths[j]);
        if (!inter.connected) return DisconnectedPair{p, pts[i], p, pts[j], std::move(inter)};
      }
    }
  }
  if (apex) return std::nullopt;

  std::vector<std::pair<Point, Point>> pairs;
  std::vector<DigitalPath> paths;
  for (const Point& p : pts) {
    for (const Point& q : pts) {
      if (p < q) {
        pairs.emplace_back(p, q);
        paths.push_back(path_of(system, p, q));
      }
    }
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      auto inter = intersection_components(paths[i], paths[j]);
      if (!inter.connected) {
        return DisconnectedPair{pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second,
                                std::move(inter)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace cdskit
