// Command-line front end: build segments, check order conditions and axioms,
// measure Hausdorff distances and render SVG figures.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cdskit/io.hpp"
#include "cdskit/metrics.hpp"
#include "cdskit/svg.hpp"
#include "cdskit/systems.hpp"
#include "cdskit/toc.hpp"
#include "cdskit/verify.hpp"

using namespace cdskit;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;
constexpr int kInconclusive = 3;

struct Setting {
  std::uint64_t value = 0;
  std::string source = "default";
};

// Flag beats environment beats default.
Setting resolve(const std::optional<std::uint64_t>& flag, const char* env, std::uint64_t fallback) {
  if (flag) return {*flag, "flag"};
  if (const char* e = std::getenv(env); e != nullptr && *e != '\0') {
    try {
      return {std::stoull(e, nullptr, 0), "env"};
    } catch (const std::exception&) {
      throw DomainError(std::string(env) + " is not an unsigned integer: '" + e + "'");
    }
  }
  return {fallback, "default"};
}

Json config_json(const Setting& seed, const Setting& threads) {
  return Json{{"seed", seed.value},
              {"seed_source", seed.source},
              {"threads", threads.value},
              {"threads_source", threads.source}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

std::string axis_moved(const Point& a, const Point& b) {
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return std::string(b[i] > a[i] ? "+" : "-") + "x" + std::to_string(i + 1);
  }
  return "";
}

void print_path(std::ostream& os, const DigitalPath& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    os << to_string(path.points[i]);
    if (i) os << "  " << axis_moved(path.points[i - 1], path.points[i]);
    os << "\n";
  }
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(6);
  s << std::fixed << v;
  return s.str();
}

// Everything the subcommands share; each one reads the fields it needs.
struct Options {
  std::string order = "natural";
  std::string kind = "toc-cds";
  std::string system_file;
  std::string p;
  std::string q;
  int dim = 0;
  Int window = 0;
  std::vector<Int> n;
  bool json = false;
  std::string svg;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> threads;
  std::string plane;
  std::uint64_t budget = 20000;
  Int region = 4;
  std::string path_file;
  std::string model = "polyline";
  std::string norm = "euclidean";
  bool direct = false;
  bool full_ball = false;
  std::vector<std::string> overrides;
  std::string demo;
};

int infer_dim(const Options& o) {
  int d = o.dim;
  for (const std::string* s : {&o.p, &o.q}) {
    if (s->empty()) continue;
    const int pd = parse_point(*s).dim();
    if (d != 0 && d != pd) {
      throw DomainError("dimension mismatch: --dim/points disagree (" + std::to_string(d) + " vs " +
                        std::to_string(pd) + ")");
    }
    d = pd;
  }
  return d == 0 ? 2 : d;
}

Point point_or_origin(const std::string& s, int dim) {
  if (s.empty()) return Point(dim);
  Point p = parse_point(s);
  require_same_dim(p.dim(), dim, "point flag");
  return p;
}

SegmentSystem build_system(const Options& o, int dim, const Point& apex) {
  if (!o.system_file.empty()) {
    SegmentSystem s = system_from_json(read_json_file(o.system_file));
    if (s.dim() != dim) throw DomainError("system dimension differs from the points given");
    return s;
  }
  if (o.kind == "toc-cds") return make_system(TocCds{parse_order(o.order)}, dim);
  if (o.kind == "toc-cdr") return make_system(TocCdr{parse_order(o.order), apex}, dim);
  if (o.kind == "bounding-box") return make_system(BoundingBox{}, dim);
  if (o.kind == "rounding") return make_system(Rounding{}, dim);
  throw DomainError("unknown --kind '" + o.kind + "'");
}

int run_segment(const Options& o) {
  const int dim = infer_dim(o);
  if (o.p.empty() || o.q.empty()) throw DomainError("segment needs --p and --q");
  const Point p = point_or_origin(o.p, dim);
  const Point q = point_or_origin(o.q, dim);
  const OrderView theta = parse_order(o.order);
  const Slope t = slope_of(p, q);
  const DigitalPath path = o.direct ? build_segment(theta, p, q, t) : cds_segment(theta, p, q);
  if (o.json) {
    Json j = to_json(StoredPath{path, o.order, t});
    std::cout << canonical(j);
  } else {
    std::cout << "segment " << to_string(p) << " -> " << to_string(q) << "\n";
    std::cout << "order " << theta.describe() << ", slope " << to_string(t) << ", axis-order "
              << to_string(axis_order(t)) << ", " << path.size() - 1 << " steps\n";
    print_path(std::cout, path);
  }
  if (!o.svg.empty()) {
    const auto h = hausdorff(path, p, q);
    write_file(o.svg, render_svg(path, p, q, h, {o.plane.empty() ? Plane{} : parse_plane(o.plane, dim)}));
  }
  return kOk;
}

int run_check_cds(const Options& o) {
  const OrderView theta = parse_order(o.order);
  const Int W = o.window == 0 ? 32 : o.window;
  const auto r = check_cds_condition(theta, W);
  if (o.json) {
    Json j{{"order", o.order}, {"window", {-W, W}}, {"holds", r.holds}};
    j["shift_two"] = {{"holds", r.shift_two.holds}};
    if (r.shift_two.witness) j["shift_two"]["witness"] = to_json(*r.shift_two.witness);
    j["neg_shift_inverse"] = {{"holds", r.neg_shift_inverse.holds}};
    if (r.neg_shift_inverse.witness) {
      j["neg_shift_inverse"]["witness"] = to_json(*r.neg_shift_inverse.witness);
    }
    std::cout << canonical(j);
  } else {
    std::cout << "order " << theta.describe() << " on " << to_string(Interval{-W, W}) << "\n";
    auto line = [](const char* name, const ConditionResult& c, const char* rel) {
      std::cout << name << ": " << (c.holds ? "holds" : "fails");
      if (c.witness) {
        const auto& w = *c.witness;
        std::cout << "  (" << w.u << " < " << w.v << " but " << w.image_u << " > " << w.image_v
                  << " " << rel << ")";
      }
      std::cout << "\n";
    };
    line("theta = theta+2", r.shift_two, "after shifting by 2");
    line("theta = -(theta+1)^-1", r.neg_shift_inverse, "after u -> -u-1");
    std::cout << (r.holds ? "generates consistent segments on the tested window\n"
                          : "does not generate consistent segments\n");
  }
  return r.holds ? kOk : kViolation;
}

int run_check_cdr(const Options& o) {
  const int dim = infer_dim(o);
  const Point p = point_or_origin(o.p, dim);
  const OrderView theta = parse_order(o.order);
  auto orders = derived_orders(theta, p);
  for (const std::string& ov : o.overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos) throw DomainError("--slope-order expects <signs>=<order>");
    const Slope t = parse_slope(ov.substr(0, eq));
    require_same_dim(t.dim(), dim, "--slope-order");
    orders.insert_or_assign(t, parse_order(ov.substr(eq + 1)));
  }
  const Int len = o.window == 0 ? 64 : o.window;
  const auto r = check_cdr_condition(orders, p, len);
  if (o.json) {
    Json j{{"order", o.order}, {"p", to_json(p)}, {"window_len", len}, {"holds", r.holds},
           {"vacuous", r.vacuous}};
    if (r.witness) {
      j["witness"] = {{"t", to_json(r.witness->t)}, {"t_prime", to_json(r.witness->t_prime)},
                      {"u", r.witness->u}, {"v", r.witness->v}};
    }
    std::cout << canonical(j);
  } else {
    std::cout << "rays at " << to_string(p) << " from " << theta.describe() << ", window length "
              << len << "\n";
    if (r.vacuous) {
      std::cout << "holds: in the plane the quadrant orders are independent\n";
    } else if (r.holds) {
      std::cout << "holds: all slope orders agree after translation\n";
    } else {
      const auto& w = *r.witness;
      std::cout << "fails: slope " << to_string(w.t) << " puts " << w.u << " before " << w.v
                << ", slope " << to_string(w.t_prime) << " disagrees after translation\n";
    }
  }
  return r.holds ? kOk : kViolation;
}

int run_classify(const Options& o) {
  const OrderView theta = parse_order(o.order);
  const Int W = o.window == 0 ? 32 : o.window;
  const auto c = classify_family(theta, Interval{-W, W});
  if (o.json) {
    std::cout << canonical(to_json(c));
  } else {
    std::cout << c.name() << "\n";
    if (!c.detail.empty()) std::cout << "detail: " << c.detail << "\n";
    if (c.witness) {
      std::cout << "witness: " << c.witness->u << " < " << c.witness->v << ", images "
                << c.witness->image_u << ", " << c.witness->image_v << "\n";
    }
  }
  switch (c.kind) {
    case FamilyClass::Kind::NotInF: return kViolation;
    case FamilyClass::Kind::Inconclusive: return kInconclusive;
    default: return kOk;
  }
}

void print_report(const AxiomReport& r) {
  std::cout << r.system << " on [" << to_string(r.region.lo) << ", " << to_string(r.region.hi)
            << "], " << r.pairs_tested << " pairs (" << (r.exhaustive ? "exhaustive" : "sampled")
            << ", seed " << r.seed << ")\n";
  for (std::size_t i = 0; i < r.axioms.size(); ++i) {
    const auto& a = r.axioms[i];
    std::cout << to_string(static_cast<Axiom>(i)) << ": " << to_string(a.status);
    if (!a.detail.empty()) std::cout << "  " << a.detail;
    std::cout << "\n";
    if (a.witness) {
      const auto& w = *a.witness;
      std::cout << "  p=" << to_string(w.p) << " q=" << to_string(w.q);
      if (w.r) std::cout << " r=" << to_string(*w.r);
      std::cout << "\n  path:  " << to_string(w.path) << "\n";
      if (w.other) std::cout << "  other: " << to_string(*w.other) << "\n";
    }
  }
}

int run_axioms(const Options& o, const Setting& seed, const Setting& threads) {
  if (!o.path_file.empty()) {
    const StoredPath stored = stored_path_from_json(read_json_file(o.path_file));
    const AxiomReport r = check_path_axioms(stored.path);
    if (o.json) {
      std::cout << canonical(Json{{"config", config_json(seed, threads)},
                                  {"input", to_json(stored)},
                                  {"report", to_json(r)}});
    } else {
      print_report(r);
    }
    return r.all_pass() ? kOk : kViolation;
  }
  const int dim = infer_dim(o);
  const Point apex = point_or_origin(o.p, dim);
  const SegmentSystem sys = build_system(o, dim, apex);
  AxiomOptions opt;
  opt.pair_budget = o.budget;
  opt.seed = seed.value;
  const AxiomReport r = check_axioms(sys, cube(dim, -o.region, o.region), opt);
  if (o.json) {
    std::cout << canonical(Json{{"config", config_json(seed, threads)}, {"report", to_json(r)}});
  } else {
    print_report(r);
  }
  return r.all_pass() ? kOk : kViolation;
}

int run_hausdorff(const Options& o) {
  const int dim = infer_dim(o);
  if (o.p.empty() || o.q.empty()) throw DomainError("hausdorff needs --p and --q");
  const Point p = point_or_origin(o.p, dim);
  const Point q = point_or_origin(o.q, dim);
  const SegmentSystem sys = build_system(o, dim, p);
  const DigitalPath path = path_of(sys, p, q);
  PathModel model = PathModel::Polyline;
  if (o.model == "points") {
    model = PathModel::LatticePoints;
  } else if (o.model != "polyline") {
    throw DomainError("--model must be polyline or points");
  }
  const auto h = hausdorff(path, p, q, model);
  if (o.json) {
    Json j = to_json(h);
    j["system"] = sys.name();
    j["p"] = to_json(p);
    j["q"] = to_json(q);
    std::cout << canonical(j);
  } else {
    std::cout << "H = " << format_double(h.value) << "  at " << to_string(h.witness_lattice)
              << " ("
              << (h.direction == HausdorffResult::Direction::PathToSegment ? "path to segment"
                                                                           : "segment to path")
              << ")\n";
  }
  if (!o.svg.empty()) {
    write_file(o.svg, render_svg(path, p, q, h, {o.plane.empty() ? Plane{} : parse_plane(o.plane, dim)}));
  }
  return kOk;
}

int run_sweep(const Options& o, const Setting& threads) {
  const int dim = infer_dim(o);
  const Point p = point_or_origin(o.p, dim);
  const SegmentSystem sys = build_system(o, dim, p);
  if (o.n.empty()) throw DomainError("sweep needs --n");
  SweepOptions opt;
  opt.threads = static_cast<int>(threads.value);
  if (o.norm == "manhattan") {
    opt.norm = BallNorm::Manhattan;
  } else if (o.norm != "euclidean") {
    throw DomainError("--norm must be euclidean or manhattan");
  }
  if (o.full_ball && !o.plane.empty()) throw DomainError("--full-ball and --plane exclude each other");
  if (!o.plane.empty()) {
    opt.plane = parse_plane(o.plane, dim);
  } else if (dim > 2 && !o.full_ball) {
    opt.plane = Plane{0, 1};
  }
  if (o.full_ball && dim > 2) {
    std::cerr << "warning: full-ball sweep in dimension " << dim
              << " visits O(n^" << dim << ") targets\n";
  }
  std::cout << "n,max_H,argmax,runtime_ms\n";
  std::optional<SweepResult> last;
  for (Int n : o.n) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = max_hausdorff_over_ball(sys, p, n, opt);
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::string arg;
    for (int i = 0; i < r.argmax.dim(); ++i) arg += (i ? " " : "") + std::to_string(r.argmax[i]);
    std::cout << n << "," << format_double(r.max_value) << "," << arg << ","
              << format_double(ms) << "\n";
    last = r;
  }
  if (!o.svg.empty() && last) {
    const DigitalPath path = path_of(sys, p, last->argmax);
    const auto h = hausdorff(path, p, last->argmax);
    write_file(o.svg, render_svg(path, p, last->argmax, h, {opt.plane.value_or(Plane{})}));
  }
  return kOk;
}

int run_discrepancy(const Options& o) {
  const OrderView theta = parse_order(o.order);
  if (o.n.size() == 1 && !o.json) {
    std::cout << format_double(discrepancy(theta, o.n.front())) << "\n";
    return kOk;
  }
  Json rows = Json::array();
  if (!o.json) std::cout << "n,discrepancy\n";
  for (Int n : o.n) {
    const double dv = discrepancy(theta, n);
    if (o.json) {
      rows.push_back({{"n", n}, {"discrepancy", dv}});
    } else {
      std::cout << n << "," << format_double(dv) << "\n";
    }
  }
  if (o.json) std::cout << canonical(Json{{"order", o.order}, {"rows", rows}});
  return kOk;
}

int run_render(const Options& o) {
  if (o.svg.empty()) throw DomainError("render needs --svg <file>");
  return run_hausdorff(o);
}

// Explicit orders behind the plane and space demos.
OrderView plane_demo_order() {
  return make_order(ExplicitWindow{{2, 11}, {5, 3, 2, 7, 9, 8, 11, 10, 6, 4}, {}});
}
OrderView space_demo_order() {
  return make_order(ExplicitWindow{{0, 9}, {3, 1, 5, 7, 9, 8, 6, 4, 2, 0}, {}});
}

int run_demo(const Options& o) {
  if (o.demo == "plane-path") {
    const Point p{1, 1};
    const Point q{8, 4};
    const OrderView theta = plane_demo_order();
    const Interval w{dot(Slope{1, 1}, p), dot(Slope{1, 1}, q) - 1};
    std::cout << "order 5<3<2<7<9<8<11<10<6<4 on " << to_string(w) << ", 7 steps in x1, 3 in x2\n";
    for (Int c = w.lo; c <= w.hi; ++c) {
      std::cout << "  rank(" << c << ") = " << rank_in_window(theta, c, w) << "\n";
    }
    print_path(std::cout, build_segment(theta, p, q, Slope{1, 1}));
    return kOk;
  }
  if (o.demo == "space-path") {
    const Point p{0, 0, 0};
    const Point q{2, -3, 5};
    const Slope t = slope_of(p, q);
    std::cout << "slope " << to_string(t) << ", axis-order " << to_string(axis_order(t))
              << ", window [" << dot(t, p) << "," << dot(t, q) - 1 << "]\n";
    print_path(std::cout, build_segment(space_demo_order(), p, q, t));
    return kOk;
  }
  if (o.demo == "swapped-order") {
    const Point p{0, 0, 2};
    PerSlopeCdr glued{p, {}};
    for (const Slope& t : all_slopes(3)) glued.orders.emplace(t, make_order(Theta1Swap{}));
    const SegmentSystem sys = make_system(std::move(glued), 3);
    const Point q{1, 1, 3};
    const Point q2{1, 1, 1};
    const DigitalPath a = path_of(sys, p, q);
    const DigitalPath b = path_of(sys, p, q2);
    std::cout << "theta1 used unchanged for every slope at " << to_string(p) << "\n";
    std::cout << "R(p," << to_string(q) << "):  " << to_string(a) << "\n";
    std::cout << "R(p," << to_string(q2) << "):  " << to_string(b) << "\n";
    const auto inter = intersection_components(a, b);
    std::cout << "common points:";
    for (const Point& m : inter.common) std::cout << " " << to_string(m);
    std::cout << "\nconnected: " << (inter.connected ? "yes" : "no") << " (" << inter.components
              << " components)\n";
    return kOk;
  }
  if (o.demo == "rounding") {
    const SegmentSystem sys = make_system(Rounding{}, 2);
    const auto found = find_disconnected_pair(sys, cube(2, 0, 12));
    if (!found) {
      std::cout << "no disconnected pair found in [0,12]^2\n";
      return kInconclusive;
    }
    const auto recheck =
        check_intersection_connected(sys, found->p, found->q, found->p2, found->q2);
    std::cout << "rounding R(" << to_string(found->p) << "," << to_string(found->q)
              << "):  " << to_string(path_of(sys, found->p, found->q)) << "\n";
    std::cout << "rounding R(" << to_string(found->p2) << "," << to_string(found->q2)
              << "):  " << to_string(path_of(sys, found->p2, found->q2)) << "\n";
    std::cout << "common points:";
    for (const Point& m : found->intersection.common) std::cout << " " << to_string(m);
    std::cout << "\nre-verified disconnected: " << (recheck.connected ? "no" : "yes") << "\n";
    return kOk;
  }
  throw DomainError("unknown demo '" + o.demo + "' (expected plane-path, space-path, swapped-order or rounding)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdskit: digital segments from total orders on the integers"};
  app.require_subcommand(1);
  Options o;

  auto order_opt = [&](CLI::App* s) {
    s->add_option("--order", o.order, "natural | theta1 | vdc:<a> | tau:<o+e+|o-e-|e+o+|e-o-> | "
                                      "alpha:<q> | alpha-inv:<q> | file:<path>");
  };
  auto system_opt = [&](CLI::App* s) {
    order_opt(s);
    s->add_option("--kind", o.kind, "toc-cds | toc-cdr | bounding-box | rounding");
    s->add_option("--system", o.system_file, "system spec JSON (overrides --order/--kind)");
    s->add_option("--dim", o.dim, "dimension");
  };
  auto common = [&](CLI::App* s) {
    s->add_flag("--json", o.json, "machine-readable output");
    s->add_option("--seed", o.seed, "sampling seed (env CDSKIT_SEED)");
    s->add_option("--threads", o.threads, "worker threads (env CDSKIT_THREADS)");
  };

  auto* seg = app.add_subcommand("segment", "build R(p,q)");
  order_opt(seg);
  seg->add_option("--p", o.p)->required();
  seg->add_option("--q", o.q)->required();
  seg->add_option("--dim", o.dim);
  seg->add_flag("--direct", o.direct, "use the order as given for the slope of (p,q)");
  seg->add_option("--svg", o.svg);
  seg->add_option("--plane", o.plane, "two axes, 1-based, e.g. 1,3");
  common(seg);

  auto* cdr = app.add_subcommand("check-cdr", "check that the slope orders at p glue into rays");
  order_opt(cdr);
  cdr->add_option("--p", o.p);
  cdr->add_option("--dim", o.dim);
  cdr->add_option("--window", o.window, "window length (default 64)");
  cdr->add_option("--slope-order", o.overrides, "replace one slope order: +1,+1,-1=theta1");
  common(cdr);

  auto* cds = app.add_subcommand("check-cds", "check theta = theta+2 and theta = -(theta+1)^-1");
  order_opt(cds);
  cds->add_option("--window", o.window, "W, tests [-W,W] (default 32)");
  common(cds);

  auto* cls = app.add_subcommand("classify", "classify an order against the consistent family");
  order_opt(cls);
  cls->add_option("--window", o.window, "W, tests [-W,W] (default 32)");
  common(cls);

  auto* ax = app.add_subcommand("axioms", "verify S1-S5 on a box");
  system_opt(ax);
  ax->add_option("--p", o.p, "apex for toc-cdr");
  ax->add_option("--region", o.region, "R, tests [-R,R]^d (default 4)");
  ax->add_option("--budget", o.budget, "pair budget before sampling (default 20000)");
  ax->add_option("--path", o.path_file, "check a stored path JSON instead");
  common(ax);

  auto* hd = app.add_subcommand("hausdorff", "Hausdorff distance of R(p,q) to the segment pq");
  system_opt(hd);
  hd->add_option("--p", o.p)->required();
  hd->add_option("--q", o.q)->required();
  hd->add_option("--model", o.model, "polyline | points");
  hd->add_option("--svg", o.svg);
  hd->add_option("--plane", o.plane);
  common(hd);

  auto* sw = app.add_subcommand("sweep", "max Hausdorff distance over a ball around p");
  system_opt(sw);
  sw->add_option("--p", o.p, "centre (default origin)");
  sw->add_option("--n", o.n, "radius, or several: 32,64")->delimiter(',')->required();
  sw->add_option("--norm", o.norm, "euclidean | manhattan");
  sw->add_option("--plane", o.plane, "restrict targets to two axes (default 1,2 for d > 2)");
  sw->add_flag("--full-ball", o.full_ball, "sweep the whole ball instead of a plane (d > 2)");
  sw->add_option("--svg", o.svg, "draw the argmax of the last radius");
  common(sw);

  auto* dc = app.add_subcommand("discrepancy", "interval discrepancy of the order on [0,n)");
  order_opt(dc);
  dc->add_option("--n", o.n, "length, or several: 256,1024")->delimiter(',')->required();
  common(dc);

  auto* rd = app.add_subcommand("render", "draw R(p,q) and the segment as SVG");
  system_opt(rd);
  rd->add_option("--p", o.p)->required();
  rd->add_option("--q", o.q)->required();
  rd->add_option("--svg", o.svg)->required();
  rd->add_option("--plane", o.plane);
  common(rd);

  auto* demo = app.add_subcommand("demo", "worked examples: plane-path | space-path | swapped-order | rounding");
  demo->add_option("name", o.demo)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Setting seed = resolve(o.seed, "CDSKIT_SEED", kDefaultSeed);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    Setting threads = resolve(o.threads, "CDSKIT_THREADS", 1);
    if (threads.value == 0) threads.value = hw;

    if (*seg) return run_segment(o);
    if (*cdr) return run_check_cdr(o);
    if (*cds) return run_check_cds(o);
    if (*cls) return run_classify(o);
    if (*ax) return run_axioms(o, seed, threads);
    if (*hd) return run_hausdorff(o);
    if (*sw) return run_sweep(o, threads);
    if (*dc) return run_discrepancy(o);
    if (*rd) return run_render(o);
    if (*demo) return run_demo(o);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
