#include "cdskit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cdskit {
namespace {

Int parse_int(std::string_view s, const std::string& context) {
  if (s.size() > 1 && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("expected an integer in " + context + ", got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_int(item, "'" + text + "'"));
  return out;
}

std::string slope_key(const Slope& t) {
  std::string s;
  for (int i = 0; i < t.dim(); ++i) {
    if (i) s += ",";
    s += t[i] > 0 ? "+1" : "-1";
  }
  return s;
}

Json witness_json(const AxiomWitness& w) {
  Json j{{"p", to_json(w.p)}, {"q", to_json(w.q)}, {"note", w.note}};
  Json pts = Json::array();
  for (const Point& m : w.path.points) pts.push_back(to_json(m));
  j["path"] = pts;
  if (w.r) j["r"] = to_json(*w.r);
  if (w.other) {
    Json o = Json::array();
    for (const Point& m : w.other->points) o.push_back(to_json(m));
    j["other"] = o;
  }
  return j;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError("malformed JSON in " + path + ": " + e.what());
  }
}

ExplicitWindow explicit_order_from_json(const Json& j) {
  try {
    const auto w = j.at("window").get<std::vector<Int>>();
    if (w.size() != 2) throw DomainError("order window must be [a, b]");
    ExplicitWindow out{Interval{w[0], w[1]}, j.at("ranking").get<std::vector<Int>>(), {}};
    validate(out);
    return out;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed order file: ") + e.what());
  }
}

Json to_json(const ExplicitWindow& order) {
  return Json{{"window", {order.window.lo, order.window.hi}}, {"ranking", order.ranking}};
}

OrderView parse_order(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  if (head == "natural" && !has_arg) return make_order(Natural{});
  if (head == "theta1" && !has_arg) return make_order(Theta1Swap{});
  if (head == "vdc" && has_arg) return make_order(VanDerCorput{parse_int(arg, text)});
  if (head == "alpha" && has_arg) return make_order(Alpha{parse_int(arg, text)});
  if (head == "alpha-inv" && has_arg) return make_order(AlphaReverse{parse_int(arg, text)});
  if (head == "tau" && has_arg) {
    if (arg == "o+e+") return make_order(Tau{TauKind::OpEp});
    if (arg == "o-e-") return make_order(Tau{TauKind::OmEm});
    if (arg == "e+o+") return make_order(Tau{TauKind::EpOp});
    if (arg == "e-o-") return make_order(Tau{TauKind::EmOm});
  }
  if (head == "file" && has_arg) return make_order(explicit_order_from_json(read_json_file(arg)));
  throw DomainError("unknown order '" + text +
                    "' (expected natural, theta1, vdc:<a>, tau:<o+e+|o-e-|e+o+|e-o->, "
                    "alpha:<q>, alpha-inv:<q> or file:<path>)");
}

Point parse_point(const std::string& text) {
  const auto v = parse_ints(text);
  if (static_cast<int>(v.size()) < kMinDim || static_cast<int>(v.size()) > kMaxDim) {
    throw DomainError("point '" + text + "' must have between " + std::to_string(kMinDim) +
                      " and " + std::to_string(kMaxDim) + " coordinates");
  }
  return Point(v);
}

Slope parse_slope(const std::string& text) {
  std::vector<int> signs;
  for (Int v : parse_ints(text)) {
    if (v != 1 && v != -1) throw DomainError("slope '" + text + "' must list +1/-1 entries");
    signs.push_back(static_cast<int>(v));
  }
  if (static_cast<int>(signs.size()) < kMinDim || static_cast<int>(signs.size()) > kMaxDim) {
    throw DomainError("slope '" + text + "' has unsupported dimension");
  }
  return Slope(signs);
}

Plane parse_plane(const std::string& text, int dim) {
  const auto v = parse_ints(text);
  if (v.size() != 2 || v[0] == v[1] || v[0] < 1 || v[1] < 1 || v[0] > dim || v[1] > dim) {
    throw DomainError("plane '" + text + "' must name two distinct axes in 1.." +
                      std::to_string(dim));
  }
  return Plane{static_cast<int>(v[0] - 1), static_cast<int>(v[1] - 1)};
}

Json to_json(const Point& p) { return p.coords(); }

Json to_json(const Slope& t) { return t.signs(); }

Point point_from_json(const Json& j) {
  try {
    const auto v = j.get<std::vector<Int>>();
    if (static_cast<int>(v.size()) < kMinDim || static_cast<int>(v.size()) > kMaxDim) {
      throw DomainError("point has unsupported dimension " + std::to_string(v.size()));
    }
    return Point(v);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed point: ") + e.what());
  }
}

Json to_json(const StoredPath& stored) {
  Json pts = Json::array();
  for (const Point& m : stored.path.points) pts.push_back(to_json(m));
  return Json{{"points", pts}, {"order", stored.order}, {"slope", to_json(stored.slope)}};
}

StoredPath stored_path_from_json(const Json& j) {
  try {
    StoredPath out;
    for (const auto& m : j.at("points")) out.path.points.push_back(point_from_json(m));
    if (out.path.empty()) throw DomainError("path has no points");
    out.order = j.value("order", std::string{});
    out.slope = j.contains("slope") ? Slope(j.at("slope").get<std::vector<int>>())
                                    : slope_of(out.path.source(), out.path.target());
    return out;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed path file: ") + e.what());
  } catch (const ContractError& e) {
    throw DomainError(std::string("malformed path file: ") + e.what());
  }
}

SegmentSystem system_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const int dim = j.at("dim").get<int>();
    if (kind == "toc-cds") return make_system(TocCds{parse_order(j.at("order").get<std::string>())}, dim);
    if (kind == "toc-cdr") {
      return make_system(TocCdr{parse_order(j.at("order").get<std::string>()), point_from_json(j.at("p"))}, dim);
    }
    if (kind == "per-slope-cdr") {
      PerSlopeCdr ps{point_from_json(j.at("p")), {}};
      const auto& orders = j.at("orders");
      for (const Slope& t : all_slopes(dim)) {
        const std::string key = slope_key(t);
        if (!orders.contains(key)) throw DomainError("per-slope system lacks slope " + key);
        ps.orders.emplace(t, parse_order(orders.at(key).get<std::string>()));
      }
      return make_system(std::move(ps), dim);
    }
    if (kind == "bounding-box") return make_system(BoundingBox{}, dim);
    if (kind == "rounding") return make_system(Rounding{}, dim);
    throw DomainError("unknown system kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed system spec: ") + e.what());
  }
}

Json to_json(const AxiomReport& report) {
  Json axioms = Json::object();
  for (std::size_t i = 0; i < report.axioms.size(); ++i) {
    const auto& a = report.axioms[i];
    Json entry{{"status", to_string(a.status)}};
    if (!a.detail.empty()) entry["detail"] = a.detail;
    if (a.witness) entry["witness"] = witness_json(*a.witness);
    axioms[to_string(static_cast<Axiom>(i))] = entry;
  }
  return Json{{"system", report.system},
              {"region", {{"lo", to_json(report.region.lo)}, {"hi", to_json(report.region.hi)}}},
              {"pairs_tested", report.pairs_tested},
              {"exhaustive", report.exhaustive},
              {"seed", report.seed},
              {"axioms", axioms},
              {"pass", report.all_pass()}};
}

Json to_json(const HausdorffResult& h) {
  return Json{{"value", h.value},
              {"witness_lattice", to_json(h.witness_lattice)},
              {"witness_real", h.witness_real},
              {"direction", h.direction == HausdorffResult::Direction::PathToSegment
                                ? "path-to-segment"
                                : "segment-to-path"}};
}

Json to_json(const PairWitness& w) {
  return Json{{"u", w.u}, {"v", w.v}, {"image_u", w.image_u}, {"image_v", w.image_v}};
}

Json to_json(const FamilyClass& c) {
  Json j{{"class", c.name()}, {"window", {c.window.lo, c.window.hi}}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cdskit
