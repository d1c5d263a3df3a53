#pragma once

#include <string>

#include <json.hpp>

#include "cdskit/geometry.hpp"
#include "cdskit/metrics.hpp"
#include "cdskit/order.hpp"
#include "cdskit/systems.hpp"
#include "cdskit/toc.hpp"
#include "cdskit/verify.hpp"

namespace cdskit {

using Json = nlohmann::json;

/// natural | theta1 | vdc:<a> | tau:o+e+ | tau:o-e- | tau:e+o+ | tau:e-o- |
/// alpha:<q> | alpha-inv:<q> | file:<path>
/// Throws DomainError on anything else.
[[nodiscard]] OrderView parse_order(const std::string& text);

/// {"window": [a, b], "ranking": [...]}
[[nodiscard]] ExplicitWindow explicit_order_from_json(const Json& j);
[[nodiscard]] Json to_json(const ExplicitWindow& order);

/// "1,-2,3"
[[nodiscard]] Point parse_point(const std::string& text);
/// "+1,-1,+1"
[[nodiscard]] Slope parse_slope(const std::string& text);
[[nodiscard]] Plane parse_plane(const std::string& text, int dim);

[[nodiscard]] Json to_json(const Point& p);
[[nodiscard]] Json to_json(const Slope& t);
[[nodiscard]] Point point_from_json(const Json& j);

struct StoredPath {
  DigitalPath path;
  std::string order;
  Slope slope;
};

[[nodiscard]] Json to_json(const StoredPath& stored);
[[nodiscard]] StoredPath stored_path_from_json(const Json& j);

/// {"kind": "toc-cds" | "toc-cdr" | "per-slope-cdr" | "bounding-box" |
///  "rounding", "dim": d, "order": "...", "p": [...],
///  "orders": {"+1,-1,+1": "...", ...}}
[[nodiscard]] SegmentSystem system_from_json(const Json& j);

[[nodiscard]] Json to_json(const AxiomReport& report);
[[nodiscard]] Json to_json(const HausdorffResult& h);
[[nodiscard]] Json to_json(const FamilyClass& c);
[[nodiscard]] Json to_json(const PairWitness& w);

/// Sorted keys, two-space indent, trailing newline.
[[nodiscard]] std::string canonical(const Json& j);

[[nodiscard]] Json read_json_file(const std::string& path);

}  // namespace cdskit
