#pragma once

#include <optional>
#include <string>

#include "cdskit/geometry.hpp"
#include "cdskit/metrics.hpp"
#include "cdskit/toc.hpp"

namespace cdskit {

struct SvgOptions {
  Plane plane;
  double unit_px = 20.0;
  double margin_px = 20.0;
};

/// Static picture of a path projected onto a coordinate plane: the path as a
/// polyline with its lattice points, the real segment dashed, and the
/// Hausdorff witness as a highlighted connector when given.
[[nodiscard]] std::string render_svg(const DigitalPath& path, const Point& p, const Point& q,
                                     const std::optional<HausdorffResult>& witness,
                                     const SvgOptions& options = {});

}  // namespace cdskit
