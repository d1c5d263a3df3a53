#include "cdskit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace cdskit {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const DigitalPath& path, const Point& p, const Point& q,
                       const std::optional<HausdorffResult>& witness, const SvgOptions& options) {
  const int a = options.plane.first;
  const int b = options.plane.second;
  if (a < 0 || b < 0 || a >= p.dim() || b >= p.dim() || a == b) {
    throw ContractError("render plane must name two distinct axes of the path");
  }
  Int xmin = std::min(p[a], q[a]);
  Int xmax = std::max(p[a], q[a]);
  Int ymin = std::min(p[b], q[b]);
  Int ymax = std::max(p[b], q[b]);
  for (const Point& m : path.points) {
    xmin = std::min(xmin, m[a]);
    xmax = std::max(xmax, m[a]);
    ymin = std::min(ymin, m[b]);
    ymax = std::max(ymax, m[b]);
  }
  const double u = options.unit_px;
  const double pad = options.margin_px;
  const double width = static_cast<double>(xmax - xmin) * u + 2 * pad;
  const double height = static_cast<double>(ymax - ymin) * u + 2 * pad;
  // SVG y grows downwards; lattice y grows upwards.
  auto X = [&](double x) { return pad + (x - static_cast<double>(xmin)) * u; };
  auto Y = [&](double y) { return height - pad - (y - static_cast<double>(ymin)) * u; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
       num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  s += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  s += "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (Int x = xmin; x <= xmax; ++x) {
    s += "    <line x1=\"" + num(X(static_cast<double>(x))) + "\" y1=\"" + num(Y(static_cast<double>(ymin))) +
         "\" x2=\"" + num(X(static_cast<double>(x))) + "\" y2=\"" + num(Y(static_cast<double>(ymax))) + "\"/>\n";
  }
  for (Int y = ymin; y <= ymax; ++y) {
    s += "    <line x1=\"" + num(X(static_cast<double>(xmin))) + "\" y1=\"" + num(Y(static_cast<double>(y))) +
         "\" x2=\"" + num(X(static_cast<double>(xmax))) + "\" y2=\"" + num(Y(static_cast<double>(y))) + "\"/>\n";
  }
  s += "  </g>\n";

  s += "  <line class=\"segment\" x1=\"" + num(X(static_cast<double>(p[a]))) + "\" y1=\"" +
       num(Y(static_cast<double>(p[b]))) + "\" x2=\"" + num(X(static_cast<double>(q[a]))) + "\" y2=\"" +
       num(Y(static_cast<double>(q[b]))) + "\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";

  s += "  <polyline class=\"path\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += " ";
    s += num(X(static_cast<double>(path.points[i][a]))) + "," + num(Y(static_cast<double>(path.points[i][b])));
  }
  s += "\"/>\n";
  s += "  <g fill=\"black\">\n";
  for (const Point& m : path.points) {
    s += "    <circle cx=\"" + num(X(static_cast<double>(m[a]))) + "\" cy=\"" + num(Y(static_cast<double>(m[b]))) +
         "\" r=\"3\"/>\n";
  }
  s += "  </g>\n";

  if (witness) {
    const auto& w = *witness;
    const double wx = w.witness_real[static_cast<std::size_t>(a)];
    const double wy = w.witness_real[static_cast<std::size_t>(b)];
    s += "  <line class=\"witness\" x1=\"" + num(X(static_cast<double>(w.witness_lattice[a]))) + "\" y1=\"" +
         num(Y(static_cast<double>(w.witness_lattice[b]))) + "\" x2=\"" + num(X(wx)) + "\" y2=\"" + num(Y(wy)) +
         "\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
    s += "  <text x=\"" + num(pad) + "\" y=\"" + num(pad * 0.7) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#d62728\">H = " + num(w.value) +
         "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace cdskit
