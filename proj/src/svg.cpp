#include "symflex/svg.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace symflex {

std::vector<std::string> render_svg_frames(const Graph& g, std::span<const Placement> frames,
                                           const std::optional<EdgeColouring>& colouring) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  for (const auto& f : frames) {
    for (const auto& p : f) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  if (!(xmin <= xmax)) xmin = ymin = -1.0, xmax = ymax = 1.0;
  double w = xmax - xmin;
  double h = ymax - ymin;
  const double extent = std::max({w, h, 1e-9});
  if (w < 1e-9) w = extent;
  if (h < 1e-9) h = extent;
  const double x0 = (xmin + xmax) / 2.0 - 0.6 * w;
  const double y0 = (ymin + ymax) / 2.0 - 0.6 * h;
  const double vw = 1.2 * w;
  const double vh = 1.2 * h;
  const double stroke = extent / 150.0;
  const double radius = extent / 60.0;

  std::vector<std::string> out;
  out.reserve(frames.size());
  for (const auto& f : frames) {
    std::string s = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6g} {:.6g} {:.6g} {:.6g}\" "
        "width=\"600\" height=\"{:.0f}\">\n",
        x0, y0, vw, vh, 600.0 * vh / vw);
    // SVG y grows downwards; flip so the drawing matches the usual orientation.
    s += fmt::format("<g transform=\"matrix(1 0 0 -1 0 {:.6g})\">\n", 2.0 * y0 + vh);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edge(i);
      const auto& a = f[static_cast<std::size_t>(e.u)];
      const auto& b = f[static_cast<std::size_t>(e.v)];
      const char* colour = !colouring ? "#555555" : ((*colouring)[i] == Colour::red ? "#d62728" : "#1f77b4");
      s += fmt::format(
          "<line x1=\"{:.6g}\" y1=\"{:.6g}\" x2=\"{:.6g}\" y2=\"{:.6g}\" stroke=\"{}\" "
          "stroke-width=\"{:.6g}\"/>\n",
          a.x, a.y, b.x, b.y, colour, stroke);
    }
    for (const auto& p : f) {
      s += fmt::format("<circle cx=\"{:.6g}\" cy=\"{:.6g}\" r=\"{:.6g}\" fill=\"black\"/>\n", p.x, p.y, radius);
    }
    s += "</g>\n</svg>\n";
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace symflex
