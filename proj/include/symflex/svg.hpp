#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symflex/graph.hpp"
#include "symflex/motion.hpp"
#include "symflex/nac.hpp"

namespace symflex {

/// One standalone SVG document per frame. All frames share a viewBox: the
/// bounding box over every frame grown by 10% on each side. Edges are drawn
/// red/blue when a colouring is given, grey otherwise.
std::vector<std::string> render_svg_frames(const Graph& g, std::span<const Placement> frames,
                                           const std::optional<EdgeColouring>& colouring = std::nullopt);

}  // namespace symflex
