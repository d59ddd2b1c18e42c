#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apollo/builder.hpp"

namespace apollo {

struct CrossSectionPlane {
  std::vector<double> normal;  // length d, need not be unit
  double offset = 0.0;         // plane is <x, normal> = offset
};

/// Renders the packing as SVG 1.1.  2-dimensional packings render directly;
/// 3-dimensional ones are cut by the given hyperplane and the section
/// circles are drawn.  Half-spaces appear as clipped half-planes.
std::string render_packing_svg(const Packing<double>& p,
                               const std::optional<CrossSectionPlane>& plane = std::nullopt);

}  // namespace apollo
