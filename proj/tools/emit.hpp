#pragma once

#include <ostream>
#include <vector>

#include "weyl/measures.hpp"
#include "weyl/region.hpp"

namespace weyl::cli {

/// CSV boundary samples with header `arc,t,re,im`; projective parameters
/// are written as inf/-inf.
void emit_boundary_csv(std::ostream& out, const WeylRegion& region, int samples);

/// SVG rendering of the region: circles, boundary arc polylines, vertices,
/// and measure-transform markers. The y axis is inverted so the upper
/// half-plane renders upward; the viewport pads all geometry by 10%.
void emit_region_svg(std::ostream& out, const WeylRegion& region, int samples,
                     const std::vector<Complex>& transform_points);

}  // namespace weyl::cli
