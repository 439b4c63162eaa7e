#pragma once

#include <string>
#include <vector>

#include "gridplan/geometry.hpp"
#include "gridplan/gridmap.hpp"

namespace gridplan {

// One path overlay: waypoints plus the stroke color keyed off the planner
// name ("conventional" = red, "fusion" = blue, anything else gray).
struct PathOverlay {
    std::string planner;
    std::vector<Point> waypoints;
    Cell source;
    Cell goal;
};

// Vector rendering of the map and overlays: white background, black obstacle
// cells, colored polylines, green source and orange goal markers.  Output is
// deterministic byte-for-byte for identical inputs.
std::string render_svg(const OccupancyGrid& grid, const std::vector<PathOverlay>& overlays);

} // namespace gridplan
