#pragma once

#include <vector>

#include "gridplan/geometry.hpp"
#include "gridplan/gridmap.hpp"

namespace gridplan {

// Reduces a waypoint chain to its key nodes: starting from the first
// waypoint, greedily keep the farthest later waypoint the current anchor can
// see (conservative supercover visibility), then continue from it.  First and
// last waypoints always survive; consecutive survivors are mutually visible;
// running the reduction twice changes nothing.
//
// margin > 0 performs the visibility tests on a copy of the grid with
// obstacles grown by that many cells, trading path length for clearance.
std::vector<Point> extract_key_nodes(const OccupancyGrid& grid, const std::vector<Point>& path,
                                     int margin = 0);

} // namespace gridplan
