#include "gridplan/prune.hpp"

namespace gridplan {

std::vector<Point> extract_key_nodes(const OccupancyGrid& grid, const std::vector<Point>& path,
                                     int margin) {
    if (path.size() < 3) return path;

    const OccupancyGrid* g = &grid;
    OccupancyGrid grown(1, 1);
    if (margin > 0) {
        grown = inflate(grid, margin);
        g = &grown;
    }

    std::vector<Point> keys;
    keys.push_back(path.front());
    std::size_t anchor = 0;
    while (anchor + 1 < path.size()) {
        // Scan from the tail so the first visible hit is the farthest one.
        std::size_t next = anchor + 1;
        for (std::size_t j = path.size() - 1; j > anchor; --j) {
            if (line_of_sight(*g, path[anchor], path[j])) {
                next = j;
                break;
            }
        }
        // Consecutive A* waypoints are always mutually visible, so `next`
        // advances even when everything farther is blocked.
        keys.push_back(path[next]);
        anchor = next;
    }
    return keys;
}

} // namespace gridplan
