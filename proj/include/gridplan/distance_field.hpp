#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gridplan/geometry.hpp"
#include "gridplan/gridmap.hpp"

namespace gridplan {

// Exact Euclidean distance transform of an occupancy grid: for every cell,
// the distance from its center to the nearest obstacle cell center, plus that
// obstacle's address (ties broken by lowest row, then lowest column).
//
// Distances are derived from integer squared offsets, so they are exact up to
// the final sqrt.  Built once per map and shared read-only by planner runs.
// On a grid with no obstacles every distance reads +infinity.
class DistanceField {
public:
    explicit DistanceField(const OccupancyGrid& grid);

    int width() const { return width_; }
    int height() const { return height_; }
    double cell_size() const { return cell_size_; }
    bool has_obstacles() const { return has_obstacles_; }

    // World-unit distance to the nearest obstacle center; +infinity when the
    // grid holds no obstacles.  Out-of-range cells are clamped to the border.
    double distance_at(const Cell& c) const;

    // Distance looked up at the cell containing p.
    double distance_at(const Point& p) const {
        return distance_at(cell_of(p));
    }

    std::optional<Cell> nearest_obstacle(const Cell& c) const;
    std::optional<Cell> nearest_obstacle(const Point& p) const {
        return nearest_obstacle(cell_of(p));
    }

private:
    Cell cell_of(const Point& p) const;
    Cell clamp(const Cell& c) const;
    std::size_t index(const Cell& c) const {
        return static_cast<std::size_t>(c.row) * width_ + c.col;
    }

    int width_;
    int height_;
    double cell_size_;
    bool has_obstacles_ = false;
    std::vector<std::int64_t> dist2_;  // squared distance in cell units
    std::vector<std::int32_t> near_;   // nearest obstacle as row*width+col, -1 if none
};

} // namespace gridplan
