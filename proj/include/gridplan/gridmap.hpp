#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gridplan/geometry.hpp"

namespace gridplan {

// Binary occupancy map over a uniform grid.  Immutable after construction;
// cheap to share by const reference across planner runs.  Cells outside the
// grid count as occupied (the boundary is a wall).
class OccupancyGrid {
public:
    OccupancyGrid(int width, int height, double cell_size = 1.0);

    // Build from a '.'/'#' text picture, one row per line ('#' = obstacle).
    // Handy for tests and debugging.
    static OccupancyGrid from_text(std::string_view text, double cell_size = 1.0);

    int width() const { return width_; }
    int height() const { return height_; }
    double cell_size() const { return cell_size_; }
    std::size_t obstacle_count() const;

    bool in_bounds(const Cell& c) const {
        return c.col >= 0 && c.col < width_ && c.row >= 0 && c.row < height_;
    }

    // Out-of-bounds cells read as occupied.
    bool is_occupied(const Cell& c) const {
        if (!in_bounds(c)) return true;
        return cells_[static_cast<std::size_t>(c.row) * width_ + c.col] != 0;
    }

    void set_occupied(const Cell& c, bool occupied);

    Cell cell_of(const Point& p) const {
        return {static_cast<int>(std::floor(p.x / cell_size_)),
                static_cast<int>(std::floor(p.y / cell_size_))};
    }

    Point center_of(const Cell& c) const {
        return {(c.col + 0.5) * cell_size_, (c.row + 0.5) * cell_size_};
    }

    // '.'/'#' picture, one newline-terminated row per grid row.
    std::string dump() const;

    // Round-trippable bitmap encodings (obstacle = black).
    std::string to_pgm() const;
    std::string to_pbm() const;

    bool operator==(const OccupancyGrid&) const = default;

private:
    int width_;
    int height_;
    double cell_size_;
    std::vector<std::uint8_t> cells_; // row-major, 1 = obstacle
};

// Decode a P1/P2/P4/P5 bitmap and binarize it: pixels darker than `threshold`
// (gray < threshold) become obstacles.  Throws PnmError on malformed input.
OccupancyGrid load_bitmap(std::string_view bytes, int threshold = 128, double cell_size = 1.0);

// Every cell whose closed unit square the closed segment p->q touches, in
// traversal order along x (corner grazes included).  Coordinates are world
// units; cells may lie outside the grid.
std::vector<Cell> supercover_cells(const OccupancyGrid& grid, const Point& p, const Point& q);

// True when no touched cell is occupied (out-of-bounds counts as occupied).
// Symmetric in its arguments by construction.
bool line_of_sight(const OccupancyGrid& grid, const Point& p, const Point& q);

// Copy of `grid` with obstacles grown by `radius` cells (Euclidean: every cell
// whose center lies within radius*cell_size of an obstacle center turns solid).
OccupancyGrid inflate(const OccupancyGrid& grid, int radius);

} // namespace gridplan
