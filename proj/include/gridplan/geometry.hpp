#pragma once

#include <cmath>
#include <cstdint>

// Coordinate conventions used throughout:
//  - the grid origin is the top-left cell; x (col) grows rightward, y (row)
//    grows downward, matching image pixel order
//  - Cell addresses a grid square by integer (col, row)
//  - Point is a continuous position in world units; the cell containing a
//    point is floor(p / cell_size) on each axis
//  - the center of cell (c, r) is ((c + 0.5) * cell_size, (r + 0.5) * cell_size)

namespace gridplan {

struct Cell {
    int col = 0;
    int row = 0;

    bool operator==(const Cell&) const = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }

    double norm() const { return std::hypot(x, y); }

    // Zero-length input maps to the zero vector rather than NaN.
    Point normalized() const {
        const double n = norm();
        if (n == 0.0) return {0.0, 0.0};
        return {x / n, y / n};
    }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline double distance(const Point& a, const Point& b) { return (a - b).norm(); }

} // namespace gridplan
