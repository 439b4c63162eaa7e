#include "gridplan/gridmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gridplan/pnm.hpp"

namespace gridplan {

OccupancyGrid::OccupancyGrid(int width, int height, double cell_size)
    : width_(width), height_(height), cell_size_(cell_size) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("grid dimensions must be at least 1x1");
    if (!(cell_size > 0.0))
        throw std::invalid_argument("cell_size must be positive");
    cells_.assign(static_cast<std::size_t>(width) * height, 0);
}

OccupancyGrid OccupancyGrid::from_text(std::string_view text, double cell_size) {
    std::vector<std::string_view> rows;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        if (end > start) rows.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (rows.empty()) throw std::invalid_argument("empty grid text");
    OccupancyGrid g(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()), cell_size);
    for (int y = 0; y < g.height_; ++y) {
        if (static_cast<int>(rows[y].size()) != g.width_)
            throw std::invalid_argument("ragged grid text");
        for (int x = 0; x < g.width_; ++x)
            if (rows[y][x] == '#') g.set_occupied({x, y}, true);
    }
    return g;
}

std::size_t OccupancyGrid::obstacle_count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

void OccupancyGrid::set_occupied(const Cell& c, bool occupied) {
    if (!in_bounds(c)) throw std::out_of_range("set_occupied: cell outside grid");
    cells_[static_cast<std::size_t>(c.row) * width_ + c.col] = occupied ? 1 : 0;
}

std::string OccupancyGrid::dump() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(height_) * (width_ + 1));
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x)
            out += is_occupied({x, y}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string OccupancyGrid::to_pgm() const {
    std::vector<std::uint8_t> gray(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) gray[i] = cells_[i] ? 0 : 255;
    return encode_pgm(width_, height_, gray);
}

std::string OccupancyGrid::to_pbm() const {
    return encode_pbm(width_, height_, cells_);
}

OccupancyGrid load_bitmap(std::string_view bytes, int threshold, double cell_size) {
    const PnmImage img = decode_pnm(bytes);
    OccupancyGrid g(img.width, img.height, cell_size);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.at(x, y) < threshold) g.set_occupied({x, y}, true);
    return g;
}

namespace {

// Enumerates every cell whose closed unit square the closed segment a->b
// touches (coordinates in cell units).  Works column strip by column strip:
// within the strip [c, c+1] the segment spans a y-interval, and the touched
// rows are exactly those whose closed [r, r+1] meets it.  A small epsilon
// keeps boundary and corner grazes included under floating-point rounding,
// which errs on the conservative side for collision checks.
//
// Endpoint order is canonicalized first, so traversal is symmetric in a, b.
// Callback returns false to stop early; the function then returns false.
constexpr double kTouchEps = 1e-9;

template <typename Fn>
bool walk_cells(Point a, Point b, Fn&& visit) {
    if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);

    // Cells [k, k+1] whose closed extent meets the closed interval [lo, hi].
    const auto cell_span = [](double lo, double hi, int& k0, int& k1) {
        k0 = static_cast<int>(std::ceil(lo - 1.0 - kTouchEps));
        k1 = static_cast<int>(std::floor(hi + kTouchEps));
    };

    const double dx = b.x - a.x;
    const double dy = b.y - a.y;

    if (dx == 0.0) { // vertical (or degenerate) segment
        int c0, c1, r0, r1;
        cell_span(a.x, a.x, c0, c1);
        cell_span(a.y, b.y, r0, r1);
        for (int c = c0; c <= c1; ++c)
            for (int r = r0; r <= r1; ++r)
                if (!visit(Cell{c, r})) return false;
        return true;
    }

    int c0, c1;
    cell_span(a.x, b.x, c0, c1);
    for (int c = c0; c <= c1; ++c) {
        const double xl = std::max(a.x, static_cast<double>(c));
        const double xr = std::max(std::min(b.x, static_cast<double>(c) + 1.0), xl);
        const double yl = a.y + (xl - a.x) / dx * dy;
        const double yr = a.y + (xr - a.x) / dx * dy;
        int r0, r1;
        cell_span(std::min(yl, yr), std::max(yl, yr), r0, r1);
        for (int r = r0; r <= r1; ++r)
            if (!visit(Cell{c, r})) return false;
    }
    return true;
}

} // namespace

std::vector<Cell> supercover_cells(const OccupancyGrid& grid, const Point& p, const Point& q) {
    const double s = grid.cell_size();
    std::vector<Cell> out;
    walk_cells({p.x / s, p.y / s}, {q.x / s, q.y / s}, [&](const Cell& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool line_of_sight(const OccupancyGrid& grid, const Point& p, const Point& q) {
    const double s = grid.cell_size();
    return walk_cells({p.x / s, p.y / s}, {q.x / s, q.y / s},
                      [&](const Cell& c) { return !grid.is_occupied(c); });
}

OccupancyGrid inflate(const OccupancyGrid& grid, int radius) {
    if (radius <= 0) return grid;
    // Stamp a disk of cell offsets around every obstacle.
    std::vector<Cell> disk;
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            if (dx * dx + dy * dy <= radius * radius) disk.push_back({dx, dy});

    OccupancyGrid out = grid;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x) {
            if (!grid.is_occupied({x, y})) continue;
            for (const Cell& d : disk) {
                const Cell c{x + d.col, y + d.row};
                if (out.in_bounds(c)) out.set_occupied(c, true);
            }
        }
    return out;
}

} // namespace gridplan
