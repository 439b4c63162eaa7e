#include "gridplan/distance_field.hpp"

#include <algorithm>
#include <cmath>

namespace gridplan {
namespace {

std::int64_t isqrt_floor(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

} // namespace

// Two stages:
//  1. Meijster's integer two-pass transform yields the exact squared distance
//     to the nearest obstacle center for every cell.
//  2. Knowing that squared distance d2, the nearest obstacle is recovered by
//     enumerating the lattice offsets (dx, dy) with dx^2 + dy^2 = d2 in
//     ascending (row, col) order and taking the first occupied hit, which
//     realizes the documented tie-break exactly.
DistanceField::DistanceField(const OccupancyGrid& grid)
    : width_(grid.width()), height_(grid.height()), cell_size_(grid.cell_size()) {
    const int w = width_, h = height_;
    const std::int64_t inf = static_cast<std::int64_t>(w) + h + 1;
    const std::size_t n = static_cast<std::size_t>(w) * h;

    // Pass 1 (columns): vertical cell distance to the nearest obstacle above
    // or below, scanning down then up.
    std::vector<std::int64_t> g(n);
    for (int x = 0; x < w; ++x) {
        g[x] = grid.is_occupied({x, 0}) ? 0 : inf;
        for (int y = 1; y < h; ++y) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            g[i] = grid.is_occupied({x, y}) ? 0 : std::min(inf, g[i - w] + 1);
        }
        for (int y = h - 2; y >= 0; --y) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            g[i] = std::min(g[i], g[i + w] + 1);
        }
    }

    // Pass 2 (rows): lower envelope of the parabolas (x - u)^2 + g(u)^2 using
    // integer arithmetic only, so the squared result is exact.
    dist2_.assign(n, inf * inf);
    near_.assign(n, -1);
    std::vector<int> s(w), t(w);
    for (int y = 0; y < h; ++y) {
        const std::int64_t* row = &g[static_cast<std::size_t>(y) * w];
        const auto f = [&](std::int64_t x, std::int64_t u) {
            return (x - u) * (x - u) + row[u] * row[u];
        };
        const auto sep = [&](std::int64_t i, std::int64_t u) {
            return (u * u - i * i + row[u] * row[u] - row[i] * row[i]) / (2 * (u - i));
        };
        int q = 0;
        s[0] = 0;
        t[0] = 0;
        for (int u = 1; u < w; ++u) {
            while (q >= 0 && f(t[q], s[q]) > f(t[q], u)) --q;
            if (q < 0) {
                q = 0;
                s[0] = u;
            } else {
                const std::int64_t wpos = 1 + sep(s[q], u);
                if (wpos < w) {
                    ++q;
                    s[q] = u;
                    t[q] = static_cast<int>(wpos);
                }
            }
        }
        for (int x = w - 1; x >= 0; --x) {
            dist2_[static_cast<std::size_t>(y) * w + x] = f(x, s[q]);
            if (x == t[q]) --q;
        }
    }

    has_obstacles_ = grid.obstacle_count() > 0;
    if (!has_obstacles_) {
        std::fill(dist2_.begin(), dist2_.end(), -1);
        return;
    }

    // Stage 2: argmin recovery.
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            const std::int64_t d2 = dist2_[i];
            if (d2 == 0) {
                near_[i] = static_cast<std::int32_t>(i);
                continue;
            }
            const std::int64_t r = isqrt_floor(d2);
            for (std::int64_t dy = -r; dy <= r && near_[i] < 0; ++dy) {
                const int ny = y + static_cast<int>(dy);
                if (ny < 0 || ny >= h) continue;
                const std::int64_t rem = d2 - dy * dy;
                const std::int64_t dx = isqrt_floor(rem);
                if (dx * dx != rem) continue;
                for (const std::int64_t cand : {static_cast<std::int64_t>(x) - dx,
                                                static_cast<std::int64_t>(x) + dx}) {
                    const int nx = static_cast<int>(cand);
                    if (nx < 0 || nx >= w) continue;
                    if (grid.is_occupied({nx, ny})) {
                        near_[i] = static_cast<std::int32_t>(ny) * w + nx;
                        break;
                    }
                    if (dx == 0) break; // x-dx and x+dx coincide
                }
            }
        }
}

Cell DistanceField::clamp(const Cell& c) const {
    return {std::clamp(c.col, 0, width_ - 1), std::clamp(c.row, 0, height_ - 1)};
}

Cell DistanceField::cell_of(const Point& p) const {
    return {static_cast<int>(std::floor(p.x / cell_size_)),
            static_cast<int>(std::floor(p.y / cell_size_))};
}

double DistanceField::distance_at(const Cell& c) const {
    if (!has_obstacles_) return std::numeric_limits<double>::infinity();
    const std::int64_t d2 = dist2_[index(clamp(c))];
    return std::sqrt(static_cast<double>(d2)) * cell_size_;
}

std::optional<Cell> DistanceField::nearest_obstacle(const Cell& c) const {
    if (!has_obstacles_) return std::nullopt;
    const std::int32_t i = near_[index(clamp(c))];
    if (i < 0) return std::nullopt;
    return Cell{i % width_, i / width_};
}

} // namespace gridplan
