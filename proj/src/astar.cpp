#include "gridplan/astar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace gridplan {

double manhattan_distance(const Cell& a, const Cell& b, double cell_size) {
    return (std::abs(a.col - b.col) + std::abs(a.row - b.row)) * cell_size;
}

double euclidean_distance(const Cell& a, const Cell& b, double cell_size) {
    const double dx = a.col - b.col;
    const double dy = a.row - b.row;
    return std::sqrt(dx * dx + dy * dy) * cell_size;
}

namespace {

struct OpenEntry {
    double f;
    double h;
    std::uint64_t seq;
    std::uint32_t cell;
    double g;
};

struct OpenOrder { // min-heap: smaller f, then smaller h, then FIFO
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        return a.seq > b.seq;
    }
};

} // namespace

SearchResult astar_search(const OccupancyGrid& grid, const Cell& source, const Cell& goal,
                          const Heuristic& heuristic, Connectivity connectivity,
                          bool record_trace) {
    SearchResult result;
    if (grid.is_occupied(source) || grid.is_occupied(goal)) {
        result.status = SearchStatus::invalid_endpoint;
        return result;
    }

    const int w = grid.width();
    const int h = grid.height();
    const double cell = grid.cell_size();
    const double axial_cost = cell;
    const double diagonal_cost = cell * std::sqrt(2.0);

    // g is always reconstituted from whole step counts so identical
    // (axial, diagonal) tallies yield identical doubles on every path.
    const auto g_of = [&](std::uint32_t ax, std::uint32_t dg) {
        return ax * axial_cost + dg * diagonal_cost;
    };
    const auto h_of = [&](const Cell& c) {
        const double base = heuristic.kind == HeuristicKind::manhattan
                                ? manhattan_distance(c, goal, cell)
                                : euclidean_distance(c, goal, cell);
        return heuristic.weight * base;
    };

    const std::size_t n = static_cast<std::size_t>(w) * h;
    constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<double> best_g(n, std::numeric_limits<double>::infinity());
    std::vector<std::uint32_t> parent(n, kNone);
    std::vector<std::uint32_t> ax_steps(n, 0), dg_steps(n, 0);
    std::vector<std::uint8_t> closed(n, 0);

    const auto index = [w](const Cell& c) {
        return static_cast<std::uint32_t>(c.row) * w + c.col;
    };

    std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
    std::uint64_t seq = 0;

    const std::uint32_t start = index(source);
    const std::uint32_t target = index(goal);
    best_g[start] = 0.0;
    open.push({h_of(source), h_of(source), seq++, start, 0.0});

    // Neighbor order is fixed (axials then diagonals) for determinism.
    static constexpr int kStep[8][2] = {{1, 0},  {0, 1},  {-1, 0}, {0, -1},
                                        {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
    const int moves = connectivity == Connectivity::eight ? 8 : 4;

    while (!open.empty()) {
        const OpenEntry top = open.top();
        open.pop();
        if (closed[top.cell] || top.g > best_g[top.cell]) continue; // stale entry
        closed[top.cell] = 1;
        ++result.expansions;
        const Cell here{static_cast<int>(top.cell % w), static_cast<int>(top.cell / w)};
        if (record_trace)
            result.trace.push_back({here, top.f, top.g, top.h});
        if (top.cell == target) break;

        for (int m = 0; m < moves; ++m) {
            const Cell next{here.col + kStep[m][0], here.row + kStep[m][1]};
            if (grid.is_occupied(next)) continue;
            const bool diagonal = m >= 4;
            if (diagonal) {
                // Both flanking axial cells must be free: no corner cutting.
                if (grid.is_occupied({here.col + kStep[m][0], here.row}) ||
                    grid.is_occupied({here.col, here.row + kStep[m][1]}))
                    continue;
            }
            const std::uint32_t ni = index(next);
            if (closed[ni]) continue;
            const std::uint32_t ax = ax_steps[top.cell] + (diagonal ? 0 : 1);
            const std::uint32_t dg = dg_steps[top.cell] + (diagonal ? 1 : 0);
            const double g = g_of(ax, dg);
            if (g < best_g[ni]) {
                best_g[ni] = g;
                parent[ni] = top.cell;
                ax_steps[ni] = ax;
                dg_steps[ni] = dg;
                const double hh = h_of(next);
                open.push({g + hh, hh, seq++, ni, g});
            }
        }
    }

    if (!closed[target]) {
        result.status = SearchStatus::no_path;
        return result;
    }

    result.status = SearchStatus::found;
    result.axial_steps = ax_steps[target];
    result.diagonal_steps = dg_steps[target];
    result.cost = g_of(result.axial_steps, result.diagonal_steps);

    std::vector<std::uint32_t> chain;
    for (std::uint32_t i = target; i != kNone; i = parent[i]) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    result.path.reserve(chain.size());
    for (const std::uint32_t i : chain)
        result.path.push_back(grid.center_of({static_cast<int>(i % w), static_cast<int>(i / w)}));
    return result;
}

} // namespace gridplan
