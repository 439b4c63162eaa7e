#pragma once

#include <cstdint>
#include <vector>

#include "gridplan/geometry.hpp"
#include "gridplan/gridmap.hpp"

namespace gridplan {

enum class HeuristicKind { manhattan, euclidean };

struct Heuristic {
    HeuristicKind kind = HeuristicKind::euclidean;
    double weight = 1.0; // multiplies the base estimate; 1.0 keeps euclidean admissible
};

enum class Connectivity { four = 4, eight = 8 };

// |dx| + |dy| and sqrt(dx^2 + dy^2) in world units between cell centers.
double manhattan_distance(const Cell& a, const Cell& b, double cell_size);
double euclidean_distance(const Cell& a, const Cell& b, double cell_size);

enum class SearchStatus {
    found,
    no_path,          // endpoints valid but disconnected
    invalid_endpoint, // source or goal occupied or outside the grid
};

struct ExpansionRecord {
    Cell cell;
    double f = 0.0;
    double g = 0.0;
    double h = 0.0;
};

struct SearchResult {
    SearchStatus status = SearchStatus::no_path;
    std::vector<Point> path;      // cell-center waypoints, source first
    double cost = 0.0;            // axial_steps*cell + diagonal_steps*cell*sqrt(2)
    std::uint32_t axial_steps = 0;
    std::uint32_t diagonal_steps = 0;
    std::uint64_t expansions = 0;
    std::vector<ExpansionRecord> trace; // filled only when requested
};

// Grid A* over 4- or 8-connected moves.  Axial steps cost cell_size and
// diagonal steps cost cell_size*sqrt(2); a diagonal move is allowed only when
// both flanking axial cells are free, so paths never cut obstacle corners.
//
// Deterministic: the open list orders by smaller f, then smaller h, then
// insertion sequence (FIFO), with stale heap entries skipped lazily.  Costs
// are recomputed from integer step counts at every relaxation, which makes
// the returned cost independent of the order edges were relaxed in.
SearchResult astar_search(const OccupancyGrid& grid, const Cell& source, const Cell& goal,
                          const Heuristic& heuristic = {},
                          Connectivity connectivity = Connectivity::eight,
                          bool record_trace = false);

} // namespace gridplan
