#pragma once

#include <string>
#include <string_view>

#include "gridplan/fusion.hpp"

namespace gridplan {

// Shortest decimal form that parses back to the exact same double
// (locale-independent), e.g. "2.5", "0.8503703703703703".
std::string format_double(double v);

// Plan reports serialize to a flat key-value text document with a fixed field
// order, followed by one "x,y" waypoint per line.  Identical plans produce
// identical bytes except for the running_time_s line.
std::string serialize_report(const PlanReport& report, const OccupancyGrid& grid,
                             const Cell& source, const Cell& goal);

// Subset of a report that rendering and tests need back.
struct ParsedReport {
    std::string planner;
    std::string status;
    int grid_width = 0;
    int grid_height = 0;
    double cell_size = 1.0;
    Cell source;
    Cell goal;
    std::vector<Point> waypoints;
};

// Throws std::runtime_error with a line-numbered message on malformed input.
ParsedReport parse_report(std::string_view text);

// Human-readable aligned table of comparison rows.
std::string format_comparison_table(const ComparisonResult& result);

// Machine-readable CSV, one row per case, header included.
std::string format_comparison_csv(const ComparisonResult& result);

const char* to_string(PlanStatus s);
const char* to_string(SegmentOutcome o);

} // namespace gridplan
