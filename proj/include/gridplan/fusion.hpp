#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridplan/apf.hpp"
#include "gridplan/astar.hpp"
#include "gridplan/distance_field.hpp"
#include "gridplan/geometry.hpp"
#include "gridplan/gridmap.hpp"

namespace gridplan {

// Everything the planners need beyond the map itself.
struct PlannerConfig {
    Heuristic heuristic;                          // euclidean, weight 1 by default
    Connectivity connectivity = Connectivity::eight;
    ApfConfig apf;                                // lengths assume cell_size 1
    int prune_margin = 0;                         // extra obstacle growth for visibility tests
    int repeat = 5;                               // timing runs per case in compare()

    static PlannerConfig defaults_for(double cell_size);
};

enum class PlanStatus { ok, no_path, invalid_endpoint };

struct PlanReport {
    PlanStatus status = PlanStatus::no_path;
    std::string planner;                  // "conventional" or "fusion"
    std::vector<Point> path;              // world-unit waypoints, source center first
    double path_length = 0.0;             // polyline length of `path`
    double running_time = 0.0;            // seconds spent planning (excludes map prep)
    std::uint64_t expansions = 0;         // grid cells the search expanded
    double max_turn_angle = 0.0;          // degrees, sharpest waypoint-to-waypoint turn
    std::vector<SegmentOutcome> segment_outcomes; // one per key-node hop (fusion only)
    Heuristic heuristic_used;
    bool heuristic_admissible = true;     // euclidean at weight <= 1
};

// Sum of consecutive waypoint distances; 0 for fewer than two waypoints.
double path_length(const std::vector<Point>& path);

// Largest direction change between consecutive polyline segments, in degrees
// within [0, 180].  Zero-length segments are skipped; 0 for straight paths.
double max_turn_angle_deg(const std::vector<Point>& path);

// Plain grid A* from source to goal (no pruning, no smoothing), timed.
PlanReport plan_conventional(const OccupancyGrid& grid, const Cell& source, const Cell& goal,
                             const PlannerConfig& cfg);

// Three-stage pipeline: A* preliminary path, key-node pruning, then a
// potential-field pass between consecutive key nodes.  Hops whose smoothing
// run is capped or stalls keep the straight chord (the outcome list records
// this); key nodes themselves always appear on the final path.
PlanReport plan_fusion(const OccupancyGrid& grid, const DistanceField& field, const Cell& source,
                       const Cell& goal, const PlannerConfig& cfg);
PlanReport plan_fusion(const OccupancyGrid& grid, const Cell& source, const Cell& goal,
                       const PlannerConfig& cfg);

struct CaseSpec {
    std::string label;
    Cell source;
    Cell goal;
};

struct ComparisonRow {
    std::string label;
    PlanStatus baseline_status = PlanStatus::no_path;
    PlanStatus fusion_status = PlanStatus::no_path;
    double baseline_time = 0.0; // median over `repeat` runs, seconds
    double fusion_time = 0.0;
    double baseline_length = 0.0;
    double fusion_length = 0.0;
    double baseline_max_turn = 0.0;
    double fusion_max_turn = 0.0;
    std::uint64_t baseline_expansions = 0;
    double pct_time_reduction = 0.0;   // 100 * (baseline - fusion) / baseline
    double pct_length_reduction = 0.0;

    bool ok() const { return baseline_status == PlanStatus::ok && fusion_status == PlanStatus::ok; }
};

struct ComparisonResult {
    std::vector<ComparisonRow> rows;
    std::vector<PlanReport> baseline_reports; // one per case, same order
    std::vector<PlanReport> fusion_reports;
    bool all_ok() const;
};

// Runs both planners on every case with the same configuration and reports
// median-of-`repeat` timings.  Cases run sequentially so timings stay honest.
// A case that fails in either arm is marked and the rest still run.
// `self_check` swaps the fusion arm for a second conventional run; the
// percentage columns should then hover at zero (harness self-test).
ComparisonResult compare(const OccupancyGrid& grid, const std::vector<CaseSpec>& cases,
                         const PlannerConfig& cfg, bool self_check = false);

} // namespace gridplan
