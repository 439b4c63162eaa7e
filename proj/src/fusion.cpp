#include "gridplan/fusion.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gridplan/prune.hpp"

namespace gridplan {
namespace {

constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point& t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PlanStatus status_of(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return PlanStatus::ok;
    case SearchStatus::invalid_endpoint: return PlanStatus::invalid_endpoint;
    default: return PlanStatus::no_path;
    }
}

void fill_metrics(PlanReport& report, const PlannerConfig& cfg) {
    report.path_length = path_length(report.path);
    report.max_turn_angle = max_turn_angle_deg(report.path);
    report.heuristic_used = cfg.heuristic;
    report.heuristic_admissible =
        cfg.heuristic.kind == HeuristicKind::euclidean && cfg.heuristic.weight <= 1.0;
}

} // namespace

PlannerConfig PlannerConfig::defaults_for(double cell_size) {
    PlannerConfig cfg;
    cfg.apf = ApfConfig::for_cell_size(cell_size);
    return cfg;
}

double path_length(const std::vector<Point>& path) {
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) total += distance(path[i - 1], path[i]);
    return total;
}

double max_turn_angle_deg(const std::vector<Point>& path) {
    double worst = 0.0;
    Point prev{0.0, 0.0};
    bool have_prev = false;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Point seg = path[i] - path[i - 1];
        if (seg.norm() == 0.0) continue;
        if (have_prev) {
            // atan2 of (cross, dot) stays exact for collinear segments (the
            // cross product cancels to 0 bitwise), where acos of a normalized
            // dot product picks up rounding noise near 1.
            const double cross = prev.x * seg.y - prev.y * seg.x;
            const double angle = std::atan2(std::abs(cross), dot(prev, seg));
            worst = std::max(worst, angle * 180.0 / kPi);
        }
        prev = seg;
        have_prev = true;
    }
    return worst;
}

PlanReport plan_conventional(const OccupancyGrid& grid, const Cell& source, const Cell& goal,
                             const PlannerConfig& cfg) {
    PlanReport report;
    report.planner = "conventional";
    const auto t0 = Clock::now();
    SearchResult search = astar_search(grid, source, goal, cfg.heuristic, cfg.connectivity);
    report.running_time = seconds_since(t0);
    report.status = status_of(search.status);
    report.expansions = search.expansions;
    if (report.status == PlanStatus::ok) report.path = std::move(search.path);
    fill_metrics(report, cfg);
    return report;
}

PlanReport plan_fusion(const OccupancyGrid& grid, const DistanceField& field, const Cell& source,
                       const Cell& goal, const PlannerConfig& cfg) {
    PlanReport report;
    report.planner = "fusion";
    const auto t0 = Clock::now();
    SearchResult search = astar_search(grid, source, goal, cfg.heuristic, cfg.connectivity);
    report.status = status_of(search.status);
    report.expansions = search.expansions;
    if (report.status != PlanStatus::ok) {
        report.running_time = seconds_since(t0);
        fill_metrics(report, cfg);
        return report;
    }

    const std::vector<Point> keys = extract_key_nodes(grid, search.path, cfg.prune_margin);

    report.path.push_back(keys.front());
    for (std::size_t i = 1; i < keys.size(); ++i) {
        ApfSegment seg = apf_segment(grid, field, keys[i - 1], keys[i], cfg.apf);
        if (seg.outcome == SegmentOutcome::reached)
            for (const Point& p : seg.waypoints) report.path.push_back(p);
        // capped/stalled: drop the walk and keep the straight chord
        report.path.push_back(keys[i]);
        report.segment_outcomes.push_back(seg.outcome);
    }
    report.running_time = seconds_since(t0);
    fill_metrics(report, cfg);
    return report;
}

PlanReport plan_fusion(const OccupancyGrid& grid, const Cell& source, const Cell& goal,
                       const PlannerConfig& cfg) {
    const DistanceField field(grid);
    return plan_fusion(grid, field, source, goal, cfg);
}

bool ComparisonResult::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.ok(); });
}

ComparisonResult compare(const OccupancyGrid& grid, const std::vector<CaseSpec>& cases,
                         const PlannerConfig& cfg, bool self_check) {
    ComparisonResult result;
    const DistanceField field(grid); // shared, built outside the timed region
    const int repeat = std::max(1, cfg.repeat);

    for (const CaseSpec& c : cases) {
        std::vector<double> base_times, fusion_times;
        PlanReport base, fused;
        for (int r = 0; r < repeat; ++r) {
            base = plan_conventional(grid, c.source, c.goal, cfg);
            base_times.push_back(base.running_time);
        }
        for (int r = 0; r < repeat; ++r) {
            fused = self_check ? plan_conventional(grid, c.source, c.goal, cfg)
                               : plan_fusion(grid, field, c.source, c.goal, cfg);
            fusion_times.push_back(fused.running_time);
        }

        const auto median = [](std::vector<double>& v) {
            std::sort(v.begin(), v.end());
            const std::size_t m = v.size() / 2;
            return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
        };

        ComparisonRow row;
        row.label = c.label;
        row.baseline_status = base.status;
        row.fusion_status = fused.status;
        row.baseline_time = median(base_times);
        row.fusion_time = median(fusion_times);
        row.baseline_length = base.path_length;
        row.fusion_length = fused.path_length;
        row.baseline_max_turn = base.max_turn_angle;
        row.fusion_max_turn = fused.max_turn_angle;
        row.baseline_expansions = base.expansions;
        if (row.ok()) {
            if (row.baseline_time > 0.0)
                row.pct_time_reduction =
                    100.0 * (row.baseline_time - row.fusion_time) / row.baseline_time;
            if (row.baseline_length > 0.0)
                row.pct_length_reduction =
                    100.0 * (row.baseline_length - row.fusion_length) / row.baseline_length;
        }
        base.running_time = row.baseline_time;
        fused.running_time = row.fusion_time;
        result.rows.push_back(std::move(row));
        result.baseline_reports.push_back(std::move(base));
        result.fusion_reports.push_back(std::move(fused));
    }
    return result;
}

} // namespace gridplan
