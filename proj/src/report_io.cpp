#include "gridplan/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace gridplan {

std::string format_double(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec; // 64 bytes always suffice for shortest round-trip form
    return std::string(buf, end);
}

const char* to_string(PlanStatus s) {
    switch (s) {
    case PlanStatus::ok: return "ok";
    case PlanStatus::no_path: return "no_path";
    default: return "invalid_endpoint";
    }
}

const char* to_string(SegmentOutcome o) {
    switch (o) {
    case SegmentOutcome::reached: return "reached";
    case SegmentOutcome::capped: return "capped";
    default: return "stalled";
    }
}

std::string serialize_report(const PlanReport& report, const OccupancyGrid& grid,
                             const Cell& source, const Cell& goal) {
    std::string out;
    out += "format: gridplan-report/1\n";
    out += "planner: " + report.planner + "\n";
    out += std::string("status: ") + to_string(report.status) + "\n";
    out += "grid_width: " + std::to_string(grid.width()) + "\n";
    out += "grid_height: " + std::to_string(grid.height()) + "\n";
    out += "cell_size: " + format_double(grid.cell_size()) + "\n";
    out += std::string("heuristic: ") +
           (report.heuristic_used.kind == HeuristicKind::manhattan ? "manhattan" : "euclidean") +
           "\n";
    out += "heuristic_weight: " + format_double(report.heuristic_used.weight) + "\n";
    out += std::string("heuristic_admissible: ") + (report.heuristic_admissible ? "yes" : "no") +
           "\n";
    out += "source_cell: " + std::to_string(source.col) + "," + std::to_string(source.row) + "\n";
    out += "goal_cell: " + std::to_string(goal.col) + "," + std::to_string(goal.row) + "\n";
    out += "path_length: " + format_double(report.path_length) + "\n";
    out += "running_time_s: " + format_double(report.running_time) + "\n";
    out += "expansions: " + std::to_string(report.expansions) + "\n";
    out += "max_turn_angle_deg: " + format_double(report.max_turn_angle) + "\n";
    out += "segment_outcomes:";
    for (std::size_t i = 0; i < report.segment_outcomes.size(); ++i)
        out += std::string(i ? "," : " ") + to_string(report.segment_outcomes[i]);
    out += "\n";
    out += "waypoint_count: " + std::to_string(report.path.size()) + "\n";
    out += "waypoints:\n";
    for (const Point& p : report.path)
        out += format_double(p.x) + "," + format_double(p.y) + "\n";
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
    throw std::runtime_error("report line " + std::to_string(line_no) + ": " + why);
}

double to_double(std::string_view s, std::size_t line_no) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) parse_fail(line_no, "bad number");
    return v;
}

} // namespace

ParsedReport parse_report(std::string_view text) {
    ParsedReport rep;
    std::size_t pos = 0, line_no = 0;
    bool in_waypoints = false;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;

        if (in_waypoints) {
            const std::size_t comma = line.find(',');
            if (comma == std::string_view::npos) parse_fail(line_no, "expected x,y waypoint");
            rep.waypoints.push_back({to_double(line.substr(0, comma), line_no),
                                     to_double(line.substr(comma + 1), line_no)});
            continue;
        }

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) parse_fail(line_no, "expected key: value");
        const std::string_view key = line.substr(0, colon);
        std::string_view value = line.substr(colon + 1);
        while (!value.empty() && value.front() == ' ') value.remove_prefix(1);

        const auto cell_value = [&](Cell& out) {
            const std::size_t comma = value.find(',');
            if (comma == std::string_view::npos) parse_fail(line_no, "expected col,row");
            out.col = static_cast<int>(to_double(value.substr(0, comma), line_no));
            out.row = static_cast<int>(to_double(value.substr(comma + 1), line_no));
        };

        if (key == "format") {
            if (value != "gridplan-report/1") parse_fail(line_no, "unknown report format");
        } else if (key == "planner") {
            rep.planner = std::string(value);
        } else if (key == "status") {
            rep.status = std::string(value);
        } else if (key == "grid_width") {
            rep.grid_width = static_cast<int>(to_double(value, line_no));
        } else if (key == "grid_height") {
            rep.grid_height = static_cast<int>(to_double(value, line_no));
        } else if (key == "cell_size") {
            rep.cell_size = to_double(value, line_no);
        } else if (key == "source_cell") {
            cell_value(rep.source);
        } else if (key == "goal_cell") {
            cell_value(rep.goal);
        } else if (key == "waypoints") {
            in_waypoints = true;
        }
        // other keys are informational; ignore for forward compatibility
    }
    if (rep.planner.empty()) throw std::runtime_error("report: missing planner field");
    if (rep.grid_width <= 0 || rep.grid_height <= 0)
        throw std::runtime_error("report: missing grid dimensions");
    return rep;
}

std::string format_comparison_table(const ComparisonResult& result) {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf, "%-10s %12s %12s %12s %12s %10s %10s %8s\n", "case",
                  "conv_time_s", "conv_len", "fus_time_s", "fus_len", "time_red%", "len_red%",
                  "status");
    out += buf;
    for (const ComparisonRow& r : result.rows) {
        if (r.ok()) {
            std::snprintf(buf, sizeof buf, "%-10s %12.6f %12.4f %12.6f %12.4f %10.2f %10.2f %8s\n",
                          r.label.c_str(), r.baseline_time, r.baseline_length, r.fusion_time,
                          r.fusion_length, r.pct_time_reduction, r.pct_length_reduction, "ok");
        } else {
            const char* status = r.baseline_status != PlanStatus::ok ? to_string(r.baseline_status)
                                                                     : to_string(r.fusion_status);
            std::snprintf(buf, sizeof buf, "%-10s %12s %12s %12s %12s %10s %10s %8s\n",
                          r.label.c_str(), "-", "-", "-", "-", "-", "-", status);
        }
        out += buf;
    }
    return out;
}

std::string format_comparison_csv(const ComparisonResult& result) {
    std::string out = "case,baseline_status,fusion_status,baseline_time_s,fusion_time_s,"
                      "baseline_length,fusion_length,baseline_max_turn_deg,fusion_max_turn_deg,"
                      "pct_time_reduction,pct_length_reduction\n";
    for (const ComparisonRow& r : result.rows) {
        out += r.label + "," + to_string(r.baseline_status) + "," + to_string(r.fusion_status) +
               "," + format_double(r.baseline_time) + "," + format_double(r.fusion_time) + "," +
               format_double(r.baseline_length) + "," + format_double(r.fusion_length) + "," +
               format_double(r.baseline_max_turn) + "," + format_double(r.fusion_max_turn) + "," +
               format_double(r.pct_time_reduction) + "," + format_double(r.pct_length_reduction) +
               "\n";
    }
    return out;
}

} // namespace gridplan
