#pragma once

#include <string>
#include <vector>

#include "gridplan/fusion.hpp"

namespace gridplan {

// Process exit codes shared by the CLI and its tests.
enum class ExitCode : int {
    ok = 0,
    internal = 1,
    bad_config = 2,   // malformed flags, config file, or case list
    io_error = 3,     // unreadable or malformed map / input file
    bad_endpoint = 4, // source or goal occupied or out of bounds
    no_path = 5,      // valid endpoints but no route exists
};

// Everything a CLI run needs, expressed as plain values.  The same keys work
// as `key = value` lines in a config file and as long-option names (flags win
// over file values).  Lengths are in world units with cell_size fixed at 1.
struct RunConfig {
    std::string map;            // path to a P1/P2/P4/P5 bitmap
    int threshold = 128;        // gray < threshold is an obstacle
    std::string planner = "fusion"; // plan subcommand: conventional | fusion | both
    Cell source{0, 0};
    Cell goal{0, 0};
    bool source_set = false;
    bool goal_set = false;
    std::string heuristic = "euclidean";
    double weight = 1.0;
    int connectivity = 8;
    double attract_gain = 1.0;        // G
    double repulse_gain = 0.03;       // a
    double rho0 = 10.0;
    int exponent = 2;                 // n
    double step = 0.5;
    double tolerance = 1.0;
    int max_steps = 0;                // 0 = derive from chord length
    double force_floor = 1e-9;
    double min_obstacle_distance = 1e-3;
    int prune_margin = 0;
    int repeat = 5;
    std::string out_dir = ".";
    bool render = false;
    std::string cases_file;           // compare: one "label col,row col,row" per line
    std::vector<std::string> inline_cases; // compare: "label:col,row:col,row"
};

// Applies one key/value pair; returns an error message naming the field, or
// empty on success.  Unknown keys are errors.
std::string apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Reads a flat key-value file ('#' comments, blank lines allowed).  Errors
// (I/O or syntax) are returned as messages; an empty vector means success.
std::vector<std::string> load_config_file(RunConfig& cfg, const std::string& path);

// Field-naming diagnostics for out-of-range values; empty when valid.
std::vector<std::string> validate(const RunConfig& cfg);

// The full configuration as a reloadable config file, fixed key order.
std::string effective_config_text(const RunConfig& cfg);

// Planner-level view of the run configuration.
PlannerConfig planner_config(const RunConfig& cfg);

// Parses "label:col,row:col,row" (inline) entries and case-list files.
// Errors are returned as messages appended to `errors`.
std::vector<CaseSpec> collect_cases(const RunConfig& cfg, std::vector<std::string>& errors);

} // namespace gridplan
