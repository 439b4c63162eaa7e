// gridplan: grid path planning over bitmap maps.
//
//   gridplan plan    --map m.pgm --source 2,3 --goal 40,38 [--planner both] [--render]
//   gridplan compare --map m.pgm --cases cases.txt [--render]
//   gridplan render  --map m.pgm report.txt [report2.txt ...] --out overlay.svg
//
// Exit codes: 0 ok, 2 bad flags/config, 3 unreadable or malformed input file,
// 4 occupied/out-of-bounds endpoint, 5 no path.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gridplan/pnm.hpp"
#include "gridplan/report_io.hpp"
#include "gridplan/run_config.hpp"
#include "gridplan/svg_render.hpp"

namespace {

using namespace gridplan;

int code(ExitCode c) { return static_cast<int>(c); }

int fail(ExitCode c, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return code(c);
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

// One flag definition table shared by the subcommands; every flag funnels
// through apply_config_value so the config file and the command line accept
// exactly the same keys, with explicit flags applied last (flags win).
struct FlagSet {
    std::vector<std::pair<std::string, std::string>> values; // key -> raw value
    std::string config_path;

    void add_to(CLI::App* cmd, const std::vector<std::pair<const char*, const char*>>& keys) {
        cmd->add_option("--config", config_path, "flat key = value configuration file");
        for (const auto& [key, help] : keys) {
            const std::string name = "--" + std::string(key);
            if (std::string(key) == "render") {
                cmd->add_flag_callback(
                    name, [this] { values.emplace_back("render", "true"); }, help);
            } else if (std::string(key) == "case") {
                cmd->add_option_function<std::vector<std::string>>(
                       name,
                       [this](const std::vector<std::string>& items) {
                           for (const auto& item : items) values.emplace_back("case", item);
                       },
                       help)
                    ->take_all();
            } else {
                cmd->add_option_function<std::string>(
                    name, [this, k = std::string(key)](const std::string& v) {
                        values.emplace_back(k, v);
                    },
                    help);
            }
        }
    }

    // defaults -> config file -> explicit flags; collects field-naming errors.
    std::vector<std::string> resolve(RunConfig& cfg) const {
        std::vector<std::string> errors;
        if (!config_path.empty()) {
            const auto file_errors = load_config_file(cfg, config_path);
            errors.insert(errors.end(), file_errors.begin(), file_errors.end());
        }
        for (const auto& [key, value] : values) {
            const std::string err = apply_config_value(cfg, key, value);
            if (!err.empty()) errors.push_back(err);
        }
        return errors;
    }
};

const std::vector<std::pair<const char*, const char*>> kPlanFlags = {
    {"map", "path to a P1/P2/P4/P5 bitmap map"},
    {"threshold", "gray values below this are obstacles (default 128)"},
    {"planner", "conventional, fusion, or both (default fusion)"},
    {"source", "source cell as col,row"},
    {"goal", "goal cell as col,row"},
    {"heuristic", "manhattan or euclidean (default euclidean)"},
    {"weight", "heuristic weight (default 1.0; >1 is inadmissible)"},
    {"connectivity", "4 or 8 neighbors per cell (default 8)"},
    {"G", "attraction gain (default 1.0)"},
    {"a", "repulsion gain (default 0.03)"},
    {"rho0", "obstacle influence radius (default 10)"},
    {"n", "goal-distance exponent in the repulsion (default 2)"},
    {"step", "smoothing step length (default 0.5)"},
    {"tol", "local-goal arrival radius (default 1.0)"},
    {"max-steps", "smoothing iteration cap per hop (0 = from chord length)"},
    {"f-min", "stall threshold on force magnitude (default 1e-9)"},
    {"delta-min", "lower clamp on obstacle distance (default 1e-3)"},
    {"inflate", "grow obstacles this many cells for visibility tests (default 0)"},
    {"repeat", "timing runs per case (default 5)"},
    {"out", "output directory (default .)"},
    {"render", "also write an SVG overlay"},
};

const std::vector<std::pair<const char*, const char*>> kCompareFlags = [] {
    auto flags = kPlanFlags;
    flags.emplace_back("cases", "case list file: one 'label col,row col,row' per line");
    flags.emplace_back("case", "inline case 'label:col,row:col,row' (repeatable)");
    return flags;
}();

std::optional<OccupancyGrid> load_map_or_fail(const RunConfig& cfg, int& exit_code) {
    if (cfg.map.empty()) {
        exit_code = fail(ExitCode::bad_config, "map: no map file given");
        return std::nullopt;
    }
    const auto bytes = read_file(cfg.map);
    if (!bytes) {
        exit_code = fail(ExitCode::io_error, "cannot read map file '" + cfg.map + "'");
        return std::nullopt;
    }
    try {
        return load_bitmap(*bytes, cfg.threshold);
    } catch (const PnmError& e) {
        exit_code = fail(ExitCode::io_error, cfg.map + ": " + e.what());
        return std::nullopt;
    }
}

int check_config(const RunConfig& cfg, const std::vector<std::string>& flag_errors) {
    std::vector<std::string> errors = flag_errors;
    const auto more = validate(cfg);
    errors.insert(errors.end(), more.begin(), more.end());
    if (errors.empty()) return code(ExitCode::ok);
    for (const auto& e : errors) std::cerr << "error: " << e << "\n";
    return code(ExitCode::bad_config);
}

bool prepare_out_dir(const RunConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    return !ec;
}

ExitCode endpoint_check(const OccupancyGrid& grid, const Cell& c, const char* what) {
    if (!grid.in_bounds(c)) {
        fail(ExitCode::bad_endpoint, std::string(what) + " cell is outside the map");
        return ExitCode::bad_endpoint;
    }
    if (grid.is_occupied(c)) {
        fail(ExitCode::bad_endpoint, std::string(what) + " cell is occupied");
        return ExitCode::bad_endpoint;
    }
    return ExitCode::ok;
}

int cmd_plan(const RunConfig& cfg, const std::vector<std::string>& flag_errors) {
    if (const int rc = check_config(cfg, flag_errors)) return rc;
    if (!cfg.source_set || !cfg.goal_set)
        return fail(ExitCode::bad_config, "source/goal: both endpoints are required");

    int rc = 0;
    const auto grid = load_map_or_fail(cfg, rc);
    if (!grid) return rc;
    if (endpoint_check(*grid, cfg.source, "source") != ExitCode::ok) return code(ExitCode::bad_endpoint);
    if (endpoint_check(*grid, cfg.goal, "goal") != ExitCode::ok) return code(ExitCode::bad_endpoint);
    if (!prepare_out_dir(cfg))
        return fail(ExitCode::io_error, "cannot create output directory '" + cfg.out_dir + "'");

    const PlannerConfig pc = planner_config(cfg);
    const bool run_conventional = cfg.planner == "conventional" || cfg.planner == "both";
    const bool run_fusion = cfg.planner == "fusion" || cfg.planner == "both";

    std::vector<PathOverlay> overlays;
    bool any_no_path = false;
    const auto emit = [&](const PlanReport& report) {
        const std::string path = cfg.out_dir + "/plan_" + report.planner + ".report.txt";
        if (!write_file(path, serialize_report(report, *grid, cfg.source, cfg.goal))) {
            fail(ExitCode::io_error, "cannot write '" + path + "'");
            return false;
        }
        std::cout << report.planner << ": " << to_string(report.status)
                  << " length=" << format_double(report.path_length)
                  << " time_s=" << format_double(report.running_time)
                  << " expansions=" << report.expansions
                  << " max_turn_deg=" << format_double(report.max_turn_angle) << "\n";
        if (report.status == PlanStatus::ok)
            overlays.push_back({report.planner, report.path, cfg.source, cfg.goal});
        else
            any_no_path = true;
        return true;
    };

    if (run_conventional && !emit(plan_conventional(*grid, cfg.source, cfg.goal, pc)))
        return code(ExitCode::io_error);
    if (run_fusion) {
        const DistanceField field(*grid);
        if (!emit(plan_fusion(*grid, field, cfg.source, cfg.goal, pc)))
            return code(ExitCode::io_error);
    }

    write_file(cfg.out_dir + "/effective_config.txt", effective_config_text(cfg));
    if (cfg.render)
        write_file(cfg.out_dir + "/plan.svg", render_svg(*grid, overlays));
    return code(any_no_path ? ExitCode::no_path : ExitCode::ok);
}

int cmd_compare(const RunConfig& cfg, const std::vector<std::string>& flag_errors) {
    std::vector<std::string> errors = flag_errors;
    std::vector<CaseSpec> cases = collect_cases(cfg, errors);
    if (const int rc = check_config(cfg, errors)) return rc;
    if (cases.empty()) return fail(ExitCode::bad_config, "cases: no benchmark cases given");

    int rc = 0;
    const auto grid = load_map_or_fail(cfg, rc);
    if (!grid) return rc;
    if (!prepare_out_dir(cfg))
        return fail(ExitCode::io_error, "cannot create output directory '" + cfg.out_dir + "'");

    const ComparisonResult result = compare(*grid, cases, planner_config(cfg));

    const std::string table = format_comparison_table(result);
    std::cout << table;
    write_file(cfg.out_dir + "/comparison.txt", table);
    write_file(cfg.out_dir + "/comparison.csv", format_comparison_csv(result));
    write_file(cfg.out_dir + "/effective_config.txt", effective_config_text(cfg));

    bool any_invalid = false, any_no_path = false;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const CaseSpec& c = cases[i];
        write_file(cfg.out_dir + "/" + c.label + "_conventional.report.txt",
                   serialize_report(result.baseline_reports[i], *grid, c.source, c.goal));
        write_file(cfg.out_dir + "/" + c.label + "_fusion.report.txt",
                   serialize_report(result.fusion_reports[i], *grid, c.source, c.goal));
        if (cfg.render) {
            std::vector<PathOverlay> overlays;
            if (result.baseline_reports[i].status == PlanStatus::ok)
                overlays.push_back({"conventional", result.baseline_reports[i].path, c.source, c.goal});
            if (result.fusion_reports[i].status == PlanStatus::ok)
                overlays.push_back({"fusion", result.fusion_reports[i].path, c.source, c.goal});
            write_file(cfg.out_dir + "/" + c.label + ".svg", render_svg(*grid, overlays));
        }
        for (const PlanStatus s : {result.rows[i].baseline_status, result.rows[i].fusion_status}) {
            if (s == PlanStatus::invalid_endpoint) any_invalid = true;
            if (s == PlanStatus::no_path) any_no_path = true;
        }
    }
    if (any_invalid) return code(ExitCode::bad_endpoint);
    if (any_no_path) return code(ExitCode::no_path);
    return code(ExitCode::ok);
}

int cmd_render(const RunConfig& cfg, const std::vector<std::string>& flag_errors,
               const std::vector<std::string>& report_paths, const std::string& out_file) {
    if (const int rc = check_config(cfg, flag_errors)) return rc;
    if (report_paths.empty())
        return fail(ExitCode::bad_config, "reports: at least one report file is required");

    int rc = 0;
    const auto grid = load_map_or_fail(cfg, rc);
    if (!grid) return rc;

    std::vector<PathOverlay> overlays;
    for (const std::string& path : report_paths) {
        const auto bytes = read_file(path);
        if (!bytes) return fail(ExitCode::io_error, "cannot read report '" + path + "'");
        ParsedReport rep;
        try {
            rep = parse_report(*bytes);
        } catch (const std::exception& e) {
            return fail(ExitCode::io_error, path + ": " + e.what());
        }
        if (rep.grid_width != grid->width() || rep.grid_height != grid->height())
            return fail(ExitCode::bad_config,
                        path + ": report is for a " + std::to_string(rep.grid_width) + "x" +
                            std::to_string(rep.grid_height) + " map, not " +
                            std::to_string(grid->width()) + "x" + std::to_string(grid->height()));
        overlays.push_back({rep.planner, rep.waypoints, rep.source, rep.goal});
    }

    if (!write_file(out_file, render_svg(*grid, overlays)))
        return fail(ExitCode::io_error, "cannot write '" + out_file + "'");
    std::cout << "wrote " << out_file << "\n";
    return code(ExitCode::ok);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid path planning: A* baseline and pruned potential-field smoothing"};
    app.require_subcommand(1);

    FlagSet plan_flags, compare_flags, render_flags;
    CLI::App* plan = app.add_subcommand("plan", "plan a single source->goal route");
    plan_flags.add_to(plan, kPlanFlags);

    CLI::App* comp = app.add_subcommand("compare", "benchmark both planners over a case list");
    compare_flags.add_to(comp, kCompareFlags);

    CLI::App* render = app.add_subcommand("render", "draw reports over a map as SVG");
    std::vector<std::string> report_paths;
    std::string render_out = "render.svg";
    render_flags.add_to(render, {{"map", "path to the bitmap the reports were planned on"},
                                 {"threshold", "gray values below this are obstacles"}});
    render->add_option("reports", report_paths, "report files produced by plan/compare");
    render->add_option("--out", render_out, "output SVG file (default render.svg)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return static_cast<int>(ExitCode::bad_config);
    }

    try {
        RunConfig cfg;
        if (plan->parsed()) {
            const auto errors = plan_flags.resolve(cfg);
            return cmd_plan(cfg, errors);
        }
        if (comp->parsed()) {
            const auto errors = compare_flags.resolve(cfg);
            return cmd_compare(cfg, errors);
        }
        const auto errors = render_flags.resolve(cfg);
        return cmd_render(cfg, errors, report_paths, render_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::internal);
    }
}
