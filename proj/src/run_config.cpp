#include "gridplan/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gridplan/report_io.hpp"

namespace gridplan {
namespace {

bool to_int(const std::string& s, int& out) {
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

bool to_double(const std::string& s, double& out) {
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

bool to_cell(const std::string& s, Cell& out) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos) return false;
    return to_int(s.substr(0, comma), out.col) && to_int(s.substr(comma + 1), out.row);
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

std::string apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    const auto bad = [&](const char* expected) {
        return key + ": expected " + expected + ", got '" + value + "'";
    };

    if (key == "map") { cfg.map = value; return ""; }
    if (key == "planner") {
        if (value != "conventional" && value != "fusion" && value != "both")
            return bad("conventional, fusion, or both");
        cfg.planner = value;
        return "";
    }
    if (key == "heuristic") {
        if (value != "manhattan" && value != "euclidean") return bad("manhattan or euclidean");
        cfg.heuristic = value;
        return "";
    }
    if (key == "source") {
        if (!to_cell(value, cfg.source)) return bad("col,row");
        cfg.source_set = true;
        return "";
    }
    if (key == "goal") {
        if (!to_cell(value, cfg.goal)) return bad("col,row");
        cfg.goal_set = true;
        return "";
    }
    if (key == "out") { cfg.out_dir = value; return ""; }
    if (key == "cases") { cfg.cases_file = value; return ""; }
    if (key == "case") { cfg.inline_cases.push_back(value); return ""; }
    if (key == "render") {
        if (value == "true" || value == "1") cfg.render = true;
        else if (value == "false" || value == "0") cfg.render = false;
        else return bad("true or false");
        return "";
    }

    static const struct { const char* key; int RunConfig::* field; } int_keys[] = {
        {"threshold", &RunConfig::threshold},   {"connectivity", &RunConfig::connectivity},
        {"n", &RunConfig::exponent},            {"max-steps", &RunConfig::max_steps},
        {"inflate", &RunConfig::prune_margin},  {"repeat", &RunConfig::repeat},
    };
    for (const auto& k : int_keys)
        if (key == k.key) {
            if (!to_int(value, cfg.*(k.field))) return bad("an integer");
            return "";
        }

    static const struct { const char* key; double RunConfig::* field; } double_keys[] = {
        {"weight", &RunConfig::weight},         {"G", &RunConfig::attract_gain},
        {"a", &RunConfig::repulse_gain},        {"rho0", &RunConfig::rho0},
        {"step", &RunConfig::step},             {"tol", &RunConfig::tolerance},
        {"f-min", &RunConfig::force_floor},     {"delta-min", &RunConfig::min_obstacle_distance},
    };
    for (const auto& k : double_keys)
        if (key == k.key) {
            if (!to_double(value, cfg.*(k.field))) return bad("a number");
            return "";
        }

    return "unknown configuration key '" + key + "'";
}

std::vector<std::string> load_config_file(RunConfig& cfg, const std::string& path) {
    std::vector<std::string> errors;
    std::ifstream in(path);
    if (!in) {
        errors.push_back("cannot open config file '" + path + "'");
        return errors;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string trimmed = trim(line);
        if (trimmed.empty()) continue;
        const std::size_t eq = trimmed.find('=');
        if (eq == std::string::npos) {
            errors.push_back(path + ":" + std::to_string(line_no) + ": expected key = value");
            continue;
        }
        const std::string key = trim(trimmed.substr(0, eq));
        const std::string value = trim(trimmed.substr(eq + 1));
        const std::string err = apply_config_value(cfg, key, value);
        if (!err.empty()) errors.push_back(path + ":" + std::to_string(line_no) + ": " + err);
    }
    return errors;
}

std::vector<std::string> validate(const RunConfig& cfg) {
    std::vector<std::string> errors;
    const auto need = [&](bool ok, const char* message) {
        if (!ok) errors.push_back(message);
    };
    need(cfg.threshold >= 0 && cfg.threshold <= 255, "threshold: must be in [0, 255]");
    need(cfg.weight > 0.0, "weight: must be positive");
    need(cfg.connectivity == 4 || cfg.connectivity == 8, "connectivity: must be 4 or 8");
    need(cfg.attract_gain > 0.0, "G: must be positive");
    need(cfg.repulse_gain >= 0.0, "a: must be non-negative");
    need(cfg.rho0 > 0.0, "rho0: must be positive");
    need(cfg.exponent >= 1, "n: must be at least 1");
    need(cfg.step > 0.0, "step: must be positive");
    need(cfg.tolerance > 0.0, "tol: must be positive");
    need(cfg.max_steps >= 0, "max-steps: must be non-negative (0 derives from chord)");
    need(cfg.force_floor > 0.0, "f-min: must be positive");
    need(cfg.min_obstacle_distance > 0.0, "delta-min: must be positive");
    need(cfg.prune_margin >= 0, "inflate: must be non-negative");
    need(cfg.repeat >= 1, "repeat: must be at least 1");
    return errors;
}

std::string effective_config_text(const RunConfig& cfg) {
    std::ostringstream out;
    out << "map = " << cfg.map << "\n";
    out << "threshold = " << cfg.threshold << "\n";
    out << "planner = " << cfg.planner << "\n";
    if (cfg.source_set)
        out << "source = " << cfg.source.col << "," << cfg.source.row << "\n";
    if (cfg.goal_set)
        out << "goal = " << cfg.goal.col << "," << cfg.goal.row << "\n";
    out << "heuristic = " << cfg.heuristic << "\n";
    out << "weight = " << format_double(cfg.weight) << "\n";
    out << "connectivity = " << cfg.connectivity << "\n";
    out << "G = " << format_double(cfg.attract_gain) << "\n";
    out << "a = " << format_double(cfg.repulse_gain) << "\n";
    out << "rho0 = " << format_double(cfg.rho0) << "\n";
    out << "n = " << cfg.exponent << "\n";
    out << "step = " << format_double(cfg.step) << "\n";
    out << "tol = " << format_double(cfg.tolerance) << "\n";
    out << "max-steps = " << cfg.max_steps << "\n";
    out << "f-min = " << format_double(cfg.force_floor) << "\n";
    out << "delta-min = " << format_double(cfg.min_obstacle_distance) << "\n";
    out << "inflate = " << cfg.prune_margin << "\n";
    out << "repeat = " << cfg.repeat << "\n";
    out << "render = " << (cfg.render ? "true" : "false") << "\n";
    if (!cfg.cases_file.empty()) out << "cases = " << cfg.cases_file << "\n";
    for (const std::string& c : cfg.inline_cases) out << "case = " << c << "\n";
    return out.str();
}

PlannerConfig planner_config(const RunConfig& cfg) {
    PlannerConfig pc;
    pc.heuristic.kind =
        cfg.heuristic == "manhattan" ? HeuristicKind::manhattan : HeuristicKind::euclidean;
    pc.heuristic.weight = cfg.weight;
    pc.connectivity = cfg.connectivity == 4 ? Connectivity::four : Connectivity::eight;
    pc.apf.gain_att = cfg.attract_gain;
    pc.apf.gain_rep = cfg.repulse_gain;
    pc.apf.rho0 = cfg.rho0;
    pc.apf.n = cfg.exponent;
    pc.apf.step_size = cfg.step;
    pc.apf.goal_tolerance = cfg.tolerance;
    pc.apf.max_steps = cfg.max_steps;
    pc.apf.force_floor = cfg.force_floor;
    pc.apf.min_obstacle_distance = cfg.min_obstacle_distance;
    pc.prune_margin = cfg.prune_margin;
    pc.repeat = cfg.repeat;
    return pc;
}

std::vector<CaseSpec> collect_cases(const RunConfig& cfg, std::vector<std::string>& errors) {
    std::vector<CaseSpec> cases;

    const auto parse_inline = [&](const std::string& text) {
        const std::size_t c1 = text.find(':');
        const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
        CaseSpec spec;
        if (c2 == std::string::npos || !to_cell(text.substr(c1 + 1, c2 - c1 - 1), spec.source) ||
            !to_cell(text.substr(c2 + 1), spec.goal) || c1 == 0) {
            errors.push_back("case '" + text + "': expected label:col,row:col,row");
            return;
        }
        spec.label = text.substr(0, c1);
        cases.push_back(spec);
    };

    for (const std::string& c : cfg.inline_cases) parse_inline(c);

    if (!cfg.cases_file.empty()) {
        std::ifstream in(cfg.cases_file);
        if (!in) {
            errors.push_back("cannot open cases file '" + cfg.cases_file + "'");
            return cases;
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream row(line);
            std::string label, src, dst;
            if (!(row >> label)) continue; // blank line
            if (!(row >> src >> dst)) {
                errors.push_back(cfg.cases_file + ":" + std::to_string(line_no) +
                                 ": expected label col,row col,row");
                continue;
            }
            CaseSpec spec;
            spec.label = label;
            if (!to_cell(src, spec.source) || !to_cell(dst, spec.goal)) {
                errors.push_back(cfg.cases_file + ":" + std::to_string(line_no) +
                                 ": expected col,row coordinates");
                continue;
            }
            cases.push_back(spec);
        }
    }
    return cases;
}

} // namespace gridplan
