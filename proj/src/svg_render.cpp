#include "gridplan/svg_render.hpp"

#include <algorithm>

#include "gridplan/report_io.hpp"

namespace gridplan {
namespace {

const char* stroke_for(const std::string& planner) {
    if (planner == "conventional") return "#cc2222";
    if (planner == "fusion") return "#2244cc";
    return "#888888";
}

} // namespace

std::string render_svg(const OccupancyGrid& grid, const std::vector<PathOverlay>& overlays) {
    // Work in cell units; world coordinates divide out cell_size so the
    // image is independent of the physical scale.
    const int w = grid.width();
    const int h = grid.height();
    const double s = grid.cell_size();
    const double marker_r = std::max(1.0, w / 100.0);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(w) + " " +
           std::to_string(h) + "\" width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) + "\">\n";
    out += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" fill=\"#ffffff\"/>\n";

    // Obstacles as one black path; horizontal runs merge into single rects.
    out += "<path fill=\"#000000\" d=\"";
    for (int y = 0; y < h; ++y) {
        int x = 0;
        while (x < w) {
            if (!grid.is_occupied({x, y})) {
                ++x;
                continue;
            }
            int run = x;
            while (run < w && grid.is_occupied({run, y})) ++run;
            out += "M" + std::to_string(x) + " " + std::to_string(y) + "h" +
                   std::to_string(run - x) + "v1h-" + std::to_string(run - x) + "z";
            x = run;
        }
    }
    out += "\"/>\n";

    for (const PathOverlay& overlay : overlays) {
        if (overlay.waypoints.size() >= 2) {
            out += "<polyline fill=\"none\" stroke=\"";
            out += stroke_for(overlay.planner);
            out += "\" stroke-width=\"0.8\" stroke-linejoin=\"round\" points=\"";
            for (std::size_t i = 0; i < overlay.waypoints.size(); ++i) {
                const Point& p = overlay.waypoints[i];
                if (i) out += " ";
                out += format_double(p.x / s) + "," + format_double(p.y / s);
            }
            out += "\"/>\n";
        }
        const auto marker = [&](const Cell& c, const char* fill) {
            out += "<circle cx=\"" + format_double(c.col + 0.5) + "\" cy=\"" +
                   format_double(c.row + 0.5) + "\" r=\"" + format_double(marker_r) +
                   "\" fill=\"" + fill + "\"/>\n";
        };
        marker(overlay.source, "#22aa22");
        marker(overlay.goal, "#ee8800");
    }
    out += "</svg>\n";
    return out;
}

} // namespace gridplan
