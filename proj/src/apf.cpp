#include "gridplan/apf.hpp"

#include <algorithm>
#include <cmath>

namespace gridplan {
namespace {

// Exact small-integer powers (std::pow may round even for integer exponents).
double ipow(double base, int exp) {
    double out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Direction pushing away from the nearest obstacle.  Degenerate only when the
// query point sits exactly on the obstacle center; fall back to the local
// distance-field gradient, then to the goal direction.
Point away_from_obstacle(const Point& current, const DistanceField& field,
                         const Point& goal_dir) {
    const auto nearest = field.nearest_obstacle(current);
    if (!nearest) return {0.0, 0.0};
    const double s = field.cell_size();
    const Point center{(nearest->col + 0.5) * s, (nearest->row + 0.5) * s};
    const Point v = current - center;
    if (v.norm() > 0.0) return v.normalized();

    const Cell c{static_cast<int>(std::floor(current.x / s)),
                 static_cast<int>(std::floor(current.y / s))};
    const Point grad{field.distance_at(Cell{c.col + 1, c.row}) -
                         field.distance_at(Cell{c.col - 1, c.row}),
                     field.distance_at(Cell{c.col, c.row + 1}) -
                         field.distance_at(Cell{c.col, c.row - 1})};
    if (grad.norm() > 0.0) return grad.normalized();
    return goal_dir;
}

} // namespace

ApfConfig ApfConfig::for_cell_size(double cell_size) {
    ApfConfig cfg;
    cfg.gain_rep = 0.03 * cell_size * cell_size;
    cfg.rho0 = 10.0 * cell_size;
    cfg.step_size = 0.5 * cell_size;
    cfg.goal_tolerance = 1.0 * cell_size;
    cfg.min_obstacle_distance = 1e-3 * cell_size;
    return cfg;
}

Point attractive_force(const Point& current, const Point& local_goal, const ApfConfig& cfg) {
    return (local_goal - current) * cfg.gain_att;
}

Point repulsive_force(const Point& current, const DistanceField& field, const Point& local_goal,
                      const ApfConfig& cfg) {
    const double d0 = std::max(field.distance_at(current), cfg.min_obstacle_distance);
    if (!(d0 <= cfg.rho0)) return {0.0, 0.0}; // outside influence (or no obstacles at all)

    const Point to_goal = local_goal - current;
    const double dg = to_goal.norm();
    const Point n_goal = to_goal.normalized();
    const Point n_away = away_from_obstacle(current, field, n_goal);

    const double inv = 1.0 / d0 - 1.0 / cfg.rho0;
    const double fr1 = cfg.gain_rep * inv * ipow(dg, cfg.n) / (d0 * d0);
    const double fr2 = 0.5 * cfg.n * cfg.gain_rep * inv * inv * ipow(dg, cfg.n - 1);
    return n_away * fr1 + n_goal * fr2;
}

Point total_force(const Point& current, const DistanceField& field, const Point& local_goal,
                  const ApfConfig& cfg) {
    return attractive_force(current, local_goal, cfg) +
           repulsive_force(current, field, local_goal, cfg);
}

ApfSegment apf_segment(const OccupancyGrid& grid, const DistanceField& field,
                       const Point& local_source, const Point& local_goal,
                       const ApfConfig& cfg) {
    ApfSegment seg;
    const double chord = distance(local_source, local_goal);
    const int cap = cfg.max_steps > 0
                        ? cfg.max_steps
                        : std::max(1, static_cast<int>(std::ceil(10.0 * chord / cfg.step_size)));

    Point p = local_source;
    for (int i = 0; i <= cap; ++i) {
        if (distance(p, local_goal) <= cfg.goal_tolerance) {
            // Arrived; the caller appends the goal itself, so that hop must be
            // collision-free too.
            seg.outcome = line_of_sight(grid, p, local_goal) ? SegmentOutcome::reached
                                                             : SegmentOutcome::stalled;
            return seg;
        }
        if (i == cap) break;

        const Point f = total_force(p, field, local_goal, cfg);
        const double mag = f.norm();
        if (mag < cfg.force_floor) {
            seg.outcome = SegmentOutcome::stalled; // local minimum
            return seg;
        }
        const Point cand = p + f * (cfg.step_size / mag);
        if (grid.is_occupied(grid.cell_of(cand)) || !line_of_sight(grid, p, cand)) {
            seg.outcome = SegmentOutcome::stalled; // step would clip an obstacle
            return seg;
        }
        p = cand;
        seg.waypoints.push_back(p);
    }
    seg.outcome = SegmentOutcome::capped;
    return seg;
}

} // namespace gridplan
