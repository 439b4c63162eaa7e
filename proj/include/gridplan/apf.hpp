#pragma once

#include <vector>

#include "gridplan/distance_field.hpp"
#include "gridplan/geometry.hpp"
#include "gridplan/gridmap.hpp"

namespace gridplan {

// Potential-field stepper used to smooth the straight hops between key nodes.
// Forces follow the goal-weighted repulsion model: attraction pulls straight
// toward the local goal, and within rho0 of an obstacle two repulsive terms
// act, one pushing away from the nearest obstacle and one toward the goal,
// both scaled by powers of the goal distance so they die out on arrival.
//
// The default repulsion gain is deliberately small: the goal-distance
// weighting grows repulsion quadratically with distance to the local goal, so
// larger gains make long hops ricochet off obstacle rims in sharp zigzags
// instead of bending smoothly past them.  0.03 keeps paths bowing away from
// walls without those kinks on hops a few hundred cells long.
struct ApfConfig {
    double gain_att = 1.0;       // G: attraction per unit of goal distance
    double gain_rep = 0.03;      // a: repulsion scale
    double rho0 = 10.0;          // obstacle influence radius (world units)
    int n = 2;                   // goal-distance exponent in the repulsion
    double step_size = 0.5;      // distance advanced per iteration
    double goal_tolerance = 1.0; // arrival radius around the local goal
    // Iteration cap per segment; 0 derives 10 * chord / step_size (>= 1).
    int max_steps = 0;
    double force_floor = 1e-9;   // below this magnitude the walker is stuck
    double min_obstacle_distance = 1e-3; // d0 is clamped up to this

    // Defaults above assume cell_size 1; this rescales the lengths.
    static ApfConfig for_cell_size(double cell_size);
};

// F_att = G * (goal - current).  Zero exactly at the goal.
Point attractive_force(const Point& current, const Point& local_goal, const ApfConfig& cfg);

// Zero outside the influence radius (d0 > rho0) and on obstacle-free grids.
// Inside it, with d0 the clamped distance to the nearest obstacle center and
// dg the distance to the local goal:
//   F_r1 = a * (1/d0 - 1/rho0) * dg^n / d0^2          away from the obstacle
//   F_r2 = (n*a/2) * (1/d0 - 1/rho0)^2 * dg^(n-1)     toward the goal
Point repulsive_force(const Point& current, const DistanceField& field, const Point& local_goal,
                      const ApfConfig& cfg);

Point total_force(const Point& current, const DistanceField& field, const Point& local_goal,
                  const ApfConfig& cfg);

enum class SegmentOutcome {
    reached, // ended within goal_tolerance of the local goal
    capped,  // iteration cap hit first
    stalled, // force fell under force_floor, or the next step was unsafe
};

struct ApfSegment {
    std::vector<Point> waypoints; // intermediate steps; excludes both endpoints
    SegmentOutcome outcome = SegmentOutcome::stalled;
};

// Marches from local_source toward local_goal in fixed-length steps along the
// normalized total force.  Every emitted waypoint lies on a free cell and
// every hop (including the final hop to the goal on arrival) passes the
// supercover collision check; a step that would violate that stalls the
// segment instead, and the caller falls back to the straight chord.
ApfSegment apf_segment(const OccupancyGrid& grid, const DistanceField& field,
                       const Point& local_source, const Point& local_goal, const ApfConfig& cfg);

} // namespace gridplan
