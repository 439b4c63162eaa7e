#include <doctest.h>

#include <cmath>

#include "gridplan/astar.hpp"
#include "gridplan/prune.hpp"
#include "oracles.hpp"

using gridplan::astar_search;
using gridplan::Cell;
using gridplan::extract_key_nodes;
using gridplan::line_of_sight;
using gridplan::OccupancyGrid;
using gridplan::Point;
using gridplan::SearchStatus;

namespace {

double polyline_length(const std::vector<Point>& pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += gridplan::distance(pts[i - 1], pts[i]);
    return len;
}

} // namespace

TEST_CASE("collinear chains collapse to their endpoints") {
    const OccupancyGrid g(5, 5);
    const std::vector<Point> path = {{0.5, 0.5}, {1.5, 1.5}, {2.5, 2.5}, {3.5, 3.5}, {4.5, 4.5}};
    const std::vector<Point> keys = extract_key_nodes(g, path);
    REQUIRE(keys.size() == 2);
    CHECK(keys.front() == path.front());
    CHECK(keys.back() == path.back());
}

TEST_CASE("short inputs pass through unchanged") {
    const OccupancyGrid g(3, 3);
    CHECK(extract_key_nodes(g, {}).empty());
    CHECK(extract_key_nodes(g, {{0.5, 0.5}}) == std::vector<Point>{{0.5, 0.5}});
    const std::vector<Point> two = {{0.5, 0.5}, {2.5, 2.5}};
    CHECK(extract_key_nodes(g, two) == two);
}

TEST_CASE("a corner forced by an obstacle survives pruning") {
    const OccupancyGrid g = OccupancyGrid::from_text("...\n"
                                                     ".#.\n"
                                                     "...\n");
    // Down the left edge, then along the top: the bend at (0.5, 0.5) is the
    // only waypoint keeping the chain clear of the center obstacle.
    const std::vector<Point> path = {
        {0.5, 2.5}, {0.5, 1.5}, {0.5, 0.5}, {1.5, 0.5}, {2.5, 0.5}};
    const std::vector<Point> keys = extract_key_nodes(g, path);
    REQUIRE(keys.size() == 3);
    CHECK(keys[0] == Point{0.5, 2.5});
    CHECK(keys[1] == Point{0.5, 0.5});
    CHECK(keys[2] == Point{2.5, 0.5});
}

TEST_CASE("pruning random search paths keeps them safe, short, and stable") {
    int exercised = 0;
    for (std::uint32_t seed = 50; seed < 70; ++seed) {
        const OccupancyGrid g = oracle::random_grid(40, 40, 0.22, seed);
        const Cell source{1, 2}, goal{38, 37};
        if (g.is_occupied(source) || g.is_occupied(goal)) continue;
        const auto r = astar_search(g, source, goal);
        if (r.status != SearchStatus::found) continue;
        ++exercised;

        const std::vector<Point> keys = extract_key_nodes(g, r.path);

        // Endpoints survive; node count never grows.
        REQUIRE(keys.size() >= 2);
        CHECK(keys.size() <= r.path.size());
        CHECK(keys.front() == r.path.front());
        CHECK(keys.back() == r.path.back());

        // Consecutive key nodes are mutually visible, and a dense sampling of
        // each chord agrees nothing was clipped.
        for (std::size_t i = 1; i < keys.size(); ++i) {
            REQUIRE(line_of_sight(g, keys[i - 1], keys[i]));
            REQUIRE_FALSE(oracle::sampled_blocked(g, keys[i - 1], keys[i]));
        }

        // Triangle inequality: the pruned chain is never longer.
        CHECK(polyline_length(keys) <= polyline_length(r.path) * (1.0 + 1e-12));

        // Every key node is one of the original waypoints, in original order.
        std::size_t cursor = 0;
        for (const Point& k : keys) {
            while (cursor < r.path.size() && !(r.path[cursor] == k)) ++cursor;
            REQUIRE(cursor < r.path.size());
        }

        // Idempotence: pruning a pruned chain is the identity.
        CHECK(extract_key_nodes(g, keys) == keys);
    }
    CHECK(exercised >= 8);
}

TEST_CASE("margin widens the berth around obstacles") {
    // One obstacle below a straight corridor.  Without margin the straight
    // chord survives; with margin 1 the grown obstacle blocks it, so the
    // dodge waypoints must be kept.
    OccupancyGrid g(9, 3);
    g.set_occupied({4, 2}, true);
    const std::vector<Point> path = {
        {0.5, 1.5}, {1.5, 1.5}, {2.5, 1.5}, {3.5, 0.5}, {4.5, 0.5},
        {5.5, 0.5}, {6.5, 1.5}, {7.5, 1.5}, {8.5, 1.5}};

    const std::vector<Point> direct = extract_key_nodes(g, path);
    CHECK(direct.size() == 2); // row 1 is clear: endpoints see each other

    const std::vector<Point> careful = extract_key_nodes(g, path, 1);
    CHECK(careful.size() > 2);
    // The pairs must be visible on the grown grid, not just the original.
    const OccupancyGrid grown = inflate(g, 1);
    for (std::size_t i = 1; i < careful.size(); ++i)
        CHECK(line_of_sight(grown, careful[i - 1], careful[i]));
}
