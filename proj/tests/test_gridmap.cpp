#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gridplan/gridmap.hpp"
#include "oracles.hpp"

using gridplan::Cell;
using gridplan::line_of_sight;
using gridplan::load_bitmap;
using gridplan::OccupancyGrid;
using gridplan::Point;
using gridplan::supercover_cells;

namespace {

std::vector<Cell> sorted_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

} // namespace

TEST_CASE("text picture round-trips through dump") {
    const char* picture = "...\n.#.\n..#\n";
    const OccupancyGrid g = OccupancyGrid::from_text(picture);
    REQUIRE(g.width() == 3);
    REQUIRE(g.height() == 3);
    CHECK(g.dump() == picture);
    CHECK(g.obstacle_count() == 2);
    CHECK(g.is_occupied({1, 1}));
    CHECK(g.is_occupied({2, 2}));
    CHECK_FALSE(g.is_occupied({0, 0}));
}

TEST_CASE("malformed text pictures are rejected") {
    CHECK_THROWS_AS(OccupancyGrid::from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(OccupancyGrid::from_text("..\n...\n"), std::invalid_argument);
    CHECK_THROWS_AS(OccupancyGrid(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(OccupancyGrid(3, 3, 0.0), std::invalid_argument);
}

TEST_CASE("cells outside the grid read as occupied") {
    const OccupancyGrid g(4, 3);
    CHECK(g.is_occupied({-1, 0}));
    CHECK(g.is_occupied({0, -1}));
    CHECK(g.is_occupied({4, 0}));
    CHECK(g.is_occupied({0, 3}));
    CHECK_FALSE(g.is_occupied({3, 2}));
}

TEST_CASE("point-to-cell mapping floors and centers sit mid-cell") {
    const OccupancyGrid g(10, 10, 0.5);
    CHECK(g.cell_of({0.0, 0.0}) == Cell{0, 0});
    CHECK(g.cell_of({0.49, 0.49}) == Cell{0, 0});
    CHECK(g.cell_of({0.5, 0.49}) == Cell{1, 0});
    CHECK(g.cell_of({2.3, 1.7}) == Cell{4, 3});
    CHECK(g.center_of({0, 0}) == Point{0.25, 0.25});
    CHECK(g.center_of({4, 3}) == Point{2.25, 1.75});
}

TEST_CASE("bitmap loading thresholds on gray value") {
    // Pixels 0, 127, 128, 255 across one row.
    std::string bytes = "P5\n4 1\n255\n";
    bytes.push_back(static_cast<char>(0));
    bytes.push_back(static_cast<char>(127));
    bytes.push_back(static_cast<char>(128));
    bytes.push_back(static_cast<char>(255));

    const OccupancyGrid def = load_bitmap(bytes); // threshold 128: gray < 128 is obstacle
    CHECK(def.dump() == "##..\n");

    const OccupancyGrid strict = load_bitmap(bytes, 60);
    CHECK(strict.dump() == "#...\n");

    const OccupancyGrid all = load_bitmap(bytes, 256);
    CHECK(all.dump() == "####\n");
}

TEST_CASE("grids round-trip through both bitmap encoders") {
    const OccupancyGrid g = oracle::random_grid(19, 7, 0.3, 42);
    CHECK(load_bitmap(g.to_pgm()) == g);
    CHECK(load_bitmap(g.to_pbm()) == g);

    const OccupancyGrid fine = oracle::random_grid(5, 5, 0.5, 43);
    // cell_size is not stored in the bitmap; pass it through explicitly.
    OccupancyGrid reloaded = load_bitmap(fine.to_pbm(), 128, fine.cell_size());
    CHECK(reloaded == fine);
}

TEST_CASE("supercover: axis-aligned segment through cell centers") {
    const OccupancyGrid g(5, 1);
    const auto cells = sorted_cells(supercover_cells(g, {0.5, 0.5}, {4.5, 0.5}));
    REQUIRE(cells.size() == 5);
    for (int c = 0; c < 5; ++c) CHECK(cells[c] == Cell{c, 0});
}

TEST_CASE("supercover: segment riding a grid line touches both rows") {
    const OccupancyGrid g(4, 3);
    const auto cells = supercover_cells(g, {0.5, 1.0}, {3.5, 1.0});
    CHECK(sorted_cells(cells).size() == 8); // rows 0 and 1 across four columns
    for (const Cell& c : cells) CHECK((c.row == 0 || c.row == 1));
}

TEST_CASE("supercover: exact diagonal includes corner-touching cells") {
    const OccupancyGrid g(3, 3);
    const auto cells = sorted_cells(supercover_cells(g, {0.5, 0.5}, {2.5, 2.5}));
    const std::vector<Cell> expected = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(cells == sorted_cells(expected));
}

TEST_CASE("line of sight refuses to squeeze through a blocked corner") {
    const OccupancyGrid g = OccupancyGrid::from_text(".#\n#.\n");
    CHECK_FALSE(line_of_sight(g, {0.5, 0.5}, {1.5, 1.5}));
    CHECK_FALSE(line_of_sight(g, {1.5, 1.5}, {0.5, 0.5}));
}

TEST_CASE("line of sight basics") {
    const OccupancyGrid g = OccupancyGrid::from_text(".....\n..#..\n.....\n");
    CHECK(line_of_sight(g, {0.5, 0.5}, {4.5, 0.5}));
    CHECK_FALSE(line_of_sight(g, {0.5, 1.5}, {4.5, 1.5})); // passes the obstacle
    CHECK(line_of_sight(g, {0.5, 2.5}, {4.5, 2.5}));
    // Degenerate segments: a point sees itself iff its cell is free.
    CHECK(line_of_sight(g, {0.5, 0.5}, {0.5, 0.5}));
    CHECK_FALSE(line_of_sight(g, {2.5, 1.5}, {2.5, 1.5}));
    // The boundary counts as a wall.
    CHECK_FALSE(line_of_sight(g, {0.5, 0.5}, {-1.5, 0.5}));
}

TEST_CASE("supercover matches the exhaustive rectangle-overlap scan") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coord(0.05, 31.95);
    for (std::uint32_t seed = 1; seed <= 6; ++seed) {
        const OccupancyGrid g = oracle::random_grid(32, 32, 0.2, seed);
        for (int trial = 0; trial < 60; ++trial) {
            const Point p{coord(rng), coord(rng)};
            const Point q{coord(rng), coord(rng)};
            const auto fast = sorted_cells(supercover_cells(g, p, q));
            const auto slow = sorted_cells(oracle::touched_cells_scan(g, p, q));
            REQUIRE(fast == slow);

            // Visibility must agree with "no touched cell is occupied" and be
            // symmetric in its endpoints.
            bool blocked = false;
            for (const Cell& c : fast) blocked |= g.is_occupied(c);
            CHECK(line_of_sight(g, p, q) == !blocked);
            CHECK(line_of_sight(g, p, q) == line_of_sight(g, q, p));

            // Dense sampling can only find obstacles the cover also found.
            if (oracle::sampled_blocked(g, p, q)) CHECK_FALSE(line_of_sight(g, p, q));
        }
    }
}

TEST_CASE("supercover handles non-unit cell sizes") {
    const OccupancyGrid g(8, 8, 2.5);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(0.1, 19.9);
    for (int trial = 0; trial < 40; ++trial) {
        const Point p{coord(rng), coord(rng)};
        const Point q{coord(rng), coord(rng)};
        CHECK(sorted_cells(supercover_cells(g, p, q)) ==
              sorted_cells(oracle::touched_cells_scan(g, p, q)));
    }
}

TEST_CASE("small endpoint nudges only flip visibility near obstacles") {
    // If a nudge of at most cell/4 changes the answer, the original segment
    // must pass within cell/2 of an occupied (or out-of-bounds) cell square.
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> coord(1.0, 23.0);
    std::uniform_real_distribution<double> nudge(-0.25, 0.25);
    for (std::uint32_t seed = 20; seed < 24; ++seed) {
        const OccupancyGrid g = oracle::random_grid(24, 24, 0.15, seed);
        for (int trial = 0; trial < 80; ++trial) {
            const Point p{coord(rng), coord(rng)};
            const Point q{coord(rng), coord(rng)};
            const Point p2 = p + Point{nudge(rng), nudge(rng)};
            if (line_of_sight(g, p, q) == line_of_sight(g, p2, q)) continue;

            double clearance = std::numeric_limits<double>::infinity();
            for (int y = -1; y <= g.height(); ++y)
                for (int x = -1; x <= g.width(); ++x)
                    if (g.is_occupied({x, y}))
                        clearance = std::min(
                            clearance, oracle::segment_cell_distance(p, q, {x, y}, 1.0));
            CHECK(clearance < 0.5);
        }
    }
}

TEST_CASE("inflation grows obstacles by a euclidean disk") {
    OccupancyGrid g(5, 5);
    g.set_occupied({2, 2}, true);

    CHECK(inflate(g, 0) == g);
    CHECK(inflate(g, 1).dump() == ".....\n"
                                  "..#..\n"
                                  ".###.\n"
                                  "..#..\n"
                                  ".....\n");
    CHECK(inflate(g, 2).dump() == "..#..\n"
                                  ".###.\n"
                                  "#####\n"
                                  ".###.\n"
                                  "..#..\n");
}
