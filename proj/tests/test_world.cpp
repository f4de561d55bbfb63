#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "rebelscape/capacity_map.hpp"
#include "rebelscape/geometry.hpp"

using namespace rebelscape;

TEST_SUITE("world") {

TEST_CASE("coordinate wrapping") {
    CHECK(wrap_coord(0, 50) == 0);
    CHECK(wrap_coord(49, 50) == 49);
    CHECK(wrap_coord(50, 50) == 0);
    CHECK(wrap_coord(-1, 50) == 49);
    CHECK(wrap_coord(-50, 50) == 0);
    CHECK(wrap_coord(103, 50) == 3);
}

TEST_CASE("torus distances") {
    GridDims g{50, 50};
    CHECK(axis_gap(0, 49, 50) == 1);
    CHECK(axis_gap(10, 20, 50) == 10);
    CHECK(axis_gap(5, 45, 50) == 10);
    CHECK(chebyshev({0, 0}, {49, 49}, g) == 1);
    CHECK(chebyshev({0, 0}, {25, 25}, g) == 25);
    CHECK(chebyshev({3, 3}, {3, 3}, g) == 0);
    CHECK(chebyshev({2, 2}, {7, 4}, g) == 5);
    CHECK(euclidean_sq({0, 0}, {49, 48}, g) == doctest::Approx(1 + 4));
}

TEST_CASE("visible sites: count, order, exclusion of origin") {
    GridDims g{50, 50};
    auto sites = visible_sites(g, {10, 10}, 2);
    // A (2v+1)^2 window minus the origin when nothing wraps onto itself.
    CHECK(sites.size() == 24);
    // Row-major offset order: first cell is (-2,-2), last is (+2,+2).
    CHECK(sites.front() == Position{8, 8});
    CHECK(sites.back() == Position{12, 12});
    // (0,0) offset must be skipped; cell before it is (-1,0), after is (+1,0).
    CHECK(sites[11] == Position{9, 10});
    CHECK(sites[12] == Position{11, 10});
    CHECK(std::none_of(sites.begin(), sites.end(),
                       [](Position p) { return p == Position{10, 10}; }));
}

TEST_CASE("visible sites wrap and deduplicate on small grids") {
    GridDims g{5, 5};
    // Vision 3 window is 7x7 = 49 offsets on a 25-cell torus: every cell but
    // the origin must appear exactly once.
    auto sites = visible_sites(g, {2, 2}, 3);
    CHECK(sites.size() == 24);
    std::set<std::pair<int, int>> uniq;
    for (Position p : sites) uniq.insert({p.x, p.y});
    CHECK(uniq.size() == 24);
    CHECK(uniq.count({2, 2}) == 0);

    // for_each_visible must agree with visible_sites exactly, in order.
    std::vector<Position> visited;
    for_each_visible(g, {2, 2}, 3, [&](Position p) { visited.push_back(p); });
    CHECK(visited == sites);
}

TEST_CASE("for_each_visible matches visible_sites on the fast path") {
    GridDims g{50, 50};
    auto sites = visible_sites(g, {0, 49}, 7);
    std::vector<Position> visited;
    for_each_visible(g, {0, 49}, 7, [&](Position p) { visited.push_back(p); });
    CHECK(visited == sites);
    CHECK(sites.size() == 224); // 15*15 - 1
}

TEST_CASE("hill map: peaks hit the cap and far corners are barren") {
    GridDims g{50, 50};
    auto map = make_hill_map(g, {{12, 12}, {37, 37}}, 12.0);
    CHECK(map.level_at({12, 12}) == 4);
    CHECK(map.level_at({37, 37}) == 4);
    for (int y = 0; y < 50; ++y)
        for (int x = 0; x < 50; ++x) {
            int lv = map.level_at({x, y});
            CHECK(lv >= 0);
            CHECK(lv <= CapacityMap::kMaxLevel);
        }
}

TEST_CASE("hill map matches the radial formula") {
    GridDims g{50, 50};
    double sigma = 12.0;
    std::vector<Position> peaks{{12, 12}, {37, 37}};
    auto map = make_hill_map(g, peaks, sigma);
    // Independent recomputation, cell by cell.
    for (int y = 0; y < 50; ++y)
        for (int x = 0; x < 50; ++x) {
            double best = 0.0;
            for (Position pk : peaks) {
                double d2 = euclidean_sq({x, y}, pk, g);
                best = std::max(best, std::exp(-d2 / (2.0 * sigma * sigma)));
            }
            int expected = static_cast<int>(std::lround(4.0 * best));
            CHECK(map.level_at({x, y}) == expected);
        }
}

TEST_CASE("hill map: known radial levels for a single peak") {
    GridDims g{50, 50};
    auto map = make_hill_map(g, {{25, 25}}, 12.0);
    CHECK(map.level_at({25, 25}) == 4);
    CHECK(map.level_at({35, 25}) == 3);  // d=10: 4*exp(-100/288) = 2.83
    CHECK(map.level_at({45, 25}) == 1);  // d=20: 4*exp(-400/288) = 1.00
    CHECK(map.level_at({25, 49}) == 1);  // wrapped dy=24: 4*exp(-2) = 0.54
    CHECK(map.level_at({0, 0}) == 0);    // d^2=1250: 4*exp(-4.34) = 0.05

    auto tight = make_hill_map(g, {{25, 25}}, 5.0);
    CHECK(tight.level_at({0, 0}) == 0); // beyond 4 sigma
}

TEST_CASE("hill map is invariant under the symmetry of its peaks") {
    // Shifting by (+25,+25) maps peak (12,12) onto (37,37) and vice versa,
    // so the whole landscape must be invariant under that shift.
    GridDims g{50, 50};
    auto map = make_hill_map(g, {{12, 12}, {37, 37}}, 12.0);
    for (int y = 0; y < 50; ++y)
        for (int x = 0; x < 50; ++x)
            CHECK(map.level_at({x, y}) ==
                  map.level_at({(x + 25) % 50, (y + 25) % 50}));
}

TEST_CASE("hill map rejects bad arguments") {
    GridDims g{50, 50};
    CHECK_THROWS(make_hill_map({4, 50}, {{1, 1}}, 9.0));
    CHECK_THROWS(make_hill_map(g, {}, 9.0));
    CHECK_THROWS(make_hill_map(g, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}, 9.0));
    CHECK_THROWS(make_hill_map(g, {{0, 0}}, 0.0));
    CHECK_THROWS(make_hill_map(g, {{50, 10}}, 9.0)); // peak out of bounds
}

TEST_CASE("map text round-trip") {
    GridDims g{9, 8};
    auto map = make_hill_map(g, {{4, 4}}, 2.5);
    auto text = render_map_text(map);
    auto back = parse_map_text(text);
    CHECK(back == map);
    CHECK(back.dims() == g);
}

TEST_CASE("map text errors name the line") {
    CHECK_THROWS_WITH_AS(parse_map_text(""), doctest::Contains("empty"),
                         std::runtime_error);
    // Bad digit on line 2.
    CHECK_THROWS_WITH_AS(parse_map_text("0123\n0x23\n"), doctest::Contains("line 2"),
                         std::runtime_error);
    // Level above 4 on line 1.
    CHECK_THROWS_WITH_AS(parse_map_text("05\n00\n"), doctest::Contains("line 1"),
                         std::runtime_error);
    // Ragged row on line 3.
    CHECK_THROWS_WITH_AS(parse_map_text("012\n012\n01\n"), doctest::Contains("line 3"),
                         std::runtime_error);
}

TEST_CASE("region classes split levels into poor, mid, rich") {
    CHECK(region_class(0) == RegionClass::Poor);
    CHECK(region_class(1) == RegionClass::Poor);
    CHECK(region_class(2) == RegionClass::Mid);
    CHECK(region_class(3) == RegionClass::Rich);
    CHECK(region_class(4) == RegionClass::Rich);
}

} // TEST_SUITE
