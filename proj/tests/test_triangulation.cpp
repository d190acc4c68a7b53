#include <doctest.h>

#include <random>
#include <vector>

#include "lattice/pick.hpp"
#include "lattice/triangulation.hpp"
#include "support/random_polygons.hpp"

using namespace lattice;

namespace {

LatticePolygon square(Coord side) { return validate_polygon({{0, 0}, {side, 0}, {side, side}, {0, side}}); }

Coord area_sum(const std::vector<LatticeTriangle>& ts) {
    Coord sum = 0;
    for (const auto& t : ts) sum += t.twice_area();
    return sum;
}

// Independent shoelace over a raw vertex list.
Coord shoelace(const std::vector<LatticePoint>& v) {
    Coord sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        sum += p.x * q.y - q.x * p.y;
    }
    return sum;
}

bool strictly_inside(LatticePoint p, const LatticeTriangle& t, Coord scale) {
    const auto s = [&](LatticePoint v) { return LatticePoint{v.x * scale, v.y * scale}; };
    return twice_signed_area(s(t.v0()), s(t.v1()), p) > 0 && twice_signed_area(s(t.v1()), s(t.v2()), p) > 0 &&
           twice_signed_area(s(t.v2()), s(t.v0()), p) > 0;
}

}  // namespace

TEST_CASE("LatticeTriangle stores counterclockwise order") {
    const LatticeTriangle t({0, 0}, {0, 1}, {1, 0});
    CHECK(t.v0() == LatticePoint{0, 0});
    CHECK(t.v1() == LatticePoint{1, 0});
    CHECK(t.v2() == LatticePoint{0, 1});
    CHECK(t.twice_area() == 1);
    CHECK(t.is_primitive());
    CHECK_THROWS_AS(LatticeTriangle({0, 0}, {1, 1}, {2, 2}), DegenerateError);
}

TEST_CASE("initial_triangulation") {
    SUBCASE("unit square") {
        const auto ts = initial_triangulation(square(1));
        REQUIRE(ts.size() == 2);
        CHECK(ts[0].twice_area() == 1);
        CHECK(ts[1].twice_area() == 1);
    }
    SUBCASE("convex pentagon") {
        const std::vector<LatticePoint> v{{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 2}};
        REQUIRE(shoelace(v) == 16);
        const auto ts = initial_triangulation(validate_polygon(v));
        CHECK(ts.size() == 3);
        CHECK(area_sum(ts) == 16);
    }
    SUBCASE("triangle is returned as is") {
        const auto ts = initial_triangulation(validate_polygon({{0, 0}, {3, 0}, {1, 2}}));
        REQUIRE(ts.size() == 1);
        CHECK(ts[0] == LatticeTriangle({0, 0}, {3, 0}, {1, 2}));
    }
    SUBCASE("vertex on a would-be diagonal is not skipped") {
        // (2, 1) lies on the segment (0, 0)-(4, 2) joining the neighbours of (4, 0).
        const auto poly = validate_polygon({{0, 0}, {4, 0}, {4, 2}, {2, 1}, {0, 2}});
        const auto ts = initial_triangulation(poly);
        CHECK(ts.size() == 3);
        CHECK(area_sum(ts) == twice_polygon_area(poly));
    }
    SUBCASE("random polygons") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 500; ++i) {
            const auto poly = testing::random_simple_polygon(rng);
            const auto ts = initial_triangulation(poly);
            REQUIRE(ts.size() == poly.size() - 2);
            REQUIRE(area_sum(ts) == twice_polygon_area(poly));
            for (const auto& t : ts) {
                for (const auto& v : t.vertices()) {
                    REQUIRE(std::find(poly.vertices().begin(), poly.vertices().end(), v) != poly.vertices().end());
                }
            }
        }
    }
}

TEST_CASE("gcd_edge_split") {
    SUBCASE("long edge splits next to its first endpoint") {
        const LatticeTriangle t({0, 0}, {4, 0}, {0, 1});
        const auto e = gcd_edge_split(t);
        REQUIRE(e.has_value());
        CHECK(e->rule == SplitRule::edge_gcd_split);
        CHECK(e->point == LatticePoint{1, 0});
        REQUIRE(e->children.size() == 2);
        CHECK(e->children[0] == LatticeTriangle({0, 0}, {1, 0}, {0, 1}));
        CHECK(e->children[1] == LatticeTriangle({1, 0}, {4, 0}, {0, 1}));
        CHECK(e->children[0].twice_area() == 1);
        CHECK(e->children[1].twice_area() == 3);
    }
    SUBCASE("primitive edges") { CHECK_FALSE(gcd_edge_split(LatticeTriangle({0, 0}, {1, 0}, {0, 1})).has_value()); }
    SUBCASE("midpoint of a diagonal edge") {
        const LatticeTriangle t({0, 0}, {2, 2}, {3, 1});
        const auto e = gcd_edge_split(t);
        REQUIRE(e.has_value());
        CHECK(e->point == LatticePoint{1, 1});
        CHECK(e->children[0].twice_area() + e->children[1].twice_area() == 4);
        CHECK(e->children[0].twice_area() == 2);
    }
}

TEST_CASE("interior_split") {
    SUBCASE("three primitive children") {
        const LatticeTriangle t({0, 0}, {1, 2}, {-1, 1});
        REQUIRE(t.twice_area() == 3);
        const auto e = interior_split(t);
        CHECK(e.rule == SplitRule::interior_point_split);
        CHECK(e.point == LatticePoint{0, 1});
        REQUIRE(e.children.size() == 3);
        for (const auto& c : e.children) CHECK(c.twice_area() == 1);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(interior_split(LatticeTriangle({0, 0}, {2, 0}, {1, 1})), ContractError);
        CHECK_THROWS_AS(interior_split(LatticeTriangle({0, 0}, {1, 0}, {0, 1})), ContractError);
    }
    SUBCASE("split point on an edge drops the flat child") {
        const LatticeTriangle t({0, 0}, {2, 0}, {0, 2});
        const auto e = split_at_point(t, {1, 0});
        CHECK(e.rule == SplitRule::degenerate_three_way);
        REQUIRE(e.children.size() == 2);
        CHECK(e.children[0].twice_area() + e.children[1].twice_area() == 4);
        CHECK_THROWS_AS(split_at_point(t, {0, 0}), ContractError);
        CHECK_THROWS_AS(split_at_point(t, {3, 3}), ContractError);
    }
}

TEST_CASE("primitive_triangulation examples") {
    const auto unit = primitive_triangulation(square(1));
    CHECK(unit.triangles.size() == 2);
    CHECK(unit.events.empty());

    CHECK(primitive_triangulation(square(2)).triangles.size() == 8);
    CHECK(primitive_triangulation(validate_polygon({{0, 0}, {4, 0}, {0, 4}})).triangles.size() == 16);
}

TEST_CASE("primitive_triangulation properties on random polygons") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 500; ++i) {
        const auto poly = testing::random_simple_polygon(rng);
        const auto tri = primitive_triangulation(poly);
        REQUIRE(static_cast<Coord>(tri.triangles.size()) == twice_polygon_area(poly));
        for (const auto& t : tri.triangles) {
            REQUIRE(t.twice_area() == 1);
            REQUIRE(closed_triangle_point_count(t.v0(), t.v1(), t.v2()) == 3);
            for (const auto& v : t.vertices()) REQUIRE(point_in_polygon(v, poly) != Location::exterior);
        }
        for (const auto& e : tri.events) {
            REQUIRE(area_sum(e.children) == e.parent.twice_area());
            for (const auto& c : e.children) {
                for (const auto& v : c.vertices()) {
                    REQUIRE((v == e.point || v == e.parent.v0() || v == e.parent.v1() || v == e.parent.v2()));
                }
            }
        }
        REQUIRE(replay(poly, tri.events) == tri.triangles);

        const auto again = primitive_triangulation(poly);
        REQUIRE(again.triangles == tri.triangles);
    }
}

TEST_CASE("primitive triangles tile the polygon") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        const auto poly = testing::random_simple_polygon(rng);
        const auto tri = primitive_triangulation(poly);
        const auto& ts = tri.triangles;
        std::size_t overlaps = 0;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            const LatticePoint c3{ts[j].v0().x + ts[j].v1().x + ts[j].v2().x,
                                  ts[j].v0().y + ts[j].v1().y + ts[j].v2().y};
            for (std::size_t k = 0; k < ts.size(); ++k) {
                if (k != j && strictly_inside(c3, ts[k], 3)) ++overlaps;
            }
        }
        REQUIRE(overlaps == 0);
    }
}

TEST_CASE("replay rejects a tampered log") {
    const auto poly = validate_polygon({{0, 0}, {4, 0}, {0, 4}});
    auto tri = primitive_triangulation(poly);
    REQUIRE_FALSE(tri.events.empty());
    auto short_log = tri.events;
    short_log.pop_back();
    CHECK_THROWS_AS(replay(poly, short_log), InvariantError);
    auto swapped = tri.events;
    std::swap(swapped.front(), swapped.back());
    CHECK_THROWS_AS(replay(poly, swapped), InvariantError);
}
