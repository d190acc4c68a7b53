#include <doctest.h>

#include <random>
#include <vector>

#include "lattice/bezout_point.hpp"
#include "support/random_triangles.hpp"

using namespace lattice;

namespace {

using Tri = std::array<LatticePoint, 3>;

// Brute force in the normalized frame: lattice points of the closed triangle
// O, A, B lying on (a-b)y - (c-d)x = n-1.
std::vector<LatticePoint> points_on_scaled_edge(const NormalizedTriangle& nt) {
    const LatticeVector a = nt.a, b = nt.b;
    std::vector<LatticePoint> out;
    const Coord x0 = std::min({Coord{0}, a.dx, b.dx}), x1 = std::max({Coord{0}, a.dx, b.dx});
    const Coord y0 = std::min({Coord{0}, a.dy, b.dy}), y1 = std::max({Coord{0}, a.dy, b.dy});
    const LatticePoint o{0, 0}, pa{a.dx, a.dy}, pb{b.dx, b.dy};
    for (Coord x = x0; x <= x1; ++x) {
        for (Coord y = y0; y <= y1; ++y) {
            const LatticePoint p{x, y};
            if ((a.dx - b.dx) * y - (a.dy - b.dy) * x != nt.n - 1) continue;
            if (twice_signed_area(o, pa, p) >= 0 && twice_signed_area(pa, pb, p) >= 0 &&
                twice_signed_area(pb, o, p) >= 0) {
                out.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("normalize translates, reflects and records the transform") {
    SUBCASE("translation only") {
        const auto nt = normalize(Tri{{{1, 1}, {3, 1}, {2, 3}}}, 0);
        CHECK(nt.a == LatticeVector{2, 0});
        CHECK(nt.b == LatticeVector{1, 2});
        CHECK(nt.n == 4);
        CHECK(nt.transform == FrameTransform{{1, 1}, false, false, false});
    }
    SUBCASE("already normalized") {
        const auto nt = normalize(Tri{{{0, 0}, {2, 0}, {1, 2}}}, 0);
        CHECK(nt.transform == FrameTransform{});
        CHECK(nt.a == LatticeVector{2, 0});
        CHECK(nt.b == LatticeVector{1, 2});
    }
    SUBCASE("negative orientation") {
        const Tri input{{{0, 0}, {-4, 0}, {1, 2}}};
        const auto nt = normalize(input, 0);
        CHECK(nt.n == 8);
        CHECK(nt.transform.negate_x);
        CHECK(nt.a == LatticeVector{4, 0});
        CHECK(nt.b == LatticeVector{-1, 2});
        CHECK(original_vertices(nt) == input);
    }
    SUBCASE("horizontal AB swaps axes") {
        const Tri input{{{0, 0}, {2, 1}, {-1, 1}}};
        const auto nt = normalize(input, 0);
        CHECK(nt.transform.swap_axes);
        CHECK(nt.a.dy < nt.b.dy);
        CHECK(nt.n == 3);
        CHECK(original_vertices(nt) == input);
    }
    SUBCASE("pivot selects C") {
        const Tri input{{{3, 1}, {2, 3}, {1, 1}}};
        const auto nt = normalize(input, 2);
        CHECK(nt.transform.origin == LatticePoint{1, 1});
        CHECK(nt.source_index == std::array<std::size_t, 3>{2, 0, 1});
        CHECK(nt.a == LatticeVector{2, 0});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(normalize(Tri{{{0, 0}, {1, 1}, {2, 2}}}, 0), DegenerateError);
        CHECK_THROWS_AS(normalize(Tri{{{0, 0}, {1, 0}, {0, 1}}}, 3), ContractError);
        CHECK_THROWS_AS(normalized_from_frame({1, 2}, {-1, 1}), ContractError);
    }
}

TEST_CASE("normalize round-trips and establishes its invariants") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Coord> coord(-40, 40);
    std::uniform_int_distribution<std::size_t> pivot(0, 2);
    for (int i = 0; i < 20000; ++i) {
        const Tri t{{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}, {coord(rng), coord(rng)}}};
        if (twice_signed_area(t[0], t[1], t[2]) == 0) continue;
        const std::size_t k = pivot(rng);
        const auto nt = normalize(t, k);
        REQUIRE(nt.n == cross(nt.a, nt.b));
        REQUIRE(nt.n > 0);
        REQUIRE(nt.a.dy < nt.b.dy);
        REQUIRE(nt.n == std::abs(twice_signed_area(t[0], t[1], t[2])));
        const auto back = original_vertices(nt);
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(back[j] == t[nt.source_index[j]]);
        REQUIRE(nt.source_index[0] == k);
    }
}

TEST_CASE("interior_split_point examples") {
    SUBCASE("n = 3, D = (A + B) / 3") {
        const Tri input{{{0, 0}, {1, 2}, {-1, 1}}};
        const auto nt = normalize(input, 0);
        CHECK(nt.n == 3);
        // Oracle: the only integral member of X is i = 2, (A + B) / 3 = (0, 1).
        REQUIRE(points_on_scaled_edge(nt).size() == 1);
        const auto d = interior_split_point(nt);
        CHECK(nt.transform.invert({d.x, d.y}) == LatticePoint{0, 1});
        CHECK(split_point_scan(nt) == d);
    }
    SUBCASE("n = 2, D lands on edge CA") {
        const auto nt = normalized_from_frame({2, 0}, {1, 1});
        CHECK(nt.n == 2);
        CHECK(interior_split_point(nt) == LatticePoint{1, 0});
        CHECK(split_point_scan(nt) == LatticePoint{1, 0});
        CHECK(split_point_candidates(nt).size() == 1);
    }
    SUBCASE("primitive triangle is rejected") {
        const auto nt = normalized_from_frame({1, 0}, {0, 1});
        CHECK_THROWS_AS(interior_split_point(nt), ContractError);
        CHECK_THROWS_AS(split_point_scan(nt), ContractError);
    }
    SUBCASE("non-primitive AB is rejected") {
        const auto nt = normalized_from_frame({2, 0}, {0, 2});
        CHECK_THROWS_AS(interior_split_point(nt), ContractError);
    }
}

TEST_CASE("Bezout construction matches the linear scan and lies on the scaled edge") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10000; ++i) {
        const auto nt = testing::random_splittable_triangle(rng, 1000, 10000);
        const auto candidates = split_point_candidates(nt);
        REQUIRE(candidates.size() == 1);
        const auto d = interior_split_point(nt);
        REQUIRE(d == candidates.front());

        const LatticePoint o{0, 0}, a{nt.a.dx, nt.a.dy}, b{nt.b.dx, nt.b.dy};
        REQUIRE((a.x - b.x) * d.y - (a.y - b.y) * d.x == nt.n - 1);
        REQUIRE(twice_signed_area(o, a, d) >= 0);
        REQUIRE(twice_signed_area(a, b, d) >= 0);
        REQUIRE(twice_signed_area(b, o, d) >= 0);
        REQUIRE(d != o);
        REQUIRE(d != a);
        REQUIRE(d != b);
    }
}

TEST_CASE("the scaled edge carries exactly one lattice point of the triangle") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 2000; ++i) {
        const auto nt = testing::random_splittable_triangle(rng, 25, 400);
        const auto brute = points_on_scaled_edge(nt);
        REQUIRE(brute.size() == 1);
        REQUIRE(interior_split_point(nt) == brute.front());
    }
}
