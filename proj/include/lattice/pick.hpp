#pragma once

#include <cstdint>

#include "lattice/core.hpp"
#include "lattice/triangulation.hpp"

namespace lattice {

/// Default ceiling on the number of bounding-box points the enumeration
/// oracle will classify.
inline constexpr std::int64_t default_enumeration_guard = 100'000'000;

/// Interior count i, boundary count u and twice-area 2A of one polygon.
/// A valid count satisfies 2A = 2i + u - 2.
struct PickCount {
    Coord interior = 0;
    Coord boundary = 0;
    Coord twice_area = 0;

    bool holds() const noexcept { return twice_area == 2 * interior + boundary - 2; }

    friend bool operator==(const PickCount&, const PickCount&) = default;
};

/// Lattice points found by classifying every point of the bounding box.
struct LatticeCensus {
    Coord interior = 0;
    Coord boundary = 0;
};

/// Counts of a polygon split by the cut path A -> D -> B, and d, the number of
/// lattice points on AD and DB with A, B and D each counted once.
struct AdditivityWitness {
    Coord i = 0, u = 0;
    Coord i1 = 0, u1 = 0;
    Coord i2 = 0, u2 = 0;
    Coord d = 0;
    LatticePolygon part1;
    LatticePolygon part2;
};

/// Sum of edge gcds; each vertex is counted once.
Coord boundary_count(const LatticePolygon& poly);

/// Classifies every bounding-box point with point_in_polygon. Throws
/// GuardError when the box holds more than `guard` points.
LatticeCensus lattice_census(const LatticePolygon& poly, std::int64_t guard = default_enumeration_guard);

/// Interior lattice points by bounding-box enumeration.
Coord interior_count_oracle(const LatticePolygon& poly, std::int64_t guard = default_enumeration_guard);

/// Closed-triangle lattice point count by exact row scanning: every row of the
/// bounding box is clipped against the three edge half-planes. Runs in time
/// proportional to the triangle's height, not its box area.
Coord closed_triangle_point_count(LatticePoint a, LatticePoint b, LatticePoint c);

/// 2i + u - 2.
Coord pick_twice_area(Coord interior, Coord boundary);

/// Interior from the oracle, boundary from edge gcds, area from the shoelace
/// sum. Throws InvariantError if they disagree with Pick's identity.
PickCount verify_pick(const LatticePolygon& poly, std::int64_t guard = default_enumeration_guard);

/// Pick count of a single triangle.
PickCount verify_pick(const LatticeTriangle& t, std::int64_t guard = default_enumeration_guard);

/// Cuts `poly` along A -> D -> B (D == A for a single chord AB), counts both
/// parts with the oracle and checks
///   i = i1 + i2 + d - 2,  u = u1 + u2 - 2d + 2,
///   2i + u - 2 = (2i1 + u1 - 2) + (2i2 + u2 - 2).
/// A and B must be distinct boundary lattice points; D must be interior or
/// equal to A. Throws InvalidCutError when the cut leaves the polygon or the
/// parts are not simple, InvariantError if an identity fails.
AdditivityWitness verify_additivity(const LatticePolygon& poly, LatticePoint a, LatticePoint d, LatticePoint b,
                                    std::int64_t guard = default_enumeration_guard);

/// Checks the doubled Pick sum of a split event's children against its
/// parent, using oracle counts on each triangle. Returns the parent's value.
Coord verify_event_additivity(const SplitEvent& event);


struct BoundingBox {
    Coord min_x, min_y, max_x, max_y;
};

/// Bounding box of `poly`, or GuardError if it holds more than `guard` points.
BoundingBox enumeration_box(const LatticePolygon& poly, std::int64_t guard = default_enumeration_guard);

/// Calls visit(point, location) for every lattice point of the bounding box
/// that is not exterior, row by row from the bottom, left to right.
template <typename Visit>
void for_each_lattice_point(const LatticePolygon& poly, std::int64_t guard, Visit&& visit) {
    const BoundingBox box = enumeration_box(poly, guard);
    for (Coord y = box.min_y; y <= box.max_y; ++y) {
        for (Coord x = box.min_x; x <= box.max_x; ++x) {
            const LatticePoint p{x, y};
            const Location loc = point_in_polygon(p, poly);
            if (loc != Location::exterior) visit(p, loc);
        }
    }
}

}  // namespace lattice
