#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lattice/arith.hpp"
#include "lattice/errors.hpp"

namespace lattice {

/// Largest coordinate magnitude accepted from input files. Products of
/// differences of such coordinates stay exact in 128-bit intermediates.
inline constexpr Coord coordinate_limit = Coord{1} << 31;

struct LatticeVector {
    Coord dx = 0;
    Coord dy = 0;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

struct LatticePoint {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticeVector operator-(LatticePoint a, LatticePoint b);
LatticePoint operator+(LatticePoint p, LatticeVector v);

std::ostream& operator<<(std::ostream& os, LatticePoint p);
std::ostream& operator<<(std::ostream& os, LatticeVector v);

/// Exact cross product u x v.
Coord cross(LatticeVector u, LatticeVector v);

/// (b - a) x (c - a): positive iff a, b, c turn counterclockwise, zero iff
/// collinear, and twice the triangle's area in magnitude.
Coord twice_signed_area(LatticePoint a, LatticePoint b, LatticePoint c);

struct BezoutResult {
    Coord g = 0;
    Coord s = 0;
    Coord t = 0;

    friend bool operator==(const BezoutResult&, const BezoutResult&) = default;
};

/// Iterative extended Euclid on (p, q), returning g = gcd(|p|, |q|) and
/// p*s + q*t = g. The coefficients are the last nontrivial row of the
/// remainder sequence started from (p, 1, 0), (q, 0, 1), negated if needed so
/// that g >= 0. This gives |s| <= |q| / (2g) and |t| <= |p| / (2g) whenever both
/// inputs are nonzero and |p| != |q|. gcd(0, 0) is reported as (0, 0, 0).
BezoutResult extended_gcd(Coord p, Coord q);

/// gcd of the coordinate differences: the number of unit lattice steps along
/// the closed segment a-b. Throws DegenerateError when a == b.
Coord edge_gcd(LatticePoint a, LatticePoint b);

/// All lattice points of the closed segment, ordered from a to b.
std::vector<LatticePoint> segment_lattice_points(LatticePoint a, LatticePoint b);

/// True iff p lies on the closed segment a-b (a == b allowed).
bool point_on_segment(LatticePoint p, LatticePoint a, LatticePoint b);

/// True iff the closed segments a-b and c-d share at least one point.
bool segments_intersect(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d);

enum class Location { interior, boundary, exterior };

std::ostream& operator<<(std::ostream& os, Location loc);

/// A simple polygon with counterclockwise vertex order. Instances only come
/// out of validate_polygon, so every LatticePolygon satisfies its invariants.
class LatticePolygon {
public:
    std::span<const LatticePoint> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const LatticePoint& operator[](std::size_t i) const { return vertices_[i]; }

    /// Edge i runs from vertex i to vertex (i + 1) mod size.
    LatticePoint edge_end(std::size_t i) const { return vertices_[(i + 1) % vertices_.size()]; }

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

private:
    friend LatticePolygon validate_polygon(std::vector<LatticePoint> vertices);
    explicit LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {}

    std::vector<LatticePoint> vertices_;
};

/// Checks simplicity exactly (O(n^2) pairwise edge tests) and normalizes to
/// counterclockwise order, keeping the first vertex in place. Throws
/// PolygonError.
LatticePolygon validate_polygon(std::vector<LatticePoint> vertices);

/// Shoelace sum of an arbitrary vertex ring, without validation.
Coord twice_signed_ring_area(std::span<const LatticePoint> ring);

/// Twice the area of a valid polygon; always positive.
Coord twice_polygon_area(const LatticePolygon& poly);

/// Exact crossing-number classification. Boundary is detected first with
/// point_on_segment on every edge.
Location point_in_polygon(LatticePoint p, const LatticePolygon& poly);

/// Same classification against an unvalidated vertex ring.
Location point_in_ring(LatticePoint p, std::span<const LatticePoint> ring);

}  // namespace lattice
