#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "lattice/core.hpp"

namespace lattice {

/// Non-degenerate lattice triangle stored counterclockwise.
class LatticeTriangle {
public:
    /// Reorders to counterclockwise (keeping v0 first). Throws DegenerateError
    /// for collinear points.
    LatticeTriangle(LatticePoint v0, LatticePoint v1, LatticePoint v2);

    const LatticePoint& v0() const noexcept { return v_[0]; }
    const LatticePoint& v1() const noexcept { return v_[1]; }
    const LatticePoint& v2() const noexcept { return v_[2]; }
    const std::array<LatticePoint, 3>& vertices() const noexcept { return v_; }
    Coord twice_area() const noexcept { return twice_area_; }

    bool is_primitive() const noexcept { return twice_area_ == 1; }

    friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;

private:
    std::array<LatticePoint, 3> v_;
    Coord twice_area_;
};

std::ostream& operator<<(std::ostream& os, const LatticeTriangle& t);

enum class SplitRule { edge_gcd_split, interior_point_split, degenerate_three_way };

std::string_view to_string(SplitRule rule);

struct SplitEvent {
    LatticeTriangle parent;
    SplitRule rule;
    LatticePoint point;
    std::vector<LatticeTriangle> children;
};

struct Triangulation {
    std::vector<LatticeTriangle> triangles;
    std::vector<SplitEvent> events;
    LatticePolygon source;
};

/// Ear clipping with exact predicates. An ear tip is a strictly convex vertex
/// whose closed triangle holds no other remaining vertex.
std::vector<LatticeTriangle> initial_triangulation(const LatticePolygon& poly);

/// Splits at the lattice point of the first non-primitive edge (scan order
/// v0v1, v1v2, v2v0) closest to that edge's first endpoint. Returns nullopt
/// when all edges are primitive.
std::optional<SplitEvent> gcd_edge_split(const LatticeTriangle& t);

/// Splits `t` into (v0 v1 d), (v2 v0 d), (v1 v2 d), discarding children of
/// zero area. `d` must lie in the closed triangle and differ from its vertices.
SplitEvent split_at_point(const LatticeTriangle& t, LatticePoint d);

/// Splits a triangle with primitive edges and twice-area > 1 at its Bezout
/// split point, using v2 as the pivot.
SplitEvent interior_split(const LatticeTriangle& t);

/// Refines the ear-clipped triangulation until every triangle is primitive.
/// Work proceeds depth first: the initial triangles and the children of each
/// split are pushed on a stack in construction order and popped from the top.
Triangulation primitive_triangulation(const LatticePolygon& poly);

/// Re-runs the work stack from initial_triangulation(source), consuming
/// `events` in order, and returns the primitive triangles it yields. Throws
/// InvariantError when an event does not match the triangle it should split.
std::vector<LatticeTriangle> replay(const LatticePolygon& source, const std::vector<SplitEvent>& events);

}  // namespace lattice
