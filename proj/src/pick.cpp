#include "lattice/pick.hpp"

#include <array>
#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

namespace lattice {

Coord boundary_count(const LatticePolygon& poly) {
    Wide u = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) u = checked_add(u, edge_gcd(poly[i], poly.edge_end(i)));
    return narrow(u);
}

BoundingBox enumeration_box(const LatticePolygon& poly, std::int64_t guard) {
    const auto [min_x, max_x] = std::minmax_element(poly.vertices().begin(), poly.vertices().end(),
                                                    [](const auto& p, const auto& q) { return p.x < q.x; });
    const auto [min_y, max_y] = std::minmax_element(poly.vertices().begin(), poly.vertices().end(),
                                                    [](const auto& p, const auto& q) { return p.y < q.y; });
    const Wide width = Wide{max_x->x} - min_x->x + 1;
    const Wide height = Wide{max_y->y} - min_y->y + 1;
    if (checked_mul(width, height) > guard) {
        throw GuardError("bounding box holds " + std::to_string(narrow(width)) + " x " +
                         std::to_string(narrow(height)) + " points, above the enumeration limit of " +
                         std::to_string(guard));
    }
    return {min_x->x, min_y->y, max_x->x, max_y->y};
}

LatticeCensus lattice_census(const LatticePolygon& poly, std::int64_t guard) {
    LatticeCensus census;
    for_each_lattice_point(poly, guard, [&](LatticePoint, Location loc) {
        if (loc == Location::interior) {
            ++census.interior;
        } else {
            ++census.boundary;
        }
    });
    return census;
}

Coord interior_count_oracle(const LatticePolygon& poly, std::int64_t guard) {
    return lattice_census(poly, guard).interior;
}

Coord closed_triangle_point_count(LatticePoint a, LatticePoint b, LatticePoint c) {
    const Coord orientation = twice_signed_area(a, b, c);
    if (orientation == 0) throw DegenerateError("closed_triangle_point_count needs a non-degenerate triangle");
    if (orientation < 0) std::swap(b, c);
    const std::array<LatticePoint, 3> v = {a, b, c};

    const Coord y_min = std::min({a.y, b.y, c.y});
    const Coord y_max = std::max({a.y, b.y, c.y});
    Wide total = 0;
    for (Coord y = y_min; y <= y_max; ++y) {
        Wide lo = std::numeric_limits<Coord>::min();
        Wide hi = std::numeric_limits<Coord>::max();
        bool empty = false;
        for (std::size_t e = 0; e < 3 && !empty; ++e) {
            const LatticePoint& p = v[e];
            const LatticePoint& q = v[(e + 1) % 3];
            // Left of p->q: ex*(y - py) - ey*(x - px) >= 0, i.e. ey*x <= rhs.
            const Wide ex = Wide{q.x} - p.x;
            const Wide ey = Wide{q.y} - p.y;
            const Wide rhs = ex * (Wide{y} - p.y) + ey * p.x;
            if (ey > 0) {
                hi = std::min(hi, floor_div(rhs, ey));
            } else if (ey < 0) {
                lo = std::max(lo, ceil_div(rhs, ey));
            } else if (ex * (Wide{y} - p.y) < 0) {
                empty = true;
            }
        }
        if (!empty && hi >= lo) total += hi - lo + 1;
    }
    return narrow(total);
}

Coord pick_twice_area(Coord interior, Coord boundary) {
    return narrow(checked_sub(checked_add(checked_mul(2, interior), boundary), 2));
}

PickCount verify_pick(const LatticePolygon& poly, std::int64_t guard) {
    PickCount count{interior_count_oracle(poly, guard), boundary_count(poly), twice_polygon_area(poly)};
    if (pick_twice_area(count.interior, count.boundary) != count.twice_area) {
        std::ostringstream msg;
        msg << "Pick identity failed: interior=" << count.interior << " boundary=" << count.boundary
            << " twice_area=" << count.twice_area;
        throw InvariantError(msg.str());
    }
    return count;
}

PickCount verify_pick(const LatticeTriangle& t, std::int64_t guard) {
    return verify_pick(validate_polygon({t.v0(), t.v1(), t.v2()}), guard);
}

namespace {

// Returns the index of `p` in `ring`, inserting it into the edge that carries
// it if it is not already a vertex. `p` must lie on the ring's boundary.
std::size_t splice_boundary_point(std::vector<LatticePoint>& ring, LatticePoint p) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (ring[i] == p) return i;
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (point_on_segment(p, ring[i], ring[(i + 1) % ring.size()])) {
            ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(i) + 1, p);
            return i + 1;
        }
    }
    throw InvalidCutError("cut endpoint is not on the polygon boundary");
}

// Vertices from ring[from] to ring[to] inclusive, walking forward.
std::vector<LatticePoint> chain(const std::vector<LatticePoint>& ring, std::size_t from, std::size_t to) {
    std::vector<LatticePoint> out;
    for (std::size_t i = from;; i = (i + 1) % ring.size()) {
        out.push_back(ring[i]);
        if (i == to) break;
    }
    return out;
}

LatticePolygon cut_part(std::vector<LatticePoint> ring) {
    if (twice_signed_ring_area(ring) <= 0) throw InvalidCutError("cut does not stay inside the polygon");
    try {
        return validate_polygon(std::move(ring));
    } catch (const PolygonError& e) {
        throw InvalidCutError(std::string("cut produces an invalid part: ") + e.what());
    }
}

// Strict interiority of the open segment p-q: its midpoint, in doubled
// coordinates, must be inside the doubled polygon.
bool segment_midpoint_inside(const LatticePolygon& poly, LatticePoint p, LatticePoint q) {
    std::vector<LatticePoint> doubled;
    doubled.reserve(poly.size());
    for (const auto& v : poly.vertices()) doubled.push_back({narrow(Wide{v.x} * 2), narrow(Wide{v.y} * 2)});
    return point_in_ring({narrow(Wide{p.x} + q.x), narrow(Wide{p.y} + q.y)}, doubled) == Location::interior;
}

}  // namespace

AdditivityWitness verify_additivity(const LatticePolygon& poly, LatticePoint a, LatticePoint d, LatticePoint b,
                                    std::int64_t guard) {
    if (a == b) throw InvalidCutError("cut endpoints A and B coincide");
    if (point_in_polygon(a, poly) != Location::boundary || point_in_polygon(b, poly) != Location::boundary) {
        throw InvalidCutError("cut endpoints must be boundary lattice points");
    }
    const bool chord = (d == a);
    if (!chord && point_in_polygon(d, poly) != Location::interior) {
        throw InvalidCutError("cut apex D must be an interior lattice point or equal to A");
    }
    if (chord ? !segment_midpoint_inside(poly, a, b)
              : !segment_midpoint_inside(poly, a, d) || !segment_midpoint_inside(poly, d, b)) {
        throw InvalidCutError("cut segment leaves the polygon");
    }

    std::vector<LatticePoint> ring(poly.vertices().begin(), poly.vertices().end());
    splice_boundary_point(ring, a);
    splice_boundary_point(ring, b);
    const std::size_t ia = splice_boundary_point(ring, a);
    const std::size_t ib = splice_boundary_point(ring, b);

    std::vector<LatticePoint> ring1 = chain(ring, ia, ib);  // A .. B, then back through D
    std::vector<LatticePoint> ring2 = chain(ring, ib, ia);  // B .. A, then back through D
    if (!chord) {
        ring1.push_back(d);
        ring2.push_back(d);
    }
    LatticePolygon part1 = cut_part(std::move(ring1));
    LatticePolygon part2 = cut_part(std::move(ring2));

    const Coord d_count = chord ? edge_gcd(a, b) + 1 : edge_gcd(a, d) + edge_gcd(d, b) + 1;
    const LatticeCensus whole = lattice_census(poly, guard);
    const LatticeCensus first = lattice_census(part1, guard);
    const LatticeCensus second = lattice_census(part2, guard);
    AdditivityWitness w{whole.interior, whole.boundary, first.interior, first.boundary, second.interior,
                        second.boundary, d_count, std::move(part1), std::move(part2)};

    const bool interior_ok = w.i == w.i1 + w.i2 + w.d - 2;
    const bool boundary_ok = w.u == w.u1 + w.u2 - 2 * w.d + 2;
    const bool pick_ok =
        pick_twice_area(w.i, w.u) == pick_twice_area(w.i1, w.u1) + pick_twice_area(w.i2, w.u2);
    if (!interior_ok || !boundary_ok || !pick_ok) {
        std::ostringstream msg;
        msg << "additivity failed: i=" << w.i << " u=" << w.u << " i1=" << w.i1 << " u1=" << w.u1
            << " i2=" << w.i2 << " u2=" << w.u2 << " d=" << w.d;
        throw InvariantError(msg.str());
    }
    return w;
}

Coord verify_event_additivity(const SplitEvent& event) {
    const auto doubled_pick = [](const LatticeTriangle& t) {
        const LatticeCensus c = lattice_census(validate_polygon({t.v0(), t.v1(), t.v2()}));
        return pick_twice_area(c.interior, c.boundary);
    };
    const Coord parent = doubled_pick(event.parent);
    Coord children = 0;
    for (const auto& child : event.children) children += doubled_pick(child);
    if (parent != children) {
        throw InvariantError("doubled Pick value of split children (" + std::to_string(children) +
                             ") differs from parent (" + std::to_string(parent) + ")");
    }
    return parent;
}

}  // namespace lattice
