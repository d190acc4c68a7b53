#include "lattice/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace lattice {

LatticeVector operator-(LatticePoint a, LatticePoint b) {
    return {narrow(checked_sub(a.x, b.x)), narrow(checked_sub(a.y, b.y))};
}

LatticePoint operator+(LatticePoint p, LatticeVector v) {
    return {narrow(checked_add(p.x, v.dx)), narrow(checked_add(p.y, v.dy))};
}

std::ostream& operator<<(std::ostream& os, LatticePoint p) { return os << '(' << p.x << ',' << p.y << ')'; }

std::ostream& operator<<(std::ostream& os, LatticeVector v) { return os << '<' << v.dx << ',' << v.dy << '>'; }

std::ostream& operator<<(std::ostream& os, Location loc) {
    switch (loc) {
        case Location::interior: return os << "interior";
        case Location::boundary: return os << "boundary";
        case Location::exterior: return os << "exterior";
    }
    return os;
}

Coord cross(LatticeVector u, LatticeVector v) {
    return narrow(checked_sub(checked_mul(u.dx, v.dy), checked_mul(u.dy, v.dx)));
}

Coord twice_signed_area(LatticePoint a, LatticePoint b, LatticePoint c) {
    const Wide ux = checked_sub(b.x, a.x);
    const Wide uy = checked_sub(b.y, a.y);
    const Wide vx = checked_sub(c.x, a.x);
    const Wide vy = checked_sub(c.y, a.y);
    return narrow(checked_sub(checked_mul(ux, vy), checked_mul(uy, vx)));
}

namespace {

int sign_of_area(LatticePoint a, LatticePoint b, LatticePoint c) {
    const Coord v = twice_signed_area(a, b, c);
    return (v > 0) - (v < 0);
}

}  // namespace

BezoutResult extended_gcd(Coord p, Coord q) {
    if (p == 0 && q == 0) return {0, 0, 0};

    Wide old_r = p, r = q;
    Wide old_s = 1, s = 0;
    Wide old_t = 0, t = 1;
    while (r != 0) {
        const Wide quotient = old_r / r;
        old_r = std::exchange(r, old_r - quotient * r);
        old_s = std::exchange(s, old_s - quotient * s);
        old_t = std::exchange(t, old_t - quotient * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {narrow(old_r), narrow(old_s), narrow(old_t)};
}

Coord edge_gcd(LatticePoint a, LatticePoint b) {
    if (a == b) {
        std::ostringstream msg;
        msg << "degenerate segment " << a << '-' << b;
        throw DegenerateError(msg.str());
    }
    return narrow(wide_gcd(checked_sub(a.x, b.x), checked_sub(a.y, b.y)));
}

std::vector<LatticePoint> segment_lattice_points(LatticePoint a, LatticePoint b) {
    const Coord k = edge_gcd(a, b);
    const LatticeVector step = {narrow((Wide{b.x} - a.x) / k), narrow((Wide{b.y} - a.y) / k)};
    std::vector<LatticePoint> points;
    points.reserve(static_cast<std::size_t>(k) + 1);
    LatticePoint p = a;
    points.push_back(p);
    for (Coord j = 0; j < k; ++j) {
        p = p + step;
        points.push_back(p);
    }
    return points;
}

bool point_on_segment(LatticePoint p, LatticePoint a, LatticePoint b) {
    if (twice_signed_area(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d) {
    const int d1 = sign_of_area(c, d, a);
    const int d2 = sign_of_area(c, d, b);
    const int d3 = sign_of_area(a, b, c);
    const int d4 = sign_of_area(a, b, d);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return (d1 == 0 && point_on_segment(a, c, d)) || (d2 == 0 && point_on_segment(b, c, d)) ||
           (d3 == 0 && point_on_segment(c, a, b)) || (d4 == 0 && point_on_segment(d, a, b));
}

Coord twice_signed_ring_area(std::span<const LatticePoint> ring) {
    Wide sum = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const LatticePoint& p = ring[i];
        const LatticePoint& q = ring[(i + 1) % ring.size()];
        sum = checked_add(sum, checked_sub(checked_mul(p.x, q.y), checked_mul(q.x, p.y)));
    }
    return narrow(sum);
}

Coord twice_polygon_area(const LatticePolygon& poly) { return twice_signed_ring_area(poly.vertices()); }

namespace {

std::string index_list(std::initializer_list<std::size_t> indices) {
    std::ostringstream out;
    const char* sep = "";
    for (auto i : indices) {
        out << sep << i;
        sep = ", ";
    }
    return out.str();
}

// Adjacent edges (prev -> shared) and (shared -> next) may only touch at
// `shared`. They overlap exactly when the path folds back on itself.
bool adjacent_edges_overlap(LatticePoint prev, LatticePoint shared, LatticePoint next) {
    return point_on_segment(next, prev, shared) || point_on_segment(prev, shared, next);
}

}  // namespace

LatticePolygon validate_polygon(std::vector<LatticePoint> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) {
        throw PolygonError(PolygonErrorKind::too_few_vertices, {},
                           "polygon needs at least 3 vertices, got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (vertices[i] == vertices[j]) {
            throw PolygonError(PolygonErrorKind::repeated_vertex, {i, j},
                               "repeated consecutive vertex at indices " + index_list({i, j}));
        }
    }

    const Coord area = twice_signed_ring_area(vertices);
    const bool collinear = std::all_of(vertices.begin(), vertices.end(), [&](const LatticePoint& p) {
        return twice_signed_area(vertices[0], vertices[1], p) == 0;
    });
    if (collinear) {
        throw PolygonError(PolygonErrorKind::zero_area, {}, "all vertices are collinear; polygon has zero area");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint a = vertices[i];
        const LatticePoint b = vertices[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const LatticePoint c = vertices[j];
            const LatticePoint d = vertices[(j + 1) % n];
            bool bad = false;
            if (j == i + 1) {
                bad = adjacent_edges_overlap(a, b, d);
            } else if (i == 0 && j == n - 1) {
                bad = adjacent_edges_overlap(c, a, b);
            } else {
                bad = segments_intersect(a, b, c, d);
            }
            if (bad) {
                throw PolygonError(PolygonErrorKind::self_intersecting, {i, j},
                                   "edges " + index_list({i, j}) + " intersect");
            }
        }
    }

    if (area == 0) {
        // A simple ring always encloses positive area.
        throw PolygonError(PolygonErrorKind::zero_area, {}, "polygon has zero area");
    }
    if (area < 0) std::reverse(vertices.begin() + 1, vertices.end());
    return LatticePolygon(std::move(vertices));
}

Location point_in_ring(LatticePoint p, std::span<const LatticePoint> ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, ring[i], ring[(i + 1) % n])) return Location::boundary;
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint a = ring[i];
        const LatticePoint b = ring[(i + 1) % n];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        // The edge straddles the horizontal through p; count it when it crosses
        // strictly to the right of p.
        const Coord side = twice_signed_area(a, b, p);
        if ((b.y > a.y) ? side > 0 : side < 0) inside = !inside;
    }
    return inside ? Location::interior : Location::exterior;
}

Location point_in_polygon(LatticePoint p, const LatticePolygon& poly) { return point_in_ring(p, poly.vertices()); }

}  // namespace lattice
