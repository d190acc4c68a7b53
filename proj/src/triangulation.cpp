#include "lattice/triangulation.hpp"

#include <ostream>
#include <sstream>

#include "lattice/bezout_point.hpp"

namespace lattice {

LatticeTriangle::LatticeTriangle(LatticePoint v0, LatticePoint v1, LatticePoint v2) : v_{v0, v1, v2} {
    const Coord area = twice_signed_area(v0, v1, v2);
    if (area == 0) {
        std::ostringstream msg;
        msg << "degenerate triangle " << v0 << ' ' << v1 << ' ' << v2;
        throw DegenerateError(msg.str());
    }
    if (area < 0) std::swap(v_[1], v_[2]);
    twice_area_ = area < 0 ? -area : area;
}

std::ostream& operator<<(std::ostream& os, const LatticeTriangle& t) {
    return os << t.v0().x << ' ' << t.v0().y << ' ' << t.v1().x << ' ' << t.v1().y << ' ' << t.v2().x << ' '
              << t.v2().y;
}

std::string_view to_string(SplitRule rule) {
    switch (rule) {
        case SplitRule::edge_gcd_split: return "edge-gcd-split";
        case SplitRule::interior_point_split: return "interior-point-split";
        case SplitRule::degenerate_three_way: return "degenerate-three-way";
    }
    return "unknown";
}

std::vector<LatticeTriangle> initial_triangulation(const LatticePolygon& poly) {
    std::vector<LatticePoint> ring(poly.vertices().begin(), poly.vertices().end());
    std::vector<LatticeTriangle> out;
    out.reserve(ring.size() - 2);

    const auto is_ear = [&](std::size_t i) {
        const std::size_t n = ring.size();
        const LatticePoint& prev = ring[(i + n - 1) % n];
        const LatticePoint& tip = ring[i];
        const LatticePoint& next = ring[(i + 1) % n];
        if (twice_signed_area(prev, tip, next) <= 0) return false;
        for (std::size_t j = 0; j < n; ++j) {
            const LatticePoint& p = ring[j];
            if (p == prev || p == tip || p == next) continue;
            if (twice_signed_area(prev, tip, p) >= 0 && twice_signed_area(tip, next, p) >= 0 &&
                twice_signed_area(next, prev, p) >= 0) {
                return false;
            }
        }
        return true;
    };

    while (ring.size() > 3) {
        std::size_t ear = ring.size();
        for (std::size_t i = 0; i < ring.size(); ++i) {
            if (is_ear(i)) {
                ear = i;
                break;
            }
        }
        if (ear == ring.size()) throw InvariantError("ear clipping found no ear in a simple polygon");
        const std::size_t n = ring.size();
        out.emplace_back(ring[(ear + n - 1) % n], ring[ear], ring[(ear + 1) % n]);
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(ear));
    }
    out.emplace_back(ring[0], ring[1], ring[2]);
    return out;
}

std::optional<SplitEvent> gcd_edge_split(const LatticeTriangle& t) {
    const auto& v = t.vertices();
    for (std::size_t e = 0; e < 3; ++e) {
        const LatticePoint& first = v[e];
        const LatticePoint& second = v[(e + 1) % 3];
        const LatticePoint& opposite = v[(e + 2) % 3];
        const Coord k = edge_gcd(first, second);
        if (k == 1) continue;
        // (k-1)/k * first + 1/k * second
        const LatticePoint d = {narrow((Wide{k - 1} * first.x + second.x) / k),
                                narrow((Wide{k - 1} * first.y + second.y) / k)};
        return SplitEvent{t, SplitRule::edge_gcd_split, d,
                          {LatticeTriangle(first, d, opposite), LatticeTriangle(d, second, opposite)}};
    }
    return std::nullopt;
}

SplitEvent split_at_point(const LatticeTriangle& t, LatticePoint d) {
    const LatticePoint& a = t.v0();
    const LatticePoint& b = t.v1();
    const LatticePoint& c = t.v2();
    if (d == a || d == b || d == c || twice_signed_area(a, b, d) < 0 || twice_signed_area(b, c, d) < 0 ||
        twice_signed_area(c, a, d) < 0) {
        std::ostringstream msg;
        msg << "split point " << d << " is not a non-vertex point of triangle " << t;
        throw ContractError(msg.str());
    }

    SplitEvent event{t, SplitRule::interior_point_split, d, {}};
    // ABD, ACD, BCD, each stored counterclockwise.
    const std::array<std::array<LatticePoint, 2>, 3> bases = {{{a, b}, {c, a}, {b, c}}};
    for (const auto& [p, q] : bases) {
        if (twice_signed_area(p, q, d) == 0) {
            event.rule = SplitRule::degenerate_three_way;
            continue;
        }
        event.children.emplace_back(p, q, d);
    }
    return event;
}

SplitEvent interior_split(const LatticeTriangle& t) {
    const auto& v = t.vertices();
    if (t.twice_area() <= 1) throw ContractError("interior split requires twice-area > 1");
    for (std::size_t e = 0; e < 3; ++e) {
        if (edge_gcd(v[e], v[(e + 1) % 3]) != 1) {
            throw ContractError("interior split requires primitive edges; use gcd_edge_split first");
        }
    }
    const NormalizedTriangle nt = normalize(v, 2);
    const LatticePoint local = interior_split_point(nt);
    const LatticePoint d = nt.transform.invert({local.x, local.y});
    return split_at_point(t, d);
}

namespace {

// Shared refinement loop. `next_event` yields the split for a non-primitive
// triangle.
template <typename NextEvent>
std::vector<LatticeTriangle> refine(const LatticePolygon& poly, NextEvent&& next_event) {
    std::vector<LatticeTriangle> stack = initial_triangulation(poly);
    std::vector<LatticeTriangle> done;
    while (!stack.empty()) {
        const LatticeTriangle t = stack.back();
        stack.pop_back();
        if (t.is_primitive()) {
            done.push_back(t);
            continue;
        }
        const SplitEvent& event = next_event(t);
        stack.insert(stack.end(), event.children.begin(), event.children.end());
    }
    return done;
}

}  // namespace

Triangulation primitive_triangulation(const LatticePolygon& poly) {
    std::vector<SplitEvent> events;
    auto triangles = refine(poly, [&](const LatticeTriangle& t) -> const SplitEvent& {
        if (auto split = gcd_edge_split(t)) {
            events.push_back(std::move(*split));
        } else {
            events.push_back(interior_split(t));
        }
        return events.back();
    });
    return {std::move(triangles), std::move(events), poly};
}

std::vector<LatticeTriangle> replay(const LatticePolygon& source, const std::vector<SplitEvent>& events) {
    std::size_t cursor = 0;
    auto triangles = refine(source, [&](const LatticeTriangle& t) -> const SplitEvent& {
        if (cursor == events.size()) throw InvariantError("event log ended before refinement finished");
        const SplitEvent& event = events[cursor++];
        if (!(event.parent == t)) throw InvariantError("event parent does not match the triangle being split");
        Coord sum = 0;
        for (const auto& child : event.children) sum += child.twice_area();
        if (sum != t.twice_area()) throw InvariantError("event children do not conserve area");
        return event;
    });
    if (cursor != events.size()) throw InvariantError("event log has unused events");
    return triangles;
}

}  // namespace lattice
