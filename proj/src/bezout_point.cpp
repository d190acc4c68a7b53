#include "lattice/bezout_point.hpp"

#include <sstream>
#include <string>
#include <utility>

namespace lattice {

LatticeVector FrameTransform::apply(LatticePoint original) const {
    LatticeVector v = original - origin;
    if (swap_axes) std::swap(v.dx, v.dy);
    if (negate_y) v.dy = -v.dy;
    if (negate_x) v.dx = -v.dx;
    return v;
}

LatticePoint FrameTransform::invert(LatticeVector v) const {
    if (negate_x) v.dx = -v.dx;
    if (negate_y) v.dy = -v.dy;
    if (swap_axes) std::swap(v.dx, v.dy);
    return origin + v;
}

NormalizedTriangle normalize(const std::array<LatticePoint, 3>& triangle, std::size_t pivot) {
    if (pivot > 2) throw ContractError("pivot index must be 0, 1 or 2");
    NormalizedTriangle nt;
    nt.source_index = {pivot, (pivot + 1) % 3, (pivot + 2) % 3};
    const LatticePoint& c = triangle[nt.source_index[0]];
    const LatticePoint& a = triangle[nt.source_index[1]];
    const LatticePoint& b = triangle[nt.source_index[2]];
    if (twice_signed_area(c, a, b) == 0) {
        std::ostringstream msg;
        msg << "degenerate triangle " << c << ' ' << a << ' ' << b;
        throw DegenerateError(msg.str());
    }

    FrameTransform& tf = nt.transform;
    tf.origin = c;
    LatticeVector va = tf.apply(a);
    LatticeVector vb = tf.apply(b);
    if (va.dy == vb.dy) tf.swap_axes = true;
    va = tf.apply(a);
    vb = tf.apply(b);
    if (va.dy > vb.dy) tf.negate_y = true;
    va = tf.apply(a);
    vb = tf.apply(b);
    if (cross(va, vb) < 0) tf.negate_x = true;

    nt.a = tf.apply(a);
    nt.b = tf.apply(b);
    nt.n = cross(nt.a, nt.b);
    return nt;
}

NormalizedTriangle normalized_from_frame(LatticeVector a, LatticeVector b) {
    NormalizedTriangle nt;
    nt.a = a;
    nt.b = b;
    nt.n = cross(a, b);
    nt.source_index = {0, 1, 2};
    if (nt.n <= 0 || a.dy >= b.dy) {
        std::ostringstream msg;
        msg << "vectors " << a << ' ' << b << " are not in normalized position (need ad-bc > 0 and c < d)";
        throw ContractError(msg.str());
    }
    return nt;
}

std::array<LatticePoint, 3> original_vertices(const NormalizedTriangle& nt) {
    return {nt.transform.origin, nt.transform.invert(nt.a), nt.transform.invert(nt.b)};
}

namespace {

void require_split_preconditions(const NormalizedTriangle& nt) {
    if (nt.n != cross(nt.a, nt.b) || nt.a.dy >= nt.b.dy) {
        throw ContractError("normalized triangle invariants do not hold");
    }
    if (nt.n <= 1) {
        throw ContractError("split point requires twice-area n > 1, got n = " + std::to_string(nt.n));
    }
    const Wide g = wide_gcd(Wide{nt.a.dx} - nt.b.dx, Wide{nt.a.dy} - nt.b.dy);
    if (g != 1) {
        std::ostringstream msg;
        msg << "edge AB is not primitive: gcd(a-b, c-d) = " << narrow(g);
        throw ContractError(msg.str());
    }
}

}  // namespace

LatticePoint interior_split_point(const NormalizedTriangle& nt) {
    require_split_preconditions(nt);

    const Wide n = nt.n;
    const Wide c = nt.a.dy;
    const Coord p = narrow(Wide{nt.a.dx} - nt.b.dx);  // a - b
    const Coord q = narrow(Wide{nt.a.dy} - nt.b.dy);  // c - d, negative
    const Wide m = -Wide{q};

    // (a-b)s - (c-d)t = 1
    const BezoutResult bz = extended_gcd(p, -q);
    const Wide s = bz.s;

    // Every lattice point on the line (a-b)y - (c-d)x = n-1 has
    // y = (n-1)s + (c-d)i for some integer i, so y is fixed modulo m. The
    // window (n-1)c <= n*y < (n-1)c + n*m holds exactly m consecutive integers
    // starting at ceil((n-1)c / n).
    const Wide residue = floor_mod(checked_mul(floor_mod(n - 1, m), floor_mod(s, m)), m);
    const Wide y_low = ceil_div(checked_mul(n - 1, c), n);
    const Wide y = y_low + floor_mod(residue - y_low, m);
    const Wide x_num = checked_sub(checked_mul(p, y), n - 1);
    if (x_num % q != 0) throw InvariantError("split point x is not integral");
    return {narrow(x_num / q), narrow(y)};
}

std::vector<LatticePoint> split_point_candidates(const NormalizedTriangle& nt) {
    require_split_preconditions(nt);
    const Wide n = nt.n;
    std::vector<LatticePoint> found;
    for (Wide i = 1; i <= n; ++i) {
        const Wide x = checked_add(checked_mul(n - i, nt.a.dx), checked_mul(i - 1, nt.b.dx));
        const Wide y = checked_add(checked_mul(n - i, nt.a.dy), checked_mul(i - 1, nt.b.dy));
        if (x % n == 0 && y % n == 0) found.push_back({narrow(x / n), narrow(y / n)});
    }
    return found;
}

LatticePoint split_point_scan(const NormalizedTriangle& nt) {
    const std::vector<LatticePoint> found = split_point_candidates(nt);
    if (found.size() != 1) {
        throw InvariantError("expected exactly one integral split candidate, found " +
                             std::to_string(found.size()));
    }
    return found.front();
}

}  // namespace lattice
