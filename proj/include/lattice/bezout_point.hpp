#pragma once

// Locating the extra lattice point of a non-primitive lattice triangle whose
// edge AB is primitive. With C moved to the origin and n = twice the area, the
// point lies on the segment from (n-1)/n*A to (n-1)/n*B and is constructed
// from a Bezout identity for the edge vector A - B.

#include <array>
#include <cstddef>
#include <vector>

#include "lattice/core.hpp"

namespace lattice {

/// Signed axis permutation taking a translated original frame to the
/// normalized one. Applied to a vector in this order: swap x and y (if
/// `swap_axes`), negate y (if `negate_y`), negate x (if `negate_x`).
struct FrameTransform {
    LatticePoint origin;     ///< Original position of the pivot C.
    bool swap_axes = false;  ///< Used when A and B share a y coordinate.
    bool negate_y = false;   ///< Used to reach c < d.
    bool negate_x = false;   ///< Used to reach ad - bc > 0.

    LatticeVector apply(LatticePoint original) const;
    LatticePoint invert(LatticeVector normalized) const;

    friend bool operator==(const FrameTransform&, const FrameTransform&) = default;
};

/// Triangle C, A, B with C at the origin, A = (a, c), B = (b, d), such that
/// n = ad - bc > 0 and c < d.
struct NormalizedTriangle {
    LatticeVector a;
    LatticeVector b;
    FrameTransform transform;
    Coord n = 0;
    /// Original indices of the vertices that became C, A and B.
    std::array<std::size_t, 3> source_index{};
};

/// Moves vertex `pivot` to the origin. A is the vertex after the pivot in the
/// given order, B the one after that. Throws DegenerateError for collinear
/// input and ContractError for pivot > 2.
NormalizedTriangle normalize(const std::array<LatticePoint, 3>& triangle, std::size_t pivot);

/// Builds the normalized triangle directly from vectors already in the
/// normalized frame (identity transform). Throws ContractError unless
/// ad - bc > 0 and c < d.
NormalizedTriangle normalized_from_frame(LatticeVector a, LatticeVector b);

/// The three vertices C, A, B mapped back to the original frame.
std::array<LatticePoint, 3> original_vertices(const NormalizedTriangle& nt);

/// Bezout construction of the lattice point on (n-1)/n * AB, in the normalized
/// frame. The candidate y is reduced once into the window
/// (n-1)c/n <= y < (n-1)c/n - (c-d) with a floor modulus, and x follows from the
/// line (a-b)y - (c-d)x = n-1. Requires n > 1 and gcd(a-b, c-d) = 1.
LatticePoint interior_split_point(const NormalizedTriangle& nt);

/// Every integral member of {((n-i)A + (i-1)B)/n : i = 1..n}, in order of i.
std::vector<LatticePoint> split_point_candidates(const NormalizedTriangle& nt);

/// Linear scan of the same set; throws InvariantError unless exactly one
/// member is integral. Same preconditions as interior_split_point.
LatticePoint split_point_scan(const NormalizedTriangle& nt);

}  // namespace lattice
