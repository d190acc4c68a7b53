#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lattice/pick.hpp"
#include "lattice/triangulation.hpp"

namespace lattice::cli {

/// Process exit status of the `lattice` tool.
enum ExitCode : int {
    ok = 0,
    usage_error = 1,      ///< bad arguments or unreadable/unwritable file
    parse_error = 2,      ///< malformed polygon file
    invalid_polygon = 3,  ///< too few vertices, repeated vertex, zero area, self-intersection
    guard_exceeded = 4,   ///< bounding box too large for enumeration
    internal_error = 5,   ///< an invariant check failed
    overflow = 6,         ///< coordinates too large for exact arithmetic
};

std::string format_area(Coord twice_area);
std::string format_count(const LatticeCensus& census);
std::string format_pick(const PickCount& count);
/// One "x0 y0 x1 y1 x2 y2" line per primitive triangle, then, if requested,
/// "events N" and one line per split:
/// "<rule> | <parent> | <x y> | <child> | <child> [| <child>]".
std::string format_triangulation(const Triangulation& tri, bool with_events);

/// Runs the tool. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lattice::cli
