#pragma once

#include <cstdint>
#include <string>

#include "lattice/pick.hpp"
#include "lattice/triangulation.hpp"

namespace lattice {

/// Renders the polygon outline, the primitive triangle edges, boundary
/// lattice points as filled markers and interior points as hollow markers.
/// Uses integer pixel coordinates only, so the bytes depend on the input alone.
std::string render_svg(const Triangulation& tri, std::int64_t guard = default_enumeration_guard);

}  // namespace lattice
