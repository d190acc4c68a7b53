#include "lattice/svg.hpp"

#include <algorithm>
#include <sstream>

namespace lattice {

namespace {

// Pixel mapping with y pointing down and one empty cell of margin.
struct Canvas {
    BoundingBox box;
    Coord unit;

    Coord px(Coord x) const { return (x - box.min_x + 1) * unit; }
    Coord py(Coord y) const { return (box.max_y - y + 1) * unit; }
    Coord width() const { return (box.max_x - box.min_x + 2) * unit; }
    Coord height() const { return (box.max_y - box.min_y + 2) * unit; }
};

template <typename Range>
std::string points_attr(const Canvas& canvas, const Range& points) {
    std::ostringstream out;
    const char* sep = "";
    for (const LatticePoint& p : points) {
        out << sep << canvas.px(p.x) << ',' << canvas.py(p.y);
        sep = " ";
    }
    return out.str();
}

}  // namespace

std::string render_svg(const Triangulation& tri, std::int64_t guard) {
    const BoundingBox box = enumeration_box(tri.source, guard);
    const Coord extent = std::max(box.max_x - box.min_x, box.max_y - box.min_y) + 2;
    const Canvas canvas{box, std::clamp<Coord>(800 / extent, 4, 40)};
    const Coord marker = std::max<Coord>(canvas.unit / 8, 2);

    std::ostringstream boundary, interior;
    for_each_lattice_point(tri.source, guard, [&](LatticePoint p, Location loc) {
        std::ostringstream& target = loc == Location::boundary ? boundary : interior;
        target << "    <circle cx=\"" << canvas.px(p.x) << "\" cy=\"" << canvas.py(p.y) << "\" r=\"" << marker
               << "\"/>\n";
    });

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas.width() << "\" height=\""
        << canvas.height() << "\" viewBox=\"0 0 " << canvas.width() << ' ' << canvas.height() << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
        << "  <g id=\"triangles\" fill=\"none\" stroke=\"#4a7fb5\" stroke-width=\"1\">\n";
    for (const auto& t : tri.triangles) {
        svg << "    <polygon points=\"" << points_attr(canvas, t.vertices()) << "\"/>\n";
    }
    svg << "  </g>\n"
        << "  <polygon id=\"outline\" points=\"" << points_attr(canvas, tri.source.vertices())
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" stroke-linejoin=\"round\"/>\n"
        << "  <g id=\"boundary-points\" fill=\"#000000\">\n"
        << boundary.str() << "  </g>\n"
        << "  <g id=\"interior-points\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\">\n"
        << interior.str() << "  </g>\n"
        << "</svg>\n";
    return svg.str();
}

}  // namespace lattice
