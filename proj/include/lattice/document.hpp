#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lattice/core.hpp"

namespace lattice {

/// plain: one "x y" pair per line, '#' starts a comment, blank lines ignored.
/// structured: a JSON array of [x, y] integer pairs.
enum class DocumentFormat { plain, structured };

/// Picks structured for a ".json" extension, plain otherwise.
DocumentFormat format_for_path(std::string_view path);

struct PolygonDocument {
    std::vector<LatticePoint> vertices;  ///< As written in the file.
    std::string source_path;
    DocumentFormat format;
    LatticePolygon polygon;  ///< Validated, counterclockwise.
};

/// Throws ParseError (with 1-based line and column where known) for malformed
/// text, non-integer or out-of-range coordinates; PolygonError when the
/// vertices do not form a simple polygon.
PolygonDocument parse_polygon(std::string_view text, DocumentFormat format, std::string source_path = {});

/// Reads and parses a file. Throws std::system_error when it cannot be read.
PolygonDocument load_polygon(const std::string& path, DocumentFormat format);

}  // namespace lattice
