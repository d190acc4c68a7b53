#include "lattice/document.hpp"

#include <cerrno>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace lattice {

namespace {

Coord parse_coordinate(std::string_view token, std::size_t line, std::size_t column) {
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    Coord value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line, column, "coordinate '" + std::string(token) + "' is out of range");
    }
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
        throw ParseError(line, column, "non-integer coordinate '" + std::string(token) + "'");
    }
    if (value > coordinate_limit || value < -coordinate_limit) {
        throw ParseError(line, column, "coordinate '" + std::string(token) + "' exceeds the limit of 2^31");
    }
    return value;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<LatticePoint> parse_plain(std::string_view text) {
    std::vector<LatticePoint> vertices;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        struct Token {
            std::string_view text;
            std::size_t column;
        };
        std::vector<Token> tokens;
        for (std::size_t i = 0; i < line.size();) {
            if (is_space(line[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j])) ++j;
            tokens.push_back({line.substr(i, j - i), i + 1});
            i = j;
        }
        if (tokens.empty()) continue;
        const Coord x = parse_coordinate(tokens[0].text, line_no, tokens[0].column);
        if (tokens.size() == 1) {
            throw ParseError(line_no, tokens[0].column + tokens[0].text.size(),
                             "expected two coordinates per line, found one");
        }
        const Coord y = parse_coordinate(tokens[1].text, line_no, tokens[1].column);
        if (tokens.size() > 2) {
            throw ParseError(line_no, tokens[2].column,
                             "expected two coordinates per line, found extra '" + std::string(tokens[2].text) + "'");
        }
        vertices.push_back({x, y});
    }
    return vertices;
}

// Line and column of a 1-based byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Coord json_coordinate(const nlohmann::json& value, std::size_t index) {
    const std::string where = "vertex " + std::to_string(index);
    if (!value.is_number_integer()) {
        throw ParseError(0, 0, where + ": non-integer coordinate " + value.dump());
    }
    if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(coordinate_limit)) {
        throw ParseError(0, 0, where + ": coordinate " + value.dump() + " exceeds the limit of 2^31");
    }
    const Coord v = value.get<Coord>();
    if (v > coordinate_limit || v < -coordinate_limit) {
        throw ParseError(0, 0, where + ": coordinate " + value.dump() + " exceeds the limit of 2^31");
    }
    return v;
}

std::vector<LatticePoint> parse_structured(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte);
        throw ParseError(line, column, "malformed JSON");
    }
    if (!doc.is_array()) throw ParseError(0, 0, "expected a JSON array of [x, y] pairs");
    std::vector<LatticePoint> vertices;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& pair = doc[i];
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(0, 0, "vertex " + std::to_string(i) + ": expected an [x, y] pair");
        }
        vertices.push_back({json_coordinate(pair[0], i), json_coordinate(pair[1], i)});
    }
    return vertices;
}

}  // namespace

DocumentFormat format_for_path(std::string_view path) {
    return path.ends_with(".json") ? DocumentFormat::structured : DocumentFormat::plain;
}

PolygonDocument parse_polygon(std::string_view text, DocumentFormat format, std::string source_path) {
    std::vector<LatticePoint> vertices =
        format == DocumentFormat::plain ? parse_plain(text) : parse_structured(text);
    LatticePolygon polygon = validate_polygon(vertices);
    return {std::move(vertices), std::move(source_path), format, std::move(polygon)};
}

PolygonDocument load_polygon(const std::string& path, DocumentFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_polygon(buffer.str(), format, path);
}

}  // namespace lattice
