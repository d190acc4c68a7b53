#include "lattice/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>

#include "lattice/document.hpp"
#include "lattice/svg.hpp"

namespace lattice::cli {

std::string format_area(Coord twice_area) {
    return "twice_area=" + std::to_string(twice_area) + " area=" + std::to_string(twice_area) + "/2\n";
}

std::string format_count(const LatticeCensus& census) {
    return "interior=" + std::to_string(census.interior) + " boundary=" + std::to_string(census.boundary) + "\n";
}

std::string format_pick(const PickCount& count) {
    return "interior=" + std::to_string(count.interior) + " boundary=" + std::to_string(count.boundary) +
           " twice_area=" + std::to_string(count.twice_area) + (count.holds() ? " OK\n" : " FAIL\n");
}

std::string format_triangulation(const Triangulation& tri, bool with_events) {
    std::ostringstream out;
    for (const auto& t : tri.triangles) out << t << '\n';
    if (with_events) {
        out << "events " << tri.events.size() << '\n';
        for (const auto& e : tri.events) {
            out << to_string(e.rule) << " | " << e.parent << " | " << e.point.x << ' ' << e.point.y;
            for (const auto& child : e.children) out << " | " << child;
            out << '\n';
        }
    }
    return out.str();
}

namespace {

struct Options {
    std::string file;
    std::string format = "auto";
    std::int64_t limit = default_enumeration_guard;
    bool events = false;
    std::string output;
};

DocumentFormat resolve_format(const Options& opt) {
    if (opt.format == "plain") return DocumentFormat::plain;
    if (opt.format == "json") return DocumentFormat::structured;
    return format_for_path(opt.file);
}

void add_input(CLI::App* cmd, Options& opt) {
    cmd->add_option("FILE", opt.file, "polygon file")->required();
    cmd->add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"auto", "plain", "json"}))
        ->capture_default_str();
}

void add_limit(CLI::App* cmd, Options& opt) {
    cmd->add_option("--limit", opt.limit, "maximum bounding-box points to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int dispatch(const CLI::App& app, const Options& opt, std::ostream& out) {
    const PolygonDocument doc = load_polygon(opt.file, resolve_format(opt));
    const LatticePolygon& poly = doc.polygon;

    if (app.got_subcommand("area")) {
        out << format_area(twice_polygon_area(poly));
    } else if (app.got_subcommand("count")) {
        out << format_count(lattice_census(poly, opt.limit));
    } else if (app.got_subcommand("pick")) {
        out << format_pick(verify_pick(poly, opt.limit));
    } else if (app.got_subcommand("triangulate")) {
        out << format_triangulation(primitive_triangulation(poly), opt.events);
    } else if (app.got_subcommand("svg")) {
        const std::string svg = render_svg(primitive_triangulation(poly), opt.limit);
        std::ofstream file(opt.output, std::ios::binary);
        if (!file || !(file << svg) || !file.flush()) {
            throw std::system_error(errno, std::generic_category(), "cannot write " + opt.output);
        }
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lattice polygon areas, Pick counts and primitive triangulations", "lattice"};
    app.require_subcommand(1);
    Options opt;

    add_input(app.add_subcommand("area", "print twice the area and the area as a fraction"), opt);
    auto* count = app.add_subcommand("count", "count interior and boundary lattice points");
    add_input(count, opt);
    add_limit(count, opt);
    auto* pick = app.add_subcommand("pick", "check Pick's identity 2A = 2i + u - 2");
    add_input(pick, opt);
    add_limit(pick, opt);
    auto* tri = app.add_subcommand("triangulate", "print a primitive triangulation");
    add_input(tri, opt);
    tri->add_flag("--events", opt.events, "append the split event log");
    auto* svg = app.add_subcommand("svg", "render the triangulation and lattice points as SVG");
    add_input(svg, opt);
    add_limit(svg, opt);
    svg->add_option("-o,--output", opt.output, "output SVG path")->required();

    std::vector<const char*> argv{"lattice"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    const auto report = [&](int code, const std::string& message) {
        err << "lattice: " << message << '\n';
        return code;
    };
    try {
        return dispatch(app, opt, out);
    } catch (const ParseError& e) {
        std::ostringstream where;
        where << opt.file;
        if (e.line() != 0) where << ':' << e.line() << ':' << e.column();
        return report(parse_error, where.str() + ": " + e.what());
    } catch (const PolygonError& e) {
        return report(invalid_polygon, opt.file + ": invalid polygon: " + e.what());
    } catch (const GuardError& e) {
        return report(guard_exceeded, opt.file + ": " + e.what());
    } catch (const OverflowError& e) {
        return report(overflow, opt.file + ": arithmetic overflow: " + e.what());
    } catch (const Error& e) {
        return report(internal_error, opt.file + ": internal error: " + e.what());
    } catch (const std::system_error& e) {
        return report(usage_error, e.what());
    }
}

}  // namespace lattice::cli
