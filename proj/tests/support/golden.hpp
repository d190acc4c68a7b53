#pragma once

// In-process runner for the golden CLI corpus described by golden/cases.txt.

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "lattice/cli.hpp"

namespace lattice::testing {

struct GoldenCase {
    std::string id;
    int expected_exit = 0;
    std::vector<std::string> args;
};

struct GoldenOutcome {
    std::string id;
    std::string mismatch;  ///< Empty when everything matched.
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<GoldenCase> load_golden_cases(const std::filesystem::path& dir) {
    std::vector<GoldenCase> cases;
    std::istringstream lines(read_file(dir / "cases.txt"));
    for (std::string line; std::getline(lines, line);) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        GoldenCase c;
        fields >> c.id >> c.expected_exit;
        for (std::string arg; fields >> arg;) c.args.push_back(arg);
        cases.push_back(std::move(c));
    }
    return cases;
}

/// Runs every case with the working directory set to `dir`, writing SVG
/// output under `scratch`.
inline std::vector<GoldenOutcome> run_golden(const std::filesystem::path& dir, const std::filesystem::path& scratch) {
    namespace fs = std::filesystem;
    fs::create_directories(scratch);
    const fs::path previous = fs::current_path();
    fs::current_path(dir);

    std::vector<GoldenOutcome> outcomes;
    for (const auto& c : load_golden_cases(dir)) {
        const fs::path out_file = scratch / c.id;
        fs::remove(out_file);
        std::vector<std::string> args = c.args;
        for (auto& a : args) {
            if (a == "{out}") a = out_file.string();
        }
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);

        std::string mismatch;
        if (code != c.expected_exit) mismatch += " exit=" + std::to_string(code);
        if (out.str() != read_file(dir / "expected" / (c.id + ".stdout"))) mismatch += " stdout";
        if (err.str() != read_file(dir / "expected" / (c.id + ".stderr"))) mismatch += " stderr";
        if (c.expected_exit == 0 && c.id.ends_with(".svg") &&
            read_file(out_file) != read_file(dir / "expected" / c.id)) {
            mismatch += " svg";
        }
        outcomes.push_back({c.id, mismatch});
    }
    fs::current_path(previous);
    return outcomes;
}

}  // namespace lattice::testing
