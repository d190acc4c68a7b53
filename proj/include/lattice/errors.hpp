#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattice {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact intermediate did not fit its integer type; the inputs are outside
/// the supported coordinate range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A segment or triangle collapsed to a point or a line.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant failed. Reaching this means a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration refused a bounding box above its configured limit.
class GuardError : public Error {
public:
    using Error::Error;
};

/// A polygon cut that leaves the polygon or fails to yield two simple parts.
class InvalidCutError : public Error {
public:
    using Error::Error;
};

enum class PolygonErrorKind {
    too_few_vertices,
    repeated_vertex,
    zero_area,
    self_intersecting,
};

/// Rejection from validate_polygon. `indices` names the offending vertices
/// (repeated_vertex) or edges (self_intersecting); edge i runs from vertex i to
/// vertex i+1.
class PolygonError : public Error {
public:
    PolygonError(PolygonErrorKind kind, std::vector<std::size_t> indices, const std::string& what)
        : Error(what), kind_(kind), indices_(std::move(indices)) {}

    PolygonErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    PolygonErrorKind kind_;
    std::vector<std::size_t> indices_;
};

/// Malformed polygon text. Line and column are 1-based; zero when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace lattice
