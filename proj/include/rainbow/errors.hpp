#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rainbow {

// Base of every domain error. name() is the stable machine-readable
// identifier that the CLI prints before exiting with code 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what)
        : Error("dimension-mismatch", what) {}
};

class ColorRangeError : public Error {
public:
    ColorRangeError(const std::string& what, int row, int col)
        : Error("color-id-out-of-range", what), row(row), col(col) {}
    int row;
    int col;
};

class SizeMismatchError : public Error {
public:
    explicit SizeMismatchError(const std::string& what)
        : Error("size-mismatch", what) {}
};

class UndefinedMuError : public Error {
public:
    explicit UndefinedMuError(const std::string& what)
        : Error("undefined-mu", what) {}
};

class DivisibilityError : public Error {
public:
    explicit DivisibilityError(const std::string& what)
        : Error("divisibility-violation", what) {}
};

// Search aborted: nodes_visited is the counter value at the abort point.
// This is an error, never a silent "none"; absence of a witness is only
// reported after the search space is exhausted.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& what, std::uint64_t nodes_visited)
        : Error("budget-exceeded", what), nodes_visited(nodes_visited) {}
    std::uint64_t nodes_visited;
};

// Coloring text format violation; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("parse-error", what), line(line), column(column) {}
    int line;
    int column;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("io-error", what) {}
};

// One-off argument violations (nonpositive k, t out of range, ...).
class DomainError : public Error {
public:
    DomainError(std::string name, const std::string& what)
        : Error(std::move(name), what) {}
};

}  // namespace rainbow
