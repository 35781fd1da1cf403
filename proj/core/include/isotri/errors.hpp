#pragma once

#include <stdexcept>
#include <string>

namespace isotri {

/// Malformed external input (grid files, config-set files). Carries the
/// 1-based line/column of the first offending character when known (0 = n/a).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A computation was refused because it would exceed a hard resource cap
/// (search budgets are not errors; they return partial results instead).
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace isotri
