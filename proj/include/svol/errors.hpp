#pragma once

#include <stdexcept>
#include <string>

namespace svol {

// Violated preconditions on internal data (table mismatch, bad dimensions).
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// The caller asked for something the operation does not support (wrong k,
// missing extension, invalid pair).
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Input data failed validation (asymmetric metric, det G(0) <= 0, bad config).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Textual input could not be parsed; carries a 1-based position.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, int line_, int column_)
        : std::runtime_error(what + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_),
          column(column_) {}
    int line;
    int column;
};

}  // namespace svol
