#pragma once

#include <stdexcept>
#include <string>

namespace diagcube {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct division_by_zero : error {
    explicit division_by_zero(const std::string& msg = "division by zero") : error(msg) {}
};

struct inexact_division : error {
    explicit inexact_division(const std::string& msg = "inexact polynomial division") : error(msg) {}
};

struct arity_mismatch : error {
    explicit arity_mismatch(const std::string& msg = "arity mismatch") : error(msg) {}
};

// Raised when a modular tower element turns out to be a zero divisor
// (the specialized algebra need not be a field); callers resample.
struct not_invertible : error {
    explicit not_invertible(const std::string& msg = "element not invertible") : error(msg) {}
};

struct wrong_case : error {
    explicit wrong_case(const std::string& msg) : error(msg) {}
};

// Thrown by the unirational construction when the base point is an
// Eckardt point; callers should pick another rational point.
struct eckardt_point_error : error {
    explicit eckardt_point_error(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int col_)
        : error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace diagcube
