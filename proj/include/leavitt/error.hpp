#pragma once

#include <stdexcept>
#include <string>

namespace leavitt {

// Base class for every error raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between values attached to different coefficient fields.
struct field_mismatch : error {
    field_mismatch() : error("operands belong to different fields") {}
    explicit field_mismatch(const std::string& what) : error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

// Input text rejected by the expression parser. `position` is a 1-based
// column into the original string.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " at column " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// A series-model operation needed coefficients beyond the tracked valid order.
struct precision_error : error {
    using error::error;
};

// A query on a truncated value that is zero within its valid order: the true
// answer depends on coefficients past the truncation, so neither outcome can
// be certified.
struct inconclusive_error : error {
    using error::error;
};

}  // namespace leavitt
