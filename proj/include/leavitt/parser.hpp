#pragma once

#include <string>

#include "leavitt/algebra_element.hpp"
#include "leavitt/jacobson.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/poly.hpp"

namespace leavitt {

// Expression syntax shared by all four entry points: sums of juxtaposed
// factors, integer or a/b coefficients, parentheses, ^ for exponents
// (bounded by 10^4). A star directly behind c or d is part of the letter,
// so c* and d* are single tokens; in any other position it is an explicit
// multiplication sign, as in 3*c^2. Errors carry the 1-based column.
AlgebraElement parse_leavitt(const std::string& s, const Field& f);

// Letters X and Y only.
JacobsonElement parse_jacobson(const std::string& s, const Field& f);

// A polynomial in the given single-letter variable.
Poly parse_poly(const std::string& s, const Field& f, char var = 'x');

// A Laurent polynomial; negative exponents are allowed directly on the
// variable, as in c^-2.
LaurentPoly parse_laurent(const std::string& s, const Field& f, char var = 'c');

}  // namespace leavitt
