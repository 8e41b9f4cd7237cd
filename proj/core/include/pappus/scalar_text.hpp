#pragma once

#include <string>
#include <string_view>

#include "pappus/scalar.hpp"

namespace pappus {

/// Parses the text encoding of a scalar in `field`:
///   rational:  "p", "p/q"
///   symbolic:  polynomial expressions over a, b with + - * / ^ and parentheses,
///              e.g. "a*b - 1", "(b - 1)/b"
///   quadext:   expressions over w, canonically "c0 + c1*w"
/// Throws Error(ParseError) on malformed input.
Scalar parse_scalar(std::string_view text, FieldTag field);

/// Inverse of parse_scalar for display-normalized values.
inline std::string format_scalar(const Scalar& s) { return s.to_string(); }

}  // namespace pappus
