#ifndef REESKIT_PARSE_HPP
#define REESKIT_PARSE_HPP

#include <string>

#include "reeskit/polynomial.hpp"

namespace reeskit {

// Parses "2*x1^2*T3 - 1/2*x2 + (x1+x2)^2" style input over the given ring.
// Accepted operators: + - * ^ and parentheses; '/' only directly after an
// integer literal, forming a rational constant.  Variables are x<i> and T<i>,
// 1-based.  Throws parse_error with a byte position on bad input.
polynomial parse_polynomial(const std::string& text, const ring_spec& ring);

}  // namespace reeskit

#endif
