#pragma once

// Text syntax for elements of U(D):
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := base ('^' posint)?
//   base  := atom | integer | identifier | '(' expr ')'
//   atom  := 'd(' expr ')' | 'h(' expr ')' | 'C' | 'L'
//
// d takes an integer index and h a half-odd one, each given as a scalar
// expression such as -3/2. C and L are the central generators; the lowercase
// identifiers c, h, l, alpha, beta, gamma name parameters and are replaced by
// their values. Division is by nonzero scalars only. Float literals are rejected.

#include <string>
#include <string_view>

#include "mthv/algebra.hpp"
#include "mthv/pbw.hpp"

namespace mthv {

/// Parses and straightens. Throws ParseError (with the offset) on bad syntax,
/// unknown identifiers, float literals or division by zero.
UEAElement parse_element(std::string_view text, const Params& params = {});

/// Parses a scalar expression over the parameter names.
Scalar parse_coefficient(std::string_view text, const Params& params = {});

/// Canonical text; parse_element(format_element(x)) == x.
std::string format_element(const UEAElement& x);

}  // namespace mthv
