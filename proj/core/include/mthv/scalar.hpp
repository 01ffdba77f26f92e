#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mthv {

/// Exact arbitrary-precision rational. Always kept canonical.
using Scalar = mpq_class;

/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
inline Scalar frac(long num, long den) {
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

/// True when 2x is an integer.
inline bool is_half_integer(const Scalar& x) {
  return x.get_den() == 1 || x.get_den() == 2;
}

inline std::string to_string(const Scalar& x) { return x.get_str(); }

/// Parses "p" or "p/q" with optional leading sign. Decimal points and
/// exponents are rejected so that every input stays exact.
Scalar parse_scalar(std::string_view text);

}  // namespace mthv
