#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace msa {

/// Exact rational coefficient. gmpxx keeps values canonical after every
/// arithmetic operation (reduced, positive denominator).
using Scalar = mpq_class;

/// Parses "p", "-p", "p/q". Throws ParseError on anything else, including a
/// zero denominator.
Scalar parse_scalar(std::string_view text, const std::string& where = {});

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace msa
