#pragma once

// Exact scalars. Every coefficient in the library is a reduced rational.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace plucker {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed integer or "p/q" with q > 0. The result is
/// always reduced. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Throws std::overflow_error when the value does not fit.
std::size_t to_size(const Integer& value);

}  // namespace plucker
