#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace angleset {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses a decimal literal ("0.3", "-1.25e2", "7") into an exact rational.
/// Throws std::invalid_argument on malformed input. The result is canonical.
Rational parse_decimal(std::string_view text);

/// True if q has a terminating decimal expansion (denominator of the form 2^a 5^b).
bool has_finite_decimal(const Rational& q);

/// Exact decimal rendering of q. Requires has_finite_decimal(q); throws
/// std::domain_error otherwise. Round-trips through parse_decimal bit for bit.
std::string format_decimal_exact(const Rational& q);

/// "p/q" rendering (canonical form, q omitted when 1).
std::string format_fraction(const Rational& q);

/// The exact rational equal to a finite double (doubles are dyadic).
Rational rational_from_double(double x);

/// Exact ceiling of a rational, as a machine integer. Throws std::overflow_error
/// if the result does not fit.
std::int64_t ceil_to_int64(const Rational& q);

/// Nearest integer with halves rounded away from zero.
std::int64_t round_half_away_to_int64(const Rational& q);

}  // namespace angleset
