#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace troplift {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p", "p/q" or "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);
Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Splits q > 0 as s^2 * r with r a squarefree positive integer (up to the
/// trial-division bound; larger cofactors are kept unsplit).
struct SquareSplit {
  Rational scale;   // s
  Integer radicand; // r
};
SquareSplit split_square(const Rational& q);

Rational pow_int(const Rational& base, unsigned exponent);

}  // namespace troplift
