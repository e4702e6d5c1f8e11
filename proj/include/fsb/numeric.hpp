#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fsb {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer power(const Integer& base, unsigned exp);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);

/// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const Integer& z);

}  // namespace fsb
