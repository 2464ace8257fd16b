#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cantor {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

// Rational bounds on sqrt(q) for q >= 0, accurate to about 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

// Nearest multiple of 2^-bits, rounding toward -infinity.
Rational round_dyadic(const Rational& q, unsigned bits);

long to_long(const Integer& z);

}  // namespace cantor
