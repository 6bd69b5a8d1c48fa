#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symdeg {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms; throws PreconditionError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

// "a" or "a/b", den omitted when 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "[-]digits" or "[-]digits/digits".
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, std::uint32_t exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace symdeg
