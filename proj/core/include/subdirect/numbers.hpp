#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace subdirect {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

std::string to_string(Integer const& value);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(Rational const& value);

// Parses an optionally signed decimal integer; the whole text must be consumed.
Integer parse_integer(std::string_view text);

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
Rational binomial(Integer const& n, unsigned k);

}  // namespace subdirect
