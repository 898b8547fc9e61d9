#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polyspace {

/// Exact rational number. All lengths, LP data and critical values use it.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or a finite decimal such as "2.5"; the result is
/// canonicalized. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& q);

/// Parses a comma separated list of rationals, e.g. "1,1,2,2,3" or "1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace polyspace
