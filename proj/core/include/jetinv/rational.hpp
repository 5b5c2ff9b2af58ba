#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jetinv {

// Exact scalars. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation; construction from raw
// num/den goes through make_rational so the invariant holds there as well.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "1,-2,3/4".
std::vector<Rational> parse_rational_list(std::string_view text);

// Always "num/den", including integers ("3/1"), so serialized output never
// depends on whether a value happens to be integral.
std::string to_string(const Rational& q);

Rational factorial(unsigned n);
Integer binomial(unsigned n, unsigned r);

}  // namespace jetinv
