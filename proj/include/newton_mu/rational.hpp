#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace newton_mu {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

}  // namespace newton_mu
