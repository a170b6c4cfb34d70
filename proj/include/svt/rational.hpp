#pragma once

#include <gmpxx.h>

#include <string>

namespace svt {

/// Exact rational number, always reduced, denominator > 0.
using Rational = mpq_class;

/// num/den as a reduced Rational (mpq_class(n, d) alone does not reduce).
Rational make_rational(long num, long den = 1);

/// Parses "P" or "P/Q" with arbitrary-size base-10 integers; throws ParseError.
Rational rational_from_string(const std::string& s);

bool is_integer(const Rational& x);

/// r! as a Rational.
Rational factorial(long r);

/// Generalized binomial a(a-1)...(a-r+1)/r!, defined for any rational a; 1 at r = 0.
Rational rat_binomial(const Rational& a, long r);

/// Stepped binomial [a; r]_k = a(a-k)(a-2k)...(a-(r-1)k)/r!; agrees with
/// rat_binomial for k = 1.
Rational m_binomial(const Rational& a, long r, const Rational& k);

}  // namespace svt
