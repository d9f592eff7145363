#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shiftsym {

// Exact rational number, always stored in lowest terms with a positive
// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den reduced to lowest terms (the raw mpq_class constructor is not).
Rational ratio(const Integer& num, const Integer& den);

// Parses "a" or "a/b" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

Integer factorial(int n);
Integer binomial(int n, int k);

// (x)_n = x (x - 1) ... (x - n + 1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, int n);

}  // namespace shiftsym
