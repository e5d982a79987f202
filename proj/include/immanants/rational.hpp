#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace immanants {

using BigInt = mpz_class;

// Exact rational scalar. Arithmetic keeps values canonical (den > 0,
// reduced); the two-argument constructor does not, so use ratio() instead.
using Rational = mpq_class;

// num/den in lowest terms. Throws std::invalid_argument when den is zero.
Rational ratio(const BigInt& num, const BigInt& den);

// "p/q" in lowest terms; integers are written with an explicit "/1".
std::string to_string(const Rational& value);

// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);

// Binomial coefficient; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

double to_double(const Rational& value);

}  // namespace immanants
