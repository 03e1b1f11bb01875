#pragma once

#include <gmpxx.h>

#include <string>

namespace hurwitz {

// All Hurwitz numbers and cover multiplicities in this library are exact
// rationals; nothing is ever rounded.
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt pow2(unsigned n);

// 2^e for possibly negative e.
Rational pow2_rational(long e);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace hurwitz
