#pragma once
// rational.hpp - Exact arbitrary-precision rational helpers on top of gmpxx
//
// All exact arithmetic in the library runs on mpq_class / mpz_class.
// This header only adds the small utilities the rest of the code shares:
// signed powers of two, binomials, canonical "num/den" text form.

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace digitdrift {

using BigInt = mpz_class;
using Rat = mpq_class;

// 2^e as an exact rational, e may be negative
Rat pow2_rat(long e);

// 2^e as an integer, e >= 0
BigInt pow2_int(unsigned long e);

// Binomial coefficient C(n, k), 0 for k > n
BigInt binomial(unsigned n, unsigned k);

// n! as an exact integer
BigInt factorial(unsigned n);

// Canonical text form: "num" when den == 1, otherwise "num/den" in lowest terms
std::string rat_str(const Rat& q);

// Parses "num" or "num/den"; throws std::invalid_argument on malformed input
Rat parse_rat(const std::string& text);

double to_double(const Rat& q);

} // namespace digitdrift
