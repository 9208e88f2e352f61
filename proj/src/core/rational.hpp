#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <string_view>

namespace jetinv {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws InvalidInput otherwise or on q = 0.
Rational parse_rational(std::string_view text);

// Numerator in [-bound, bound], denominator in [1, bound].
Rational random_rational(std::mt19937_64& rng, int bound);
Rational random_nonzero_rational(std::mt19937_64& rng, int bound);

}  // namespace jetinv
