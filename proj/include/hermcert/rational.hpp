#pragma once

// Exact scalars and continued-fraction rational number reconstruction.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hermcert {

using Integer = mpz_class;

// mpq_class keeps values canonical (reduced, positive denominator) under
// arithmetic; every constructor path in this library canonicalizes.
using Rational = mpq_class;

// num/den reduced. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q", integers, and decimal literals such as "-1.25e-3"; the
// result is the exact value of the literal. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// The dyadic rational a finite double denotes, with no rounding.
Rational from_double(double value);

double to_double(const Rational& value);

Rational abs(const Rational& value);

Integer floor(const Rational& value);

// Smallest integer r with r*r >= value, for value >= 0.
Integer ceil_sqrt(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

// Continued-fraction convergents of alpha >= 0, in order. The expansion of a
// rational always terminates, so the last convergent equals alpha.
std::vector<Rational> convergents(const Rational& alpha);

// The unique p/q with 1 <= q <= bound and |alpha - p/q| < 1/(2 bound^2), or
// nullopt when no such fraction exists. Negative alpha is handled by sign.
std::optional<Rational> rational_reconstruct(const Rational& alpha, const Integer& bound);

// ceil((2 E k n d M^(d-1))^(-1/2)) evaluated exactly. nullopt ("not usable")
// when 2 E k n d M^(d-1) >= 1, i.e. no denominator bound >= 1 is implied.
std::optional<Integer> denominator_bound(const Rational& accuracy, std::size_t points,
                                         std::size_t variables, unsigned degree,
                                         const Rational& coordinate_bound);

// E k n d M^(d-1): the perturbation bound on a degree-d power sum.
Rational power_sum_error_bound(const Rational& accuracy, std::size_t points,
                               std::size_t variables, unsigned degree,
                               const Rational& coordinate_bound);

}  // namespace hermcert
