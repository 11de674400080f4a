#pragma once

#include "hermcert/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hermcert {

// Dense univariate polynomial, coeffs[i] multiplies lambda^i. Normalized
// values carry no trailing zero coefficients; the zero polynomial is empty.
using UPoly = std::vector<Rational>;

UPoly upoly_trim(UPoly p);
int upoly_degree(const UPoly& p);  // -1 for zero
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_remainder(const UPoly& a, const UPoly& b);
UPoly upoly_monic(const UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
Rational upoly_eval(const UPoly& p, const Rational& x);
// p(-lambda)
UPoly upoly_reflect(const UPoly& p);

// Monic gcd by Euclid over Q with monic normalization at each step.
UPoly univariate_gcd(const UPoly& p, const UPoly& q);

// Sign changes among the nonzero coefficients (order-independent).
int sign_variations(std::span<const Rational> coeffs);

// Power sums p_0 ... p_upto of the roots of a monic polynomial, from its
// coefficients via the Newton identities.
std::vector<Rational> newton_girard_power_sums(const UPoly& monic, std::size_t upto);

}  // namespace hermcert
