#pragma once

#include <span>

#include "appell/rational.hpp"

namespace appell {

BigInt factorial(unsigned n);

/// Integer binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Generalized binomial t(t-1)...(t-k+1)/k! for rational t; 1 when k = 0.
Rational binom_general(const Rational& t, unsigned k);

/// t(t-1)...(t-n+1); the empty product is 1.
Rational falling_factorial(const Rational& t, unsigned n);

/// H_k = 1 + 1/2 + ... + 1/k. Rejects k = 0.
Rational harmonic(unsigned k);

/// n!/(j_1!...j_m!); throws std::invalid_argument unless the parts sum to n.
BigInt multinomial(unsigned n, std::span<const unsigned> parts);

}  // namespace appell
