#include "appell/numeric.hpp"

#include <stdexcept>

namespace appell {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational falling_factorial(const Rational& t, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= t - Rational(static_cast<long>(i));
    return r;
}

Rational binom_general(const Rational& t, unsigned k) {
    return falling_factorial(t, k) / Rational(factorial(k));
}

Rational harmonic(unsigned k) {
    if (k == 0) throw std::invalid_argument("harmonic number H_0 is undefined");
    Rational h;
    for (unsigned j = 1; j <= k; ++j) h += Rational(1, static_cast<long>(j));
    return h;
}

BigInt multinomial(unsigned n, std::span<const unsigned> parts) {
    unsigned long sum = 0;
    for (unsigned p : parts) sum += p;
    if (sum != n) throw std::invalid_argument("multinomial parts do not sum to n");
    // Product of successive binomials avoids the large intermediate n!.
    BigInt r = 1;
    unsigned running = 0;
    for (unsigned p : parts) {
        running += p;
        r *= binomial(running, p);
    }
    return r;
}

}  // namespace appell
