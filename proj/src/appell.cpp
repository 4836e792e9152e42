#include "appell/appell.hpp"

#include <algorithm>
#include <stdexcept>

#include "appell/kernels.hpp"
#include "appell/numeric.hpp"
#include "appell/seqgroup.hpp"

namespace appell {

AppellSeq AppellSeq::identity(unsigned order) { return AppellSeq(identity_element(order)); }

namespace {

void require_degree(const AppellSeq& a, unsigned n) {
    if (n > a.order())
        throw std::out_of_range("degree " + std::to_string(n) + " exceeds Appell order " + std::to_string(a.order()));
}

}  // namespace

Rational evaluate(const AppellSeq& a, unsigned n, const Rational& x) {
    require_degree(a, n);
    // Horner in x over sum_j C(n,j) A_{n-j}(0) x^j.
    Rational acc;
    for (unsigned j = n + 1; j-- > 0;) {
        acc *= x;
        acc += Rational(binomial(n, j)) * a.values_at_zero()[n - j];
    }
    return acc;
}

Polynomial polynomial_of(const AppellSeq& a, unsigned n) {
    require_degree(a, n);
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) c[j] = Rational(binomial(n, j)) * a.values_at_zero()[n - j];
    return Polynomial(std::move(c));
}

AppellSeq appell_convolve(const AppellSeq& a, const AppellSeq& c) {
    return AppellSeq(binomial_convolve(a.values_at_zero(), c.values_at_zero()));
}

AppellSeq appell_inverse(const AppellSeq& a) { return AppellSeq(group_inverse(a.values_at_zero())); }

Polynomial forward_difference_transform_polynomial(const EgfSequence& u, const AppellSeq& a, unsigned n) {
    require_degree(a, n);
    if (n > u.order()) throw std::out_of_range("degree exceeds the order of u");
    Polynomial acc;
    Polynomial diff = polynomial_of(a, n);
    BigInt fact = 1;
    for (unsigned k = 0; k <= n && !diff.is_zero(); ++k) {
        if (k > 0) fact *= k;
        if (!u[k].is_zero()) acc += diff * (u[k] / Rational(fact));
        diff = diff.forward_difference();
    }
    return acc;
}

AppellSeq forward_difference_transform(const EgfSequence& u, const AppellSeq& a, DifferenceRoute route) {
    const unsigned order = std::min(u.order(), a.order());
    if (route == DifferenceRoute::convolution)
        return AppellSeq(binomial_convolve(a.values_at_zero(), stirling_transform(u.truncated(order))));

    std::vector<Rational> values(order + 1);
    const long n_max = order;
#pragma omp parallel for schedule(dynamic)
    for (long n = 0; n <= n_max; ++n)
        values[n] = forward_difference_transform_polynomial(u, a, static_cast<unsigned>(n))(Rational());
    return AppellSeq(EgfSequence(std::move(values)));
}

EgfSequence associated_sequence(const AppellSeq& a) { return inverse_stirling_transform(a.values_at_zero()); }

AppellSeq from_associated(const EgfSequence& a) { return AppellSeq(stirling_transform(a)); }

Rational difference_expansion(std::span<const Rational> weights, unsigned n, const Rational& x) {
    Rational acc;
    for (unsigned k = 0; k <= n && k < weights.size(); ++k)
        if (!weights[k].is_zero()) acc += weights[k] * forward_difference_power(n, k, x);
    return acc;
}

Polynomial difference_expansion_polynomial(std::span<const Rational> weights, unsigned n) {
    Polynomial acc;
    Polynomial diff = Polynomial::monomial(n);
    for (unsigned k = 0; k <= n && k < weights.size(); ++k) {
        if (!weights[k].is_zero()) acc += diff * weights[k];
        diff = diff.forward_difference();
    }
    return acc;
}

std::vector<Rational> difference_weights(const EgfSequence& a) {
    std::vector<Rational> w(a.order() + 1);
    BigInt fact = 1;
    for (unsigned k = 0; k <= a.order(); ++k) {
        if (k > 0) fact *= k;
        w[k] = a[k] / Rational(fact);
    }
    return w;
}

AppellSeq expectation_transform(const MomentSequence& m, const AppellSeq& a) {
    const unsigned order = std::min(m.order(), a.order());
    std::vector<Rational> values(order + 1);
    for (unsigned n = 0; n <= order; ++n) values[n] = expectation_transform_value(m, a, n, Rational());
    return AppellSeq(EgfSequence(std::move(values)));
}

Rational expectation_transform_value(const MomentSequence& m, const AppellSeq& a, unsigned n,
                                     const Rational& x) {
    require_degree(a, n);
    if (n > m.order()) throw std::out_of_range("degree exceeds the moment order");
    // E[(x+Y)^j] for j <= n, expanded through the moments.
    std::vector<Rational> shifted(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational acc;
        Rational xpow(1);
        for (unsigned i = j + 1; i-- > 0;) {
            acc += Rational(binomial(j, i)) * xpow * m[i];
            xpow *= x;
        }
        shifted[j] = acc;
    }
    Rational acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += Rational(binomial(n, k)) * a.values_at_zero()[k] * shifted[n - k];
    return acc;
}

EgfSequence factorial_moments(const MomentSequence& m) {
    const auto table = stirling_first_table(m.order());
    return EgfSequence(kernels::triangular_transform(*table, m.moments()));
}

EgfSequence real_power_sequence(const MomentSequence& m, const Rational& t) {
    const unsigned order = m.order();
    const std::size_t len = order + 1;
    // sums[k] holds the moments of W_k.
    std::vector<std::vector<Rational>> sums;
    sums.reserve(len);
    std::vector<Rational> w(len);
    w[0] = 1;
    for (unsigned k = 0; k <= order; ++k) {
        sums.push_back(w);
        if (k < order) w = kernels::binomial_convolution(w, m.moments(), len);
    }
    std::vector<Rational> y(len);
    for (unsigned n = 0; n <= order; ++n) {
        const Rational n_minus_t = Rational(static_cast<long>(n)) - t;
        Rational acc;
        for (unsigned k = 0; k <= n; ++k) {
            const Rational weight = binom_general(t, k) * binom_general(n_minus_t, n - k);
            if (!weight.is_zero()) acc += weight * sums[k][n];
        }
        y[n] = acc;
    }
    return EgfSequence(std::move(y));
}

}  // namespace appell
