#include "appell/families.hpp"

#include <stdexcept>

#include "appell/numeric.hpp"
#include "appell/seqgroup.hpp"
#include "appell/stirling.hpp"

namespace appell {

EgfSequence bernoulli_associated(const Rational& t, unsigned order) {
    const auto s = stirling_first_table(2 * order);
    std::vector<Rational> b(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        const Rational n_minus_t = Rational(static_cast<long>(n)) - t;
        Rational acc;
        for (unsigned k = 0; k <= n; ++k) {
            const Rational weight = binom_general(t, k) * binom_general(n_minus_t, n - k);
            if (weight.is_zero()) continue;
            acc += weight * Rational((*s)[k + n][k], binomial(k + n, n));
        }
        b[n] = acc;
    }
    return EgfSequence(std::move(b));
}

Rational daehee_number(unsigned m, unsigned n) {
    if (m == 0) throw std::invalid_argument("Daehee numbers need order m >= 1");
    return Rational(stirling_first(m + n, m), binomial(m + n, n));
}

EgfSequence bernoulli_order2_associated(unsigned order) {
    std::vector<Rational> b(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        Rational v = Rational(factorial(n)) * Rational(2) * harmonic(n + 1) / Rational(static_cast<long>(n + 2));
        b[n] = n % 2 == 1 ? -v : v;
    }
    return EgfSequence(std::move(b));
}

AppellSeq bernoulli_family(const Rational& t, unsigned order) {
    return from_associated(bernoulli_associated(t, order));
}

Rational bernoulli_polynomial(const Rational& t, unsigned n, const Rational& x) {
    return difference_expansion(difference_weights(bernoulli_associated(t, n)), n, x);
}

Polynomial bernoulli_polynomial(const Rational& t, unsigned n) {
    return difference_expansion_polynomial(difference_weights(bernoulli_associated(t, n)), n);
}

EgfSequence euler_associated(const Rational& t, const Rational& beta, unsigned order) {
    std::vector<Rational> a(order + 1);
    const Rational minus_t = -t;
    Rational falling(1);
    Rational beta_pow(1);
    for (unsigned n = 0; n <= order; ++n) {
        a[n] = falling * beta_pow;
        falling *= minus_t - Rational(static_cast<long>(n));
        beta_pow *= beta;
    }
    return EgfSequence(std::move(a));
}

AppellSeq apostol_euler_family(const Rational& t, const Rational& beta, unsigned order) {
    return from_associated(euler_associated(t, beta, order));
}

Rational apostol_euler_polynomial(const Rational& t, const Rational& beta, unsigned n, const Rational& x) {
    return difference_expansion(difference_weights(euler_associated(t, beta, n)), n, x);
}

Polynomial apostol_euler_polynomial(const Rational& t, const Rational& beta, unsigned n) {
    return difference_expansion_polynomial(difference_weights(euler_associated(t, beta, n)), n);
}

std::vector<Rational> mixed_weights(unsigned m, unsigned r, const Rational& beta, unsigned order) {
    if (m == 0 || r == 0) throw std::invalid_argument("mixed_weights needs m >= 1 and r >= 1");
    const auto s = stirling_first_table(m + order);
    const Rational m_fact(factorial(m));
    const Rational minus_r(-static_cast<long>(r));
    std::vector<Rational> v(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
        Rational acc;
        Rational beta_pow(1);
        for (unsigned j = 0; j <= k; ++j) {
            const unsigned top = m + k - j;
            acc += binom_general(minus_r, j) * beta_pow * Rational((*s)[top][m], factorial(top));
            beta_pow *= beta;
        }
        v[k] = m_fact * acc;
    }
    return v;
}

TruncatedSeries bernoulli_generating_series(const Rational& t, unsigned order) {
    // (e^z - 1)/z needs one extra term before the shift.
    const TruncatedSeries ratio = series::shift_down(series::exp_minus_one(order + 1));
    return series::pow(ratio, -t);
}

TruncatedSeries apostol_euler_generating_series(const Rational& t, const Rational& beta, unsigned order) {
    const TruncatedSeries base = series::constant(Rational(1), order) + beta * series::exp_minus_one(order);
    return series::pow(base, -t);
}

namespace {

void accumulate_compositions(const std::vector<std::vector<Rational>>& values, unsigned n,
                             std::vector<unsigned>& parts, std::size_t slot, unsigned remaining,
                             Rational& sum) {
    const std::size_t m = values.size();
    if (slot + 1 == m) {
        parts[slot] = remaining;
        Rational term(multinomial(n, parts));
        for (std::size_t i = 0; i < m && !term.is_zero(); ++i) term *= values[i][parts[i]];
        sum += term;
        return;
    }
    for (unsigned j = 0; j <= remaining; ++j) {
        parts[slot] = j;
        accumulate_compositions(values, n, parts, slot + 1, remaining - j, sum);
    }
}

}  // namespace

Rational multinomial_convolution_bruteforce(std::span<const AppellSeq> families,
                                            std::span<const Rational> points, unsigned n) {
    if (families.empty() || families.size() != points.size())
        throw std::invalid_argument("need one point per family and at least one family");
    // values[i][j] = A^(i)_j(x_i)
    std::vector<std::vector<Rational>> values(families.size());
    for (std::size_t i = 0; i < families.size(); ++i) {
        values[i].reserve(n + 1);
        for (unsigned j = 0; j <= n; ++j) values[i].push_back(evaluate(families[i], j, points[i]));
    }
    std::vector<unsigned> parts(families.size());
    Rational sum;
    accumulate_compositions(values, n, parts, 0, n, sum);
    return sum;
}

}  // namespace appell
