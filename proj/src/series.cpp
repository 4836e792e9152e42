#include "appell/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "appell/kernels.hpp"
#include "appell/numeric.hpp"

namespace appell {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise the truncation order");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

namespace {

unsigned common_order(const TruncatedSeries& f, const TruncatedSeries& g) {
    return std::min(f.order(), g.order());
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::vector<Rational> c(common_order(f, g) + 1);
    for (unsigned n = 0; n < c.size(); ++n) c[n] = f[n] + g[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::vector<Rational> c(common_order(f, g) + 1);
    for (unsigned n = 0; n < c.size(); ++n) c[n] = f[n] - g[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    return TruncatedSeries(kernels::cauchy_product(f.coefficients(), g.coefficients(), common_order(f, g) + 1));
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) {
    std::vector<Rational> out = f.coefficients();
    for (auto& a : out) a *= c;
    return TruncatedSeries(std::move(out));
}

namespace series {

TruncatedSeries constant(const Rational& c, unsigned order) {
    std::vector<Rational> v(order + 1);
    v[0] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries identity(unsigned order) {
    std::vector<Rational> v(order + 1);
    if (order >= 1) v[1] = 1;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries exp_linear(const Rational& x, unsigned order) {
    std::vector<Rational> v(order + 1);
    Rational term(1);
    for (unsigned n = 0; n <= order; ++n) {
        v[n] = term;
        term *= x / Rational(static_cast<long>(n + 1));
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries exp_minus_one(unsigned order) {
    std::vector<Rational> v(order + 1);
    for (unsigned n = 1; n <= order; ++n) v[n] = Rational(BigInt(1), factorial(n));
    return TruncatedSeries(std::move(v));
}

TruncatedSeries log_one_plus(unsigned order) {
    std::vector<Rational> v(order + 1);
    for (unsigned n = 1; n <= order; ++n) v[n] = Rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
    return TruncatedSeries(std::move(v));
}

TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g[0].is_zero()) throw std::domain_error("series division by a series with zero constant term");
    const unsigned order = common_order(f, g);
    std::vector<Rational> q(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        Rational acc = f[n];
        for (unsigned k = 1; k <= n; ++k)
            if (!g[k].is_zero()) acc -= g[k] * q[n - k];
        q[n] = acc / g[0];
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!g[0].is_zero()) throw std::domain_error("composition requires an inner series with zero constant term");
    const unsigned order = common_order(f, g);
    const TruncatedSeries inner = g.truncated(order);
    TruncatedSeries acc = constant(f[order], order);
    for (unsigned i = order; i-- > 0;) {
        acc = acc * inner;
        std::vector<Rational> c = acc.coefficients();
        c[0] += f[i];
        acc = TruncatedSeries(std::move(c));
    }
    return acc;
}

TruncatedSeries exp(const TruncatedSeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("series exp requires zero constant term");
    const unsigned order = f.order();
    std::vector<Rational> g(order + 1);
    g[0] = 1;
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc;
        for (unsigned k = 1; k <= n; ++k)
            if (!f[k].is_zero()) acc += Rational(static_cast<long>(k)) * f[k] * g[n - k];
        g[n] = acc / Rational(static_cast<long>(n));
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries log(const TruncatedSeries& f) {
    if (f[0] != Rational(1)) throw std::domain_error("series log requires constant term 1");
    const unsigned order = f.order();
    std::vector<Rational> g(order + 1);
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc = Rational(static_cast<long>(n)) * f[n];
        for (unsigned k = 1; k < n; ++k)
            if (!f[n - k].is_zero()) acc -= Rational(static_cast<long>(k)) * g[k] * f[n - k];
        g[n] = acc / Rational(static_cast<long>(n));
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries pow(const TruncatedSeries& f, const Rational& t) {
    if (f[0] != Rational(1)) throw std::domain_error("series power requires constant term 1");
    return exp(t * log(f));
}

TruncatedSeries shift_down(const TruncatedSeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("cannot divide by z: constant term is nonzero");
    if (f.order() == 0) throw std::invalid_argument("cannot divide an order-0 series by z");
    return TruncatedSeries(std::vector<Rational>(f.coefficients().begin() + 1, f.coefficients().end()));
}

EgfSequence egf_to_sequence(const TruncatedSeries& f) {
    if (f[0].is_zero()) throw std::domain_error("sequence from series with zero constant term");
    std::vector<Rational> u(f.order() + 1);
    BigInt fact = 1;
    for (unsigned n = 0; n <= f.order(); ++n) {
        if (n > 0) fact *= n;
        u[n] = f[n] * Rational(fact);
    }
    return EgfSequence(std::move(u));
}

TruncatedSeries sequence_to_egf(const EgfSequence& u) {
    std::vector<Rational> c(u.order() + 1);
    BigInt fact = 1;
    for (unsigned n = 0; n <= u.order(); ++n) {
        if (n > 0) fact *= n;
        c[n] = u[n] / Rational(fact);
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace series

}  // namespace appell
