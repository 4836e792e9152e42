#include "appell/polynomial.hpp"

#include <algorithm>

#include "appell/numeric.hpp"

namespace appell {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(unsigned n, const Rational& c) {
    std::vector<Rational> v(n + 1);
    v[n] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

unsigned Polynomial::degree() const {
    return coeffs_.empty() ? 0u : static_cast<unsigned>(coeffs_.size() - 1);
}

Rational Polynomial::coefficient(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& h) const {
    // (x+h)^i = sum_j C(i,j) h^(i-j) x^j
    const std::size_t n = coeffs_.size();
    std::vector<Rational> out(n);
    std::vector<Rational> hpow(n);
    if (n > 0) hpow[0] = 1;
    for (std::size_t i = 1; i < n; ++i) hpow[i] = hpow[i - 1] * h;
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j <= i; ++j)
            out[j] += coeffs_[i] * Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j))) * hpow[i - j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::forward_difference(unsigned k) const {
    Polynomial p = *this;
    for (unsigned i = 0; i < k && !p.is_zero(); ++i) p = p.shifted(Rational(1)) - p;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

}  // namespace appell
