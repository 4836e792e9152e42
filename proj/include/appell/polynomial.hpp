#pragma once

#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients at all.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(unsigned n, const Rational& c = Rational(1));

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Degree; 0 for constants including the zero polynomial.
    unsigned degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(unsigned i) const;

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    /// p(x + h).
    Polynomial shifted(const Rational& h) const;
    /// k-fold forward difference p(x+1) - p(x).
    Polynomial forward_difference(unsigned k = 1) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

}  // namespace appell
