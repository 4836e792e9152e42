#pragma once

#include <span>

#include "appell/egf_sequence.hpp"
#include "appell/polynomial.hpp"
#include "appell/stirling.hpp"

namespace appell {

/// An Appell sequence A_0(x), A_1(x), ... stored through its values at zero.
///
/// A_n(x) = sum_k C(n,k) A_k(0) x^(n-k), so the prefix A_0(0)..A_N(0) fixes
/// the polynomials of degree up to N. Polynomials are built on demand.
class AppellSeq {
public:
    explicit AppellSeq(EgfSequence values_at_zero) : values_(std::move(values_at_zero)) {}

    /// I(x) = (x^n).
    static AppellSeq identity(unsigned order);

    unsigned order() const { return values_.order(); }
    const EgfSequence& values_at_zero() const { return values_; }

    friend bool operator==(const AppellSeq&, const AppellSeq&) = default;

private:
    EgfSequence values_;
};

/// A_n(x); throws std::out_of_range when n > order.
Rational evaluate(const AppellSeq& a, unsigned n, const Rational& x);
Polynomial polynomial_of(const AppellSeq& a, unsigned n);

AppellSeq appell_convolve(const AppellSeq& a, const AppellSeq& c);
AppellSeq appell_inverse(const AppellSeq& a);

enum class DifferenceRoute {
    /// Apply Delta^k to each polynomial A_n and sum.
    direct,
    /// A(0) x (L_u I)(0), where (L_u I)(0) is the Stirling transform of u.
    convolution,
};

/// (L_u A)_n(x) = sum_k (u_k / k!) Delta^k A_n(x).
AppellSeq forward_difference_transform(const EgfSequence& u, const AppellSeq& a,
                                       DifferenceRoute route = DifferenceRoute::convolution);

/// (L_u A)_n as a polynomial, computed by the direct route.
Polynomial forward_difference_transform_polynomial(const EgfSequence& u, const AppellSeq& a, unsigned n);

/// The unique a with A = L_a I: a_n = sum_k s(n,k) A_k(0).
EgfSequence associated_sequence(const AppellSeq& a);

/// A = L_a I, with A_n(0) = sum_k S(n,k) a_k.
AppellSeq from_associated(const EgfSequence& a);

/// sum_{k<=n} w_k Delta^k I_n(x). Missing weights count as zero.
Rational difference_expansion(std::span<const Rational> weights, unsigned n, const Rational& x);
Polynomial difference_expansion_polynomial(std::span<const Rational> weights, unsigned n);

/// Weights a_k / k! that turn an associated sequence into difference_expansion input.
std::vector<Rational> difference_weights(const EgfSequence& a);

/// R_Y A with (R_Y A)_n(0) = sum_k C(n,k) A_k(0) E[Y^(n-k)].
AppellSeq expectation_transform(const MomentSequence& m, const AppellSeq& a);
/// (R_Y A)_n(x) = sum_k C(n,k) A_k(0) E[(x+Y)^(n-k)].
Rational expectation_transform_value(const MomentSequence& m, const AppellSeq& a, unsigned n,
                                     const Rational& x);

/// y_n = E[(Y)_n], the associated sequence of R_Y I.
EgfSequence factorial_moments(const MomentSequence& m);

/// y_n(t) = sum_k C(t,k) C(n-t,n-k) E[W_k^n], W_k a sum of k copies of Y.
/// Its EGF is (E e^{zY})^t.
EgfSequence real_power_sequence(const MomentSequence& m, const Rational& t);

}  // namespace appell
