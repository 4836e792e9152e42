#pragma once

#include <vector>

#include "appell/egf_sequence.hpp"
#include "appell/rational.hpp"

namespace appell {

/// Prefix c_0..c_N of a formal power series sum c_n z^n, exact up to z^N.
///
/// Binary operations return a series whose order is the minimum of the
/// operands' orders: nothing beyond what was actually computed is claimed.
class TruncatedSeries {
public:
    static constexpr unsigned default_order = 32;

    /// The zero series of the given order.
    explicit TruncatedSeries(unsigned order = default_order) : coeffs_(order + 1) {}
    /// Throws std::invalid_argument on an empty coefficient list.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational& operator[](unsigned n) const { return coeffs_[n]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    TruncatedSeries truncated(unsigned order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f);

namespace series {

TruncatedSeries constant(const Rational& c, unsigned order = TruncatedSeries::default_order);
/// The series z.
TruncatedSeries identity(unsigned order = TruncatedSeries::default_order);
/// e^{xz}.
TruncatedSeries exp_linear(const Rational& x, unsigned order = TruncatedSeries::default_order);
/// e^z - 1.
TruncatedSeries exp_minus_one(unsigned order = TruncatedSeries::default_order);
/// log(1 + z).
TruncatedSeries log_one_plus(unsigned order = TruncatedSeries::default_order);

/// f / g; g_0 must be nonzero (std::domain_error otherwise).
TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(g(z)) by Horner's rule; g_0 must be zero (std::domain_error otherwise).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// exp(f) with f_0 = 0, from g' = f' g.
TruncatedSeries exp(const TruncatedSeries& f);
/// log(f) with f_0 = 1, from f g' = f'.
TruncatedSeries log(const TruncatedSeries& f);
/// f^t = exp(t log f) with f_0 = 1.
TruncatedSeries pow(const TruncatedSeries& f, const Rational& t);

/// f / z for a series with f_0 = 0; the order drops by one.
TruncatedSeries shift_down(const TruncatedSeries& f);

/// u_n = n! c_n; c_0 must be nonzero.
EgfSequence egf_to_sequence(const TruncatedSeries& f);
/// c_n = u_n / n!.
TruncatedSeries sequence_to_egf(const EgfSequence& u);

}  // namespace series

}  // namespace appell
