#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "appell/kernels.hpp"
#include "appell/polynomial.hpp"
#include "appell/rational.hpp"

namespace appell {

/// s(n, k), signed, from s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k). Rejects k > n.
BigInt stirling_first(unsigned n, unsigned k);
/// S(n, k) from S(n,k) = k S(n-1,k) + S(n-1,k-1). Rejects k > n.
BigInt stirling_second(unsigned n, unsigned k);

/// Rows 0..n_max of the Stirling triangles. The tables are memoized behind a
/// mutex and shared read-only, so the handle stays valid across threads.
std::shared_ptr<const kernels::IntTriangle> stirling_first_table(unsigned n_max);
std::shared_ptr<const kernels::IntTriangle> stirling_second_table(unsigned n_max);

/// Delta^k I_n(x) = sum_j C(k,j) (-1)^(k-j) (x+j)^n.
Rational forward_difference_power(unsigned n, unsigned k, const Rational& x);

/// Delta^k I_n as a polynomial in x.
Polynomial forward_difference_power_polynomial(unsigned n, unsigned k);

/// S_n^k(x) = Delta^k I_n(x) / k!. Rejects k > n even though the difference
/// vanishes there.
Rational generalized_stirling(unsigned n, unsigned k, const Rational& x);

/// Exact moments m_0..m_N of a formal random variable Y, with m_0 = 1.
///
/// Stands in for every random variable: all expectations used here are linear
/// in the moments. Each named constructor describes a law with a finite
/// exponential moment, so the transforms built on it are well defined
/// analytically as well as formally; from_moments makes no such claim.
class MomentSequence {
public:
    /// Throws std::invalid_argument unless moments is nonempty with m_0 = 1.
    static MomentSequence from_moments(std::vector<Rational> moments, std::string label = "moments");

    static MomentSequence point_mass(const Rational& c, unsigned order);
    /// U uniform on [0,1]: m_n = 1/(n+1).
    static MomentSequence uniform01(unsigned order);
    /// T with density e^{-t}: m_n = n!.
    static MomentSequence exponential1(unsigned order);
    /// U T with U, T independent: m_n = n!/(n+1).
    static MomentSequence uniform_times_exponential(unsigned order);
    /// -Y.
    static MomentSequence negated(const MomentSequence& m);
    /// Finite law given as (value, probability) pairs; probabilities must be
    /// nonnegative and sum to one.
    static MomentSequence finite_support(const std::vector<std::pair<Rational, Rational>>& atoms,
                                         unsigned order);

    unsigned order() const { return static_cast<unsigned>(moments_.size() - 1); }
    const Rational& operator[](unsigned n) const { return moments_[n]; }
    const std::vector<Rational>& moments() const { return moments_; }
    const std::string& label() const { return label_; }

private:
    MomentSequence(std::vector<Rational> moments, std::string label);

    std::vector<Rational> moments_;
    std::string label_;
};

/// Moments of Y_1 + ... + Y_k for independent copies of Y: the k-fold binomial
/// convolution of m with itself. k = 0 gives the point mass at 0.
MomentSequence moments_of_iid_sum(const MomentSequence& m, unsigned k);

/// C(n,k) E[S_k^(n-k)] with S_k a sum of k independent uniforms.
Rational stirling_second_via_moments(unsigned n, unsigned k);
/// (-1)^(n-k) C(n,k) E[(S*_k)^(n-k)] with S*_k a sum of k independent U T products.
Rational stirling_first_via_moments(unsigned n, unsigned k);

}  // namespace appell
