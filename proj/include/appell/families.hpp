#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "appell/appell.hpp"
#include "appell/egf_sequence.hpp"
#include "appell/series.hpp"

namespace appell {

// Generalized Bernoulli polynomials B(t;x), generating function
// (z/(e^z-1))^t e^{xz}, for rational order t.

/// b_n(t) = sum_k [C(t,k) C(n-t,n-k) / C(k+n,n)] s(k+n,k).
EgfSequence bernoulli_associated(const Rational& t, unsigned order);

/// Daehee number s(m+n,m) / C(m+n,n) of order m >= 1.
Rational daehee_number(unsigned m, unsigned n);

/// b_n(2) = (-1)^n n! 2 H_{n+1} / (n+2).
EgfSequence bernoulli_order2_associated(unsigned order);

/// B(t;x) through its associated sequence.
AppellSeq bernoulli_family(const Rational& t, unsigned order);

/// B_n(t;x) = sum_k (b_k(t)/k!) Delta^k I_n(x).
Rational bernoulli_polynomial(const Rational& t, unsigned n, const Rational& x);
Polynomial bernoulli_polynomial(const Rational& t, unsigned n);

// Generalized Apostol-Euler polynomials E(t,beta;x), generating function
// e^{xz} / (1 + beta(e^z - 1))^t. Every formula is polynomial in beta, so any
// rational beta is accepted.

/// a_n(t) = (-t)_n beta^n.
EgfSequence euler_associated(const Rational& t, const Rational& beta, unsigned order);

AppellSeq apostol_euler_family(const Rational& t, const Rational& beta, unsigned order);

Rational apostol_euler_polynomial(const Rational& t, const Rational& beta, unsigned n, const Rational& x);
Polynomial apostol_euler_polynomial(const Rational& t, const Rational& beta, unsigned n);

/// v_k = m! sum_j C(-r,j) beta^j s(m+k-j,m) / (m+k-j)! for k = 0..order;
/// the difference weights of B(m;.) x E(r,beta;.). Requires m, r >= 1.
std::vector<Rational> mixed_weights(unsigned m, unsigned r, const Rational& beta, unsigned order);

// Generating functions, used as the reference side of the identity checks.

/// (z / (e^z - 1))^t.
TruncatedSeries bernoulli_generating_series(const Rational& t, unsigned order);
/// (1 + beta(e^z - 1))^{-t}.
TruncatedSeries apostol_euler_generating_series(const Rational& t, const Rational& beta, unsigned order);

/// sum over j_1+...+j_m = n of n!/(j_1!...j_m!) prod A^(i)_{j_i}(x_i), by
/// enumerating every composition of n. Throws std::invalid_argument when the
/// lists differ in length or are empty.
Rational multinomial_convolution_bruteforce(std::span<const AppellSeq> families,
                                            std::span<const Rational> points, unsigned n);

// Identity verification.

enum class Identity {
    norlund_paper,
    norlund_corrected,
    bernoulli_higher,
    bernoulli_harmonic,
    euler_higher,
    mixed,
    group_laws,
    stirling_inversion,
    multiplier_laws,
};

/// Throws std::invalid_argument for an unknown name.
Identity parse_identity(std::string_view name);
std::string_view identity_name(Identity id);
std::span<const Identity> all_identities();

struct IdentityParams {
    unsigned m = 2;
    unsigned r = 1;
    Rational beta = Rational(1, 2);
};

struct Mismatch {
    unsigned n = 0;
    unsigned trial = 0;
    Rational lhs;
    Rational rhs;
    /// Which equality failed, e.g. "brute force = closed form".
    std::string relation;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct IdentityReport {
    Identity identity = Identity::group_laws;
    std::vector<std::pair<std::string, std::string>> parameters;
    unsigned max_degree = 0;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    unsigned cells_checked = 0;
    bool passed = true;
    std::optional<Mismatch> first_failure;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

enum class Execution { serial, parallel };

/// Checks an identity at degrees 0..max_degree (1..max_degree for Norlund)
/// and `trials` random point tuples drawn from `seed`. Cells run in parallel
/// by default; the report only depends on the arguments.
IdentityReport verify_identity(Identity id, const IdentityParams& params, unsigned max_degree,
                               unsigned trials, std::uint64_t seed,
                               Execution execution = Execution::parallel);

}  // namespace appell
