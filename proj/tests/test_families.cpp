#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "appell/families.hpp"
#include "appell/numeric.hpp"
#include "appell/random.hpp"
#include "appell/seqgroup.hpp"
#include "oracles.hpp"

using namespace appell;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

AppellSeq classical_bernoulli(unsigned order) { return AppellSeq(EgfSequence(oracle::bernoulli_numbers(order))); }

}  // namespace

TEST_CASE("Bernoulli associated sequence") {
    CHECK(bernoulli_associated(q(0), 8) == identity_element(8));
    CHECK(bernoulli_associated(q(1), 4)[2] == q(2, 3));
    CHECK(bernoulli_associated(q(2), 4)[1] == q(-1));
    CHECK(bernoulli_associated(q(2), 12) == bernoulli_order2_associated(12));

    const auto h = bernoulli_order2_associated(3);
    CHECK(h[0] == q(1));
    CHECK(h[1] == q(-1));
    CHECK(h[2] == q(11, 6));
}

TEST_CASE("Daehee numbers") {
    for (unsigned m = 1; m <= 4; ++m) CHECK(daehee_number(m, 0) == q(1));
    for (unsigned n = 0; n <= 10; ++n)
        CHECK(daehee_number(1, n) == Rational(factorial(n)) * Rational(n % 2 ? -1 : 1, static_cast<long>(n + 1)));
    CHECK(daehee_number(2, 1) == q(-1));
    CHECK_THROWS_AS(daehee_number(0, 3), std::invalid_argument);
    for (unsigned m = 1; m <= 4; ++m) {
        const auto b = bernoulli_associated(Rational(static_cast<long>(m)), 10);
        for (unsigned n = 0; n <= 10; ++n) CHECK(daehee_number(m, n) == b[n]);
    }
}

TEST_CASE("Bernoulli polynomials of rational order") {
    CHECK(bernoulli_polynomial(q(1), 1, q(0)) == q(-1, 2));
    CHECK(bernoulli_polynomial(q(1), 2) == Polynomial(std::vector<Rational>{q(1, 6), q(-1), q(1)}));
    CHECK(bernoulli_polynomial(q(0), 3) == Polynomial::monomial(3));
    for (unsigned n = 0; n <= 12; ++n) CHECK(bernoulli_polynomial(q(1), n) == oracle::bernoulli_polynomial(n));

    const auto pts = oracle::sample_points(6);
    for (const Rational t : {q(1), q(2), q(3), q(1, 2), q(-1), q(5, 3)}) {
        const TruncatedSeries g = bernoulli_generating_series(t, 20);
        const AppellSeq fam = bernoulli_family(t, 20);
        CHECK(series::sequence_to_egf(fam.values_at_zero()) == g);
        for (unsigned n = 0; n <= 20; n += 4)
            for (const auto& x : pts) CHECK(bernoulli_polynomial(t, n, x) == oracle::series_value(g, n, x));
    }
}

TEST_CASE("power-sequence bridge") {
    const auto neg = MomentSequence::negated(MomentSequence::uniform_times_exponential(10));
    for (const Rational t : {q(1), q(2), q(1, 2), q(-1), q(5, 3)})
        CHECK(bernoulli_associated(t, 10) == real_power_sequence(neg, t));
}

TEST_CASE("Apostol-Euler polynomials") {
    CHECK(euler_associated(q(3, 4), q(2), 0)[0] == q(1));
    CHECK(euler_associated(q(1), q(1, 2), 4)[2] == q(1, 2));
    const auto a = euler_associated(q(1), q(1, 2), 10);
    for (unsigned k = 0; k <= 10; ++k) CHECK(a[k] / Rational(factorial(k)) == pow(q(-1, 2), k));

    CHECK(apostol_euler_polynomial(q(1), q(1, 2), 1) == Polynomial(std::vector<Rational>{q(-1, 2), q(1)}));
    CHECK(apostol_euler_polynomial(q(1), q(1, 2), 1, q(0)) == q(-1, 2));
    CHECK(apostol_euler_polynomial(q(0), q(2, 7), 5) == Polynomial::monomial(5));

    const auto classical = oracle::euler_polynomials(12);
    for (unsigned n = 0; n <= 12; ++n) CHECK(apostol_euler_polynomial(q(1), q(1, 2), n) == classical[n]);

    const auto pts = oracle::sample_points(5);
    for (const Rational beta : {q(1, 2), q(1, 3), q(1), q(-2), q(5, 2)})
        for (const Rational t : {q(1), q(2), q(1, 2)}) {
            const TruncatedSeries g = apostol_euler_generating_series(t, beta, 20);
            CHECK(series::sequence_to_egf(apostol_euler_family(t, beta, 20).values_at_zero()) == g);
            for (unsigned n = 0; n <= 20; n += 5)
                for (const auto& x : pts) CHECK(apostol_euler_polynomial(t, beta, n, x) == oracle::series_value(g, n, x));
        }
}

TEST_CASE("mixed weights") {
    const auto v = mixed_weights(1, 1, q(1, 2), 12);
    CHECK(v[0] == q(1));
    CHECK(v[1] == q(-1));
    CHECK_THROWS_AS(mixed_weights(0, 1, q(1, 2), 3), std::invalid_argument);
    CHECK_THROWS_AS(mixed_weights(1, 0, q(1, 2), 3), std::invalid_argument);

    for (const auto [m, r] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 2u}, {3u, 2u}})
        for (const Rational beta : {q(1, 2), q(1, 3), q(1)}) {
            const auto w = mixed_weights(m, r, beta, 12);
            const EgfSequence conv = binomial_convolve(euler_associated(Rational(static_cast<long>(r)), beta, 12),
                                                       bernoulli_associated(Rational(static_cast<long>(m)), 12));
            for (unsigned k = 0; k <= 12; ++k) CHECK(conv[k] / Rational(factorial(k)) == w[k]);
        }
}

TEST_CASE("brute-force multinomial convolution") {
    const AppellSeq b = classical_bernoulli(8);
    PointGenerator gen(13);
    const Rational x1 = gen.rational(), x2 = gen.rational();
    for (unsigned n = 0; n <= 8; ++n) {
        const std::vector<AppellSeq> one{b};
        const std::vector<Rational> p1{x1};
        CHECK(multinomial_convolution_bruteforce(one, p1, n) == evaluate(b, n, x1));
    }
    const std::vector<AppellSeq> two{b, b};
    const std::vector<Rational> p2{x1, x2};
    CHECK(multinomial_convolution_bruteforce(two, p2, 1) == x1 + x2 - q(1));

    const AppellSeq e = apostol_euler_family(q(1), q(1, 3), 4);
    const std::vector<AppellSeq> ee{e, e};
    CHECK(multinomial_convolution_bruteforce(ee, p2, 0) == q(1));

    const std::vector<AppellSeq> none;
    const std::vector<Rational> no_points;
    CHECK_THROWS_AS(multinomial_convolution_bruteforce(none, no_points, 2), std::invalid_argument);
    const std::vector<Rational> p1{x1};
    CHECK_THROWS_AS(multinomial_convolution_bruteforce(two, p1, 2), std::invalid_argument);
}

TEST_CASE("convolution at the origin") {
    // All points zero: sum_k s(m+k,m) S(n,k) / C(m+k,m).
    const AppellSeq b = classical_bernoulli(10);
    for (unsigned m = 1; m <= 3; ++m) {
        const std::vector<AppellSeq> fam(m, b);
        const std::vector<Rational> zeros(m);
        for (unsigned n = 0; n <= 10; ++n) {
            Rational rhs;
            for (unsigned k = 0; k <= n; ++k)
                rhs += Rational(BigInt(stirling_first(m + k, m) * stirling_second(n, k))) / Rational(binomial(m + k, m));
            CHECK(multinomial_convolution_bruteforce(fam, zeros, n) == rhs);
        }
    }
}
