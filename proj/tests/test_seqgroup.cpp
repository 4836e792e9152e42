#include <doctest.h>

#include <vector>

#include "appell/random.hpp"
#include "appell/seqgroup.hpp"
#include "appell/series.hpp"

using namespace appell;

namespace {

EgfSequence seq(std::initializer_list<Rational> terms) { return EgfSequence(std::vector<Rational>(terms)); }

EgfSequence ones(unsigned order) { return EgfSequence(std::vector<Rational>(order + 1, Rational(1))); }

}  // namespace

TEST_CASE("EgfSequence invariants") {
    CHECK_THROWS_AS(EgfSequence(std::vector<Rational>{}), std::invalid_argument);
    CHECK_THROWS_AS(seq({Rational(0), Rational(1)}), std::invalid_argument);
    // Equality is on the common prefix.
    CHECK(seq({Rational(1), Rational(2), Rational(3)}) == seq({Rational(1), Rational(2)}));
    CHECK_FALSE(seq({Rational(1), Rational(2)}) == seq({Rational(1), Rational(3)}));
}

TEST_CASE("identity element") {
    CHECK(identity_element(0).order() == 0);
    CHECK(identity_element(0)[0] == Rational(1));
    const EgfSequence e = identity_element(3);
    CHECK(e.order() == 3);
    CHECK(e.terms()[1].is_zero());
    CHECK(e.terms()[3].is_zero());
    CHECK(binomial_convolve(e, e) == e);
}

TEST_CASE("binomial convolution") {
    PointGenerator gen(1);
    const EgfSequence u = gen.sequence(9);
    CHECK(binomial_convolve(identity_element(9), u) == u);

    const EgfSequence twos = binomial_convolve(ones(10), ones(10));
    for (unsigned n = 0; n <= 10; ++n) CHECK(twos[n] == pow(Rational(2), n));

    CHECK(binomial_convolve(gen.sequence(4), gen.sequence(7)).order() == 4);
}

TEST_CASE("group inverse") {
    CHECK(group_inverse(identity_element(5)) == identity_element(5));
    const EgfSequence inv = group_inverse(ones(10));
    for (unsigned n = 0; n <= 10; ++n) CHECK(inv[n] == Rational(n % 2 == 0 ? 1 : -1));

    PointGenerator gen(2);
    for (int i = 0; i < 50; ++i) {
        const EgfSequence u = gen.sequence(10);
        CHECK(group_inverse(group_inverse(u)) == u);
        // Cross-check against the series route.
        const TruncatedSeries recip = series::divide(series::constant(Rational(1), 10), series::sequence_to_egf(u));
        CHECK(group_inverse(u) == series::egf_to_sequence(recip));
    }

    const EgfSequence bern = series::egf_to_sequence(
        series::pow(series::shift_down(series::exp_minus_one(11)), Rational(-1)));
    CHECK(binomial_convolve(bern, group_inverse(bern)) == identity_element(10));
}

TEST_CASE("group laws on random sequences") {
    PointGenerator gen(42);
    for (int i = 0; i < 200; ++i) {
        const unsigned order = static_cast<unsigned>(gen.uniform(0, 12));
        const EgfSequence u = gen.sequence(order), v = gen.sequence(order), w = gen.sequence(order);
        const EgfSequence e = identity_element(order);
        CHECK(binomial_convolve(u, v) == binomial_convolve(v, u));
        CHECK(binomial_convolve(binomial_convolve(u, v), w) == binomial_convolve(u, binomial_convolve(v, w)));
        CHECK(binomial_convolve(e, u) == u);
        CHECK(binomial_convolve(u, group_inverse(u)) == e);
        CHECK(series::sequence_to_egf(binomial_convolve(u, v)) ==
              series::sequence_to_egf(u) * series::sequence_to_egf(v));
    }
}

TEST_CASE("Stirling transform pair") {
    CHECK(stirling_transform(identity_element(6)) == identity_element(6));
    CHECK(inverse_stirling_transform(identity_element(6)) == identity_element(6));

    const EgfSequence bell = stirling_transform(ones(6));
    CHECK(bell == seq({Rational(1), Rational(1), Rational(2), Rational(5), Rational(15), Rational(52), Rational(203)}));

    PointGenerator gen(77);
    for (int i = 0; i < 100; ++i) {
        const unsigned order = static_cast<unsigned>(gen.uniform(0, 14));
        const EgfSequence u = gen.sequence(order);
        CHECK(inverse_stirling_transform(stirling_transform(u)) == u);
        CHECK(stirling_transform(inverse_stirling_transform(u)) == u);
        // Substitution of e^z - 1 and log(1+z) into the generating function.
        const TruncatedSeries g = series::sequence_to_egf(u);
        CHECK(series::sequence_to_egf(stirling_transform(u)) == series::compose(g, series::exp_minus_one(order)));
        CHECK(series::sequence_to_egf(inverse_stirling_transform(u)) == series::compose(g, series::log_one_plus(order)));
    }
}
