#pragma once

#include <cstdint>
#include <random>

#include "appell/appell.hpp"
#include "appell/egf_sequence.hpp"
#include "appell/rational.hpp"

namespace appell {

/// Reproducible source of rational test points.
///
/// The engine is the 64-bit LCG x <- 6364136223846793005 x + 1442695040888963407
/// (mod 2^64) seeded with the given value. Bounded integers take the top 31
/// bits of the next state modulo the range width, so a seed produces the same
/// points on every platform. Rationals are p/q with p in [-20, 20] and q in
/// [1, 12].
class PointGenerator {
public:
    static constexpr int numerator_bound = 20;
    static constexpr int denominator_bound = 12;

    explicit PointGenerator(std::uint64_t seed) : engine_(seed) {}

    /// Raw next state, used to derive independent per-trial seeds.
    std::uint64_t next_seed() { return engine_(); }

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    Rational rational();
    Rational nonzero_rational();
    /// Random sequence of the given order with a nonzero leading term.
    EgfSequence sequence(unsigned order);
    AppellSeq appell(unsigned order) { return AppellSeq(sequence(order)); }

private:
    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0> engine_;
};

}  // namespace appell
