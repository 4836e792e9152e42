#include "appell/random.hpp"

#include <vector>

namespace appell {

long PointGenerator::uniform(long lo, long hi) {
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>((engine_() >> 33) % width);
}

Rational PointGenerator::rational() {
    const long p = uniform(-numerator_bound, numerator_bound);
    const long q = uniform(1, denominator_bound);
    return Rational(p, q);
}

Rational PointGenerator::nonzero_rational() {
    for (;;) {
        Rational r = rational();
        if (!r.is_zero()) return r;
    }
}

EgfSequence PointGenerator::sequence(unsigned order) {
    std::vector<Rational> terms(order + 1);
    terms[0] = nonzero_rational();
    for (unsigned n = 1; n <= order; ++n) terms[n] = rational();
    return EgfSequence(std::move(terms));
}

}  // namespace appell
