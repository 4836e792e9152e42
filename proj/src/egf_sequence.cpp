#include "appell/egf_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace appell {

EgfSequence::EgfSequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("EgfSequence needs at least one term");
    if (terms_.front().is_zero()) throw std::invalid_argument("EgfSequence requires u_0 != 0");
}

EgfSequence EgfSequence::truncated(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a sequence prefix");
    return EgfSequence(std::vector<Rational>(terms_.begin(), terms_.begin() + order + 1));
}

bool operator==(const EgfSequence& a, const EgfSequence& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    return std::equal(a.terms_.begin(), a.terms_.begin() + static_cast<std::ptrdiff_t>(n), b.terms_.begin());
}

}  // namespace appell
