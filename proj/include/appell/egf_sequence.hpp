#pragma once

#include <span>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Finite prefix u_0..u_N of a sequence in the binomial convolution group:
/// the coefficients of the exponential generating function sum u_n z^n / n!.
///
/// u_0 must be nonzero. Two sequences compare equal when they agree on their
/// common prefix, so a longer prefix equals any of its truncations.
class EgfSequence {
public:
    /// Throws std::invalid_argument on an empty list or a zero leading term.
    explicit EgfSequence(std::vector<Rational> terms);

    unsigned order() const { return static_cast<unsigned>(terms_.size() - 1); }
    const Rational& operator[](unsigned n) const { return terms_[n]; }
    std::span<const Rational> terms() const { return terms_; }

    /// Prefix u_0..u_order; order must not exceed this->order().
    EgfSequence truncated(unsigned order) const;

    friend bool operator==(const EgfSequence& a, const EgfSequence& b);

private:
    std::vector<Rational> terms_;
};

}  // namespace appell
