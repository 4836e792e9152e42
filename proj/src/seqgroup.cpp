#include "appell/seqgroup.hpp"

#include <algorithm>
#include <vector>

#include "appell/kernels.hpp"
#include "appell/stirling.hpp"

namespace appell {

EgfSequence binomial_convolve(const EgfSequence& u, const EgfSequence& v) {
    const std::size_t len = std::min(u.order(), v.order()) + 1;
    return EgfSequence(kernels::binomial_convolution(u.terms(), v.terms(), len));
}

EgfSequence identity_element(unsigned order) {
    std::vector<Rational> e(order + 1);
    e[0] = 1;
    return EgfSequence(std::move(e));
}

EgfSequence group_inverse(const EgfSequence& u) {
    const unsigned order = u.order();
    const Rational inv0 = Rational(1) / u[0];
    std::vector<Rational> v(order + 1);
    v[0] = inv0;
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc;
        BigInt c = 1;  // C(n, k), starting at k = 0
        for (unsigned k = 1; k <= n; ++k) {
            c *= n - k + 1;
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
            if (!u[k].is_zero()) acc += Rational(c) * u[k] * v[n - k];
        }
        v[n] = -inv0 * acc;
    }
    return EgfSequence(std::move(v));
}

EgfSequence stirling_transform(const EgfSequence& u) {
    const auto table = stirling_second_table(u.order());
    return EgfSequence(kernels::triangular_transform(*table, u.terms()));
}

EgfSequence inverse_stirling_transform(const EgfSequence& v) {
    const auto table = stirling_first_table(v.order());
    return EgfSequence(kernels::triangular_transform(*table, v.terms()));
}

}  // namespace appell
