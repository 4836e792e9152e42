#pragma once

#include "appell/egf_sequence.hpp"

// The abelian group of EGF sequences under binomial convolution. All results
// have the minimum order of their inputs.
namespace appell {

/// (u x v)_n = sum_k C(n,k) u_k v_{n-k}.
EgfSequence binomial_convolve(const EgfSequence& u, const EgfSequence& v);

/// e = (1, 0, 0, ...).
EgfSequence identity_element(unsigned order);

/// The v with u x v = e, solved term by term from v_0 = 1/u_0.
EgfSequence group_inverse(const EgfSequence& u);

/// v_n = sum_k S(n,k) u_k; the EGF becomes G(u, e^z - 1).
EgfSequence stirling_transform(const EgfSequence& u);
/// u_n = sum_k s(n,k) v_k; the EGF becomes G(v, log(1 + z)).
EgfSequence inverse_stirling_transform(const EgfSequence& v);

}  // namespace appell
