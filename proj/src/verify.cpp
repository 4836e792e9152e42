#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "appell/families.hpp"
#include "appell/numeric.hpp"
#include "appell/random.hpp"
#include "appell/seqgroup.hpp"
#include "appell/series.hpp"
#include "appell/stirling.hpp"

namespace appell {

namespace {

constexpr std::array<Identity, 9> kIdentities = {
    Identity::norlund_paper,   Identity::norlund_corrected, Identity::bernoulli_higher,
    Identity::bernoulli_harmonic, Identity::euler_higher,   Identity::mixed,
    Identity::group_laws,      Identity::stirling_inversion, Identity::multiplier_laws,
};

using CellResult = std::optional<Mismatch>;

CellResult compare(const Rational& lhs, const Rational& rhs, std::string_view relation, unsigned n,
                   unsigned trial) {
    if (lhs == rhs) return std::nullopt;
    return Mismatch{n, trial, lhs, rhs, std::string(relation)};
}

CellResult compare(const EgfSequence& lhs, const EgfSequence& rhs, std::string_view relation,
                   unsigned trial) {
    const unsigned order = std::min(lhs.order(), rhs.order());
    for (unsigned n = 0; n <= order; ++n)
        if (lhs[n] != rhs[n]) return Mismatch{n, trial, lhs[n], rhs[n], std::string(relation)};
    return std::nullopt;
}

CellResult compare(const AppellSeq& lhs, const AppellSeq& rhs, std::string_view relation, unsigned trial) {
    return compare(lhs.values_at_zero(), rhs.values_at_zero(), relation, trial);
}

CellResult compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs, std::string_view relation,
                   unsigned trial) {
    const unsigned order = std::min(lhs.order(), rhs.order());
    for (unsigned n = 0; n <= order; ++n)
        if (lhs[n] != rhs[n]) return Mismatch{n, trial, lhs[n], rhs[n], std::string(relation)};
    return std::nullopt;
}

/// First failing relation among a list of lazily evaluated checks.
CellResult first_of(std::initializer_list<std::function<CellResult()>> checks) {
    for (const auto& check : checks)
        if (auto r = check()) return r;
    return std::nullopt;
}

Rational sum_of(const std::vector<Rational>& xs) {
    Rational s;
    for (const auto& x : xs) s += x;
    return s;
}

// Polynomial identities: one cell per (degree, trial), each trial with its own
// point tuple.
struct PolynomialCheck {
    unsigned first_degree = 0;
    std::vector<AppellSeq> families;  // reference families for the brute-force side
    std::function<CellResult(unsigned n, unsigned trial, const std::vector<Rational>& points,
                             const Rational& lhs)>
        closed_forms;
};

// Reference families come from the generating functions, independent of the
// Stirling machinery used by the closed forms.
AppellSeq classical_bernoulli_reference(unsigned order) {
    return AppellSeq(series::egf_to_sequence(bernoulli_generating_series(Rational(1), order)));
}

AppellSeq apostol_euler_reference(const Rational& beta, unsigned order) {
    return AppellSeq(series::egf_to_sequence(apostol_euler_generating_series(Rational(1), beta, order)));
}

PolynomialCheck polynomial_check(Identity id, const IdentityParams& p, unsigned max_degree) {
    PolynomialCheck check;
    switch (id) {
    case Identity::norlund_paper:
    case Identity::norlund_corrected: {
        const bool printed = id == Identity::norlund_paper;
        const AppellSeq b = classical_bernoulli_reference(max_degree);
        check.first_degree = 1;
        check.families = {b, b};
        check.closed_forms = [b, printed](unsigned n, unsigned trial, const std::vector<Rational>& pts,
                                          const Rational& lhs) {
            const Rational s = sum_of(pts);
            const Rational first = Rational(static_cast<long>(n)) * (s - Rational(1)) * evaluate(b, n - 1, s);
            const Rational second = Rational(static_cast<long>(n) - 1) * evaluate(b, n, s);
            const Rational rhs = (printed ? -first : first) - second;
            return compare(lhs, rhs, printed ? "brute force = -n(x+y-1)B_{n-1} - (n-1)B_n"
                                             : "brute force = n(x+y-1)B_{n-1} - (n-1)B_n",
                           n, trial);
        };
        break;
    }
    case Identity::bernoulli_higher:
    case Identity::bernoulli_harmonic: {
        const unsigned m = id == Identity::bernoulli_harmonic ? 2 : p.m;
        check.families.assign(m, classical_bernoulli_reference(max_degree));
        std::vector<Rational> weights(max_degree + 1);
        const auto s = stirling_first_table(m + max_degree);
        for (unsigned k = 0; k <= max_degree; ++k) {
            if (id == Identity::bernoulli_harmonic) {
                const Rational v = Rational(2) * harmonic(k + 1) / Rational(static_cast<long>(k + 2));
                weights[k] = k % 2 == 1 ? -v : v;
            } else {
                weights[k] = Rational((*s)[m + k][m], factorial(k) * binomial(m + k, m));
            }
        }
        const auto order_t = Rational(static_cast<long>(m));
        check.closed_forms = [weights, order_t](unsigned n, unsigned trial, const std::vector<Rational>& pts,
                                                const Rational& lhs) {
            const Rational x = sum_of(pts);
            return first_of({
                [&] { return compare(lhs, bernoulli_polynomial(order_t, n, x), "brute force = B_n(m;x)", n, trial); },
                [&] { return compare(lhs, difference_expansion(weights, n, x), "brute force = difference form", n, trial); },
            });
        };
        break;
    }
    case Identity::euler_higher: {
        check.families.assign(p.m, apostol_euler_reference(p.beta, max_degree));
        std::vector<Rational> weights(max_degree + 1);
        Rational beta_pow(1);
        for (unsigned k = 0; k <= max_degree; ++k) {
            weights[k] = binom_general(Rational(-static_cast<long>(p.m)), k) * beta_pow;
            beta_pow *= p.beta;
        }
        const auto order_t = Rational(static_cast<long>(p.m));
        const Rational beta = p.beta;
        check.closed_forms = [weights, order_t, beta](unsigned n, unsigned trial, const std::vector<Rational>& pts,
                                                      const Rational& lhs) {
            const Rational x = sum_of(pts);
            return first_of({
                [&] { return compare(lhs, apostol_euler_polynomial(order_t, beta, n, x), "brute force = E_n(m,beta;x)", n, trial); },
                [&] { return compare(lhs, difference_expansion(weights, n, x), "brute force = difference form", n, trial); },
            });
        };
        break;
    }
    case Identity::mixed: {
        if (p.m == 0 || p.r == 0) throw std::invalid_argument("mixed identity needs m >= 1 and r >= 1");
        check.families.assign(p.m, classical_bernoulli_reference(max_degree));
        check.families.insert(check.families.end(), p.r, apostol_euler_reference(p.beta, max_degree));
        const std::vector<Rational> v = mixed_weights(p.m, p.r, p.beta, max_degree);
        const AppellSeq product = appell_convolve(bernoulli_family(Rational(static_cast<long>(p.m)), max_degree),
                                                  apostol_euler_family(Rational(static_cast<long>(p.r)), p.beta, max_degree));
        const EgfSequence assoc = binomial_convolve(euler_associated(Rational(static_cast<long>(p.r)), p.beta, max_degree),
                                                    bernoulli_associated(Rational(static_cast<long>(p.m)), max_degree));
        check.closed_forms = [v, product, assoc](unsigned n, unsigned trial, const std::vector<Rational>& pts,
                                                 const Rational& lhs) {
            const Rational x = sum_of(pts);
            return first_of({
                [&] { return compare(lhs, evaluate(product, n, x), "brute force = (B(m) x E(r,beta))_n(x)", n, trial); },
                [&] { return compare(lhs, difference_expansion(v, n, x), "brute force = difference form", n, trial); },
                [&] { return compare(assoc[n] / Rational(factorial(n)), v[n], "(a(r) x b(m))_n / n! = v_n", n, trial); },
            });
        };
        break;
    }
    default:
        throw std::logic_error("not a polynomial identity");
    }
    return check;
}

// Sequence identities: one cell per trial, degrees 0..max_degree at once.
CellResult sequence_cell(Identity id, unsigned order, unsigned trial, std::uint64_t trial_seed) {
    PointGenerator gen(trial_seed);
    switch (id) {
    case Identity::group_laws: {
        const EgfSequence u = gen.sequence(order), v = gen.sequence(order), w = gen.sequence(order);
        const EgfSequence e = identity_element(order);
        return first_of({
            [&] { return compare(binomial_convolve(u, v), binomial_convolve(v, u), "u x v = v x u", trial); },
            [&] { return compare(binomial_convolve(binomial_convolve(u, v), w), binomial_convolve(u, binomial_convolve(v, w)), "(u x v) x w = u x (v x w)", trial); },
            [&] { return compare(binomial_convolve(e, u), u, "e x u = u", trial); },
            [&] { return compare(binomial_convolve(u, group_inverse(u)), e, "u x u^-1 = e", trial); },
            [&] { return compare(series::sequence_to_egf(binomial_convolve(u, v)), series::sequence_to_egf(u) * series::sequence_to_egf(v), "G(u x v) = G(u) G(v)", trial); },
        });
    }
    case Identity::stirling_inversion: {
        const EgfSequence u = gen.sequence(order);
        const TruncatedSeries g = series::sequence_to_egf(u);
        return first_of({
            [&] { return compare(inverse_stirling_transform(stirling_transform(u)), u, "s(S(u)) = u", trial); },
            [&] { return compare(stirling_transform(inverse_stirling_transform(u)), u, "S(s(u)) = u", trial); },
            [&] { return compare(series::sequence_to_egf(stirling_transform(u)), series::compose(g, series::exp_minus_one(order)), "G(S(u), z) = G(u, e^z - 1)", trial); },
            [&] { return compare(series::sequence_to_egf(inverse_stirling_transform(u)), series::compose(g, series::log_one_plus(order)), "G(s(u), z) = G(u, log(1+z))", trial); },
        });
    }
    case Identity::multiplier_laws: {
        const AppellSeq a = gen.appell(order), c = gen.appell(order);
        const EgfSequence u = gen.sequence(order), v = gen.sequence(order);
        // Random two-point law for the expectation transform.
        const Rational p = Rational(gen.uniform(1, 11), 12);
        const MomentSequence y = MomentSequence::finite_support({{gen.rational(), p}, {gen.rational(), Rational(1) - p}}, order);

        const AppellSeq ac = appell_convolve(a, c);
        const auto L = [](const EgfSequence& w, const AppellSeq& x) { return forward_difference_transform(w, x); };
        const AppellSeq luv = L(u, L(v, ac));
        const EgfSequence assoc_a = associated_sequence(a);
        return first_of({
            [&] { return compare(luv, L(v, L(u, ac)), "L_u L_v (A x C) = L_v L_u (A x C)", trial); },
            [&] { return compare(luv, L(binomial_convolve(u, v), ac), "L_u L_v (A x C) = L_{u x v}(A x C)", trial); },
            [&] { return compare(luv, appell_convolve(L(u, a), L(v, c)), "L_u L_v (A x C) = L_u A x L_v C", trial); },
            [&] { return compare(luv, appell_convolve(L(v, a), L(u, c)), "L_u L_v (A x C) = L_v A x L_u C", trial); },
            [&] { return compare(L(u, ac), appell_convolve(a, L(u, c)), "L_u(A x C) = A x L_u C", trial); },
            [&] { return compare(L(u, ac), appell_convolve(L(u, a), c), "L_u(A x C) = L_u A x C", trial); },
            [&] { return compare(L(u, L(group_inverse(u), a)), a, "L_u L_{u^-1} A = A", trial); },
            [&] { return compare(forward_difference_transform(u, a, DifferenceRoute::direct), forward_difference_transform(u, a, DifferenceRoute::convolution), "L_u A direct = convolution route", trial); },
            [&] { return compare(associated_sequence(ac), binomial_convolve(assoc_a, associated_sequence(c)), "assoc(A x C) = a x c", trial); },
            [&] { return compare(associated_sequence(appell_inverse(a)), group_inverse(assoc_a), "assoc(A^-1) = a^-1", trial); },
            [&] { return compare(associated_sequence(L(u, a)), binomial_convolve(assoc_a, u), "assoc(L_u A) = a x u", trial); },
            [&] { return compare(associated_sequence(expectation_transform(y, a)), binomial_convolve(assoc_a, factorial_moments(y)), "assoc(R_Y A) = a x y", trial); },
            [&] { return compare(from_associated(assoc_a), a, "from_associated(assoc(A)) = A", trial); },
        });
    }
    default:
        throw std::logic_error("not a sequence identity");
    }
}

bool is_sequence_identity(Identity id) {
    return id == Identity::group_laws || id == Identity::stirling_inversion || id == Identity::multiplier_laws;
}

unsigned points_per_trial(Identity id, const IdentityParams& p) {
    switch (id) {
    case Identity::norlund_paper:
    case Identity::norlund_corrected:
    case Identity::bernoulli_harmonic:
        return 2;
    case Identity::mixed:
        return p.m + p.r;
    default:
        return p.m;
    }
}

std::vector<std::pair<std::string, std::string>> describe(Identity id, const IdentityParams& p) {
    const auto num = [](unsigned v) { return std::to_string(v); };
    switch (id) {
    case Identity::bernoulli_higher:
        return {{"m", num(p.m)}};
    case Identity::bernoulli_harmonic:
        return {{"m", "2"}};
    case Identity::euler_higher:
        return {{"m", num(p.m)}, {"beta", p.beta.to_string()}};
    case Identity::mixed:
        return {{"m", num(p.m)}, {"r", num(p.r)}, {"beta", p.beta.to_string()}};
    default:
        return {};
    }
}

template <typename Cell>
std::vector<CellResult> run_cells(std::size_t count, Execution execution, Cell&& cell) {
    std::vector<CellResult> results(count);
    if (execution == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) results[i] = cell(i);
        return results;
    }
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) results[i] = cell(static_cast<std::size_t>(i));
    return results;
}

}  // namespace

Identity parse_identity(std::string_view name) {
    for (Identity id : kIdentities)
        if (identity_name(id) == name) return id;
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_name(Identity id) {
    switch (id) {
    case Identity::norlund_paper: return "norlund-paper";
    case Identity::norlund_corrected: return "norlund-corrected";
    case Identity::bernoulli_higher: return "bernoulli-higher";
    case Identity::bernoulli_harmonic: return "bernoulli-harmonic";
    case Identity::euler_higher: return "euler-higher";
    case Identity::mixed: return "mixed";
    case Identity::group_laws: return "group-laws";
    case Identity::stirling_inversion: return "stirling-inversion";
    case Identity::multiplier_laws: return "multiplier-laws";
    }
    return "unknown";
}

std::span<const Identity> all_identities() { return kIdentities; }

IdentityReport verify_identity(Identity id, const IdentityParams& params, unsigned max_degree,
                               unsigned trials, std::uint64_t seed, Execution execution) {
    if (params.m == 0) throw std::invalid_argument("identity parameter m must be >= 1");

    IdentityReport report;
    report.identity = id;
    report.parameters = describe(id, params);
    report.max_degree = max_degree;
    report.trials = trials;
    report.seed = seed;

    PointGenerator master(seed);
    std::vector<std::uint64_t> trial_seeds(trials);
    for (auto& s : trial_seeds) s = master.next_seed();

    std::vector<CellResult> results;
    if (is_sequence_identity(id)) {
        // Warm the shared Stirling tables before fanning out.
        stirling_first_table(max_degree);
        stirling_second_table(max_degree);
        results = run_cells(trials, execution, [&](std::size_t i) {
            return sequence_cell(id, max_degree, static_cast<unsigned>(i), trial_seeds[i]);
        });
    } else {
        const PolynomialCheck check = polynomial_check(id, params, max_degree);
        const unsigned arity = points_per_trial(id, params);
        std::vector<std::vector<Rational>> points(trials);
        for (unsigned t = 0; t < trials; ++t) {
            PointGenerator gen(trial_seeds[t]);
            for (unsigned i = 0; i < arity; ++i) points[t].push_back(gen.rational());
        }
        stirling_first_table(2 * max_degree + params.m + params.r + 2);
        stirling_second_table(max_degree);
        const unsigned degrees = max_degree >= check.first_degree ? max_degree - check.first_degree + 1 : 0;
        results = run_cells(std::size_t{degrees} * trials, execution, [&](std::size_t cell) {
            const unsigned n = check.first_degree + static_cast<unsigned>(cell / trials);
            const auto trial = static_cast<unsigned>(cell % trials);
            const Rational lhs = multinomial_convolution_bruteforce(check.families, points[trial], n);
            return check.closed_forms(n, trial, points[trial], lhs);
        });
    }

    report.cells_checked = static_cast<unsigned>(results.size());
    for (auto& r : results) {
        if (r) {
            report.passed = false;
            report.first_failure = std::move(r);
            break;
        }
    }
    return report;
}

}  // namespace appell
