// Acceptance suite: one PASS/FAIL line per criterion, each against its time
// budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "appell/cli.hpp"
#include "appell/families.hpp"
#include "appell/numeric.hpp"
#include "appell/random.hpp"
#include "appell/seqgroup.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace appell;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

/// Collects the first failed expectation so a FAIL line can say what broke.
struct Check {
    std::string failure;
    void expect(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
    }
    bool ok() const { return failure.empty(); }
};

bool same_polynomials(const AppellSeq& a, const TruncatedSeries& g, unsigned max_n) {
    const auto pts = oracle::sample_points(max_n + 2);
    for (unsigned n = 0; n <= max_n; ++n)
        for (const auto& x : pts)
            if (evaluate(a, n, x) != oracle::series_value(g, n, x)) return false;
    return true;
}

void classical_closed_forms(Check& c) {
    const unsigned order = 12;
    std::vector<Rational> bw, ew;
    for (unsigned k = 0; k <= order; ++k) {
        bw.push_back(Rational(factorial(k)) * Rational(k % 2 ? -1 : 1, static_cast<long>(k + 1)));
        ew.push_back(Rational(factorial(k)) * pow(q(-1, 2), k));
    }
    const AppellSeq b = from_associated(EgfSequence(bw));
    const AppellSeq e = from_associated(EgfSequence(ew));
    const TruncatedSeries bg = series::pow(series::shift_down(series::exp_minus_one(order + 1)), q(-1));
    const TruncatedSeries eg = series::divide(series::constant(q(1), order),
                                              series::constant(q(1), order) + q(1, 2) * series::exp_minus_one(order));
    c.expect(same_polynomials(b, bg, order), "Bernoulli polynomials differ from z/(e^z-1) e^{xz}");
    c.expect(same_polynomials(e, eg, order), "Euler polynomials differ from 2e^{xz}/(e^z+1)");
    const auto classical = oracle::euler_polynomials(order);
    for (unsigned n = 0; n <= order; ++n) {
        c.expect(polynomial_of(b, n) == oracle::bernoulli_polynomial(n), "B_n against the recurrence");
        c.expect(polynomial_of(e, n) == classical[n], "E_n against the recurrence");
    }
}

void associated_round_trip(Check& c) {
    PointGenerator gen(5007);
    for (int i = 0; i < 200; ++i) {
        const EgfSequence u = gen.sequence(12);
        const AppellSeq a(u);
        c.expect(from_associated(associated_sequence(a)) == a, "from_associated after associated_sequence");
        c.expect(associated_sequence(from_associated(u)) == u, "associated_sequence after from_associated");
        c.expect(stirling_transform(inverse_stirling_transform(u)) == u, "S after s");
        c.expect(inverse_stirling_transform(stirling_transform(u)) == u, "s after S");
    }
}

void bernoulli_rational_order(Check& c) {
    const auto neg = MomentSequence::negated(MomentSequence::uniform_times_exponential(10));
    for (const Rational t : {q(1), q(2), q(3), q(1, 2), q(-1), q(5, 3)}) {
        const EgfSequence b = bernoulli_associated(t, 10);
        const TruncatedSeries g = bernoulli_generating_series(t, 10);
        // b is associated to B(t;x): its Stirling transform gives B_n(t;0), and
        // its EGF is (z/(e^z-1))^t with e^z - 1 replaced by z.
        c.expect(stirling_transform(b) == series::egf_to_sequence(g), "S(b(t)) against (z/(e^z-1))^t, t=" + t.to_string());
        c.expect(series::sequence_to_egf(b) == series::compose(g, series::log_one_plus(10)),
                 "G(b(t)) against (log(1+z)/z)^t, t=" + t.to_string());
        c.expect(b == real_power_sequence(neg, t), "power-sequence formula, t=" + t.to_string());
    }
}

void daehee(Check& c) {
    for (unsigned m = 1; m <= 4; ++m) {
        const EgfSequence b = bernoulli_associated(Rational(static_cast<long>(m)), 10);
        for (unsigned n = 0; n <= 10; ++n)
            c.expect(daehee_number(m, n) == b[n], "daehee(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
}

void expect_pass(Check& c, Identity id, const IdentityParams& p, unsigned max_degree, unsigned trials) {
    const IdentityReport r = verify_identity(id, p, max_degree, trials, 20240601);
    std::string what(identity_name(id));
    what += " m=" + std::to_string(p.m) + " r=" + std::to_string(p.r) + " beta=" + p.beta.to_string();
    if (r.first_failure) what += " fails at n=" + std::to_string(r.first_failure->n) + ": " + r.first_failure->relation;
    c.expect(r.passed, what);
}

void bernoulli_higher_order(Check& c) {
    for (unsigned m = 1; m <= 3; ++m) expect_pass(c, Identity::bernoulli_higher, {m, 1, q(1, 2)}, 10, 20);
    expect_pass(c, Identity::bernoulli_harmonic, {}, 12, 20);
}

void apostol_euler(Check& c) {
    for (const Rational beta : {q(1, 2), q(1, 3), q(1)}) {
        for (unsigned m = 1; m <= 3; ++m) expect_pass(c, Identity::euler_higher, {m, 1, beta}, 10, 20);
        for (const Rational t : {q(1), q(2), q(1, 2)}) {
            const TruncatedSeries g = apostol_euler_generating_series(t, beta, 10);
            c.expect(same_polynomials(apostol_euler_family(t, beta, 10), g, 10),
                     "E(t,beta;x) against its generating function, t=" + t.to_string() + " beta=" + beta.to_string());
        }
    }
}

void mixed(Check& c) {
    for (const auto [m, r] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 2u}}) {
        expect_pass(c, Identity::mixed, {m, r, q(1, 2)}, 8, 20);
        for (const Rational beta : {q(1, 2), q(1, 3), q(1)}) {
            const auto v = mixed_weights(m, r, beta, 12);
            const EgfSequence conv = binomial_convolve(euler_associated(Rational(static_cast<long>(r)), beta, 12),
                                                       bernoulli_associated(Rational(static_cast<long>(m)), 12));
            for (unsigned k = 0; k <= 12; ++k)
                c.expect(conv[k] / Rational(factorial(k)) == v[k], "v_k consistency at k=" + std::to_string(k));
        }
    }
}

void norlund(Check& c) {
    expect_pass(c, Identity::norlund_corrected, {}, 12, 20);
    const IdentityReport printed = verify_identity(Identity::norlund_paper, {}, 12, 20, 20240601);
    c.expect(!printed.passed, "printed sign unexpectedly holds");
    c.expect(printed.first_failure && printed.first_failure->n == 1, "printed sign witness is not at n=1");
}

void stirling_suite(Check& c) {
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            c.expect(stirling_second_via_moments(n, k) == Rational(stirling_second(n, k)), "S(n,k) via moments");
            c.expect(stirling_first_via_moments(n, k) == Rational(stirling_first(n, k)), "s(n,k) via moments");
        }
    PointGenerator gen(4020);
    for (int i = 0; i < 200; ++i) {
        const EgfSequence u = gen.sequence(static_cast<unsigned>(gen.uniform(0, 14)));
        c.expect(inverse_stirling_transform(stirling_transform(u)) == u, "inversion s(S(u)) = u");
        c.expect(stirling_transform(inverse_stirling_transform(u)) == u, "inversion S(s(u)) = u");
    }
    const unsigned order = 16;
    TruncatedSeries ek = series::constant(q(1), order), lk = series::constant(q(1), order);
    for (unsigned k = 0; k <= order; ++k) {
        const Rational inv_k(BigInt(1), factorial(k));
        for (unsigned n = 0; n <= order; ++n) {
            const Rational scale(factorial(n));
            const Rational want_s2 = n >= k ? Rational(stirling_second(n, k)) : Rational();
            const Rational want_s1 = n >= k ? Rational(stirling_first(n, k)) : Rational();
            c.expect((inv_k * ek)[n] * scale == want_s2, "(e^z-1)^k/k! coefficient");
            c.expect((inv_k * lk)[n] * scale == want_s1, "log^k(1+z)/k! coefficient");
        }
        ek = ek * series::exp_minus_one(order);
        lk = lk * series::log_one_plus(order);
    }
}

void transformation_laws(Check& c) {
    expect_pass(c, Identity::multiplier_laws, {}, 10, 100);
    PointGenerator gen(1011);
    for (int i = 0; i < 100; ++i) {
        const unsigned order = static_cast<unsigned>(gen.uniform(0, 10));
        const EgfSequence u = gen.sequence(order);
        const AppellSeq a = gen.appell(order);
        c.expect(forward_difference_transform(u, a, DifferenceRoute::direct) ==
                     forward_difference_transform(u, a, DifferenceRoute::convolution),
                 "direct and convolution routes of L_u disagree");
    }
}

void cli_determinism(Check& c) {
    const auto cases = golden::load(APPELL_GOLDEN_DIR);
    c.expect(!cases.empty(), "no golden invocations");
    for (const auto& gc : cases) {
        std::ostringstream out, err;
        const int code = cli::run(gc.args, out, err);
        c.expect(code == gc.exit_code, gc.name + ": exit code " + std::to_string(code));
        c.expect(out.str() == gc.expected, gc.name + ": output differs from golden file");
    }
}

struct Criterion {
    const char* title;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"classical Bernoulli and Euler closed forms", 1, classical_closed_forms},
        {"associated-sequence round trip", 5, associated_round_trip},
        {"Bernoulli associated sequence of rational order", 5, bernoulli_rational_order},
        {"Daehee numbers", 5, daehee},
        {"higher-order Bernoulli convolution identities", 30, bernoulli_higher_order},
        {"Apostol-Euler identities", 30, apostol_euler},
        {"mixed Bernoulli and Apostol-Euler identity", 30, mixed},
        {"Norlund identity, both sign variants", 5, norlund},
        {"Stirling suite", 10, stirling_suite},
        {"transformation laws", 20, transformation_laws},
        {"CLI golden files", 10, cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& cr = criteria[i];
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (check.ok() && secs > cr.budget_seconds) check.expect(false, "over the time budget");
        if (!check.ok()) ++failures;
        std::printf("%s %2zu %s (%.3fs, budget %.0fs)%s%s\n", check.ok() ? "PASS" : "FAIL", i + 1, cr.title, secs,
                    cr.budget_seconds, check.ok() ? "" : ": ", check.failure.c_str());
    }
    return failures == 0 ? 0 : 1;
}
