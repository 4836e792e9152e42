#include "appell/stirling.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "appell/numeric.hpp"

namespace appell {

namespace {

using kernels::IntTriangle;
using RowRule = std::function<BigInt(const std::vector<BigInt>& prev, unsigned n, unsigned k)>;

class TriangleCache {
public:
    explicit TriangleCache(RowRule rule) : rule_(std::move(rule)) {}

    std::shared_ptr<const IntTriangle> get(unsigned n_max) {
        std::lock_guard lock(mutex_);
        if (!table_ || table_->size() <= n_max) {
            auto grown = table_ ? std::make_shared<IntTriangle>(*table_) : std::make_shared<IntTriangle>();
            if (grown->empty()) grown->push_back({BigInt(1)});
            // Grow geometrically so repeated small requests stay cheap.
            const std::size_t target = std::max<std::size_t>(n_max + 1, grown->size() * 2);
            while (grown->size() < target) {
                const auto n = static_cast<unsigned>(grown->size());
                const auto& prev = grown->back();
                std::vector<BigInt> row(n + 1);
                for (unsigned k = 0; k <= n; ++k) row[k] = rule_(prev, n, k);
                grown->push_back(std::move(row));
            }
            table_ = std::move(grown);
        }
        return table_;
    }

private:
    RowRule rule_;
    std::mutex mutex_;
    std::shared_ptr<const IntTriangle> table_;
};

BigInt at(const std::vector<BigInt>& row, unsigned k) { return k < row.size() ? row[k] : BigInt(0); }

TriangleCache& first_cache() {
    static TriangleCache cache([](const std::vector<BigInt>& prev, unsigned n, unsigned k) {
        BigInt v = k > 0 ? at(prev, k - 1) : BigInt(0);
        v -= BigInt(n - 1) * at(prev, k);
        return v;
    });
    return cache;
}

TriangleCache& second_cache() {
    static TriangleCache cache([](const std::vector<BigInt>& prev, unsigned, unsigned k) {
        BigInt v = k > 0 ? at(prev, k - 1) : BigInt(0);
        v += BigInt(k) * at(prev, k);
        return v;
    });
    return cache;
}

void require_k_le_n(unsigned n, unsigned k, const char* what) {
    if (k > n) throw std::invalid_argument(std::string(what) + ": requires k <= n");
}

}  // namespace

std::shared_ptr<const IntTriangle> stirling_first_table(unsigned n_max) { return first_cache().get(n_max); }
std::shared_ptr<const IntTriangle> stirling_second_table(unsigned n_max) { return second_cache().get(n_max); }

BigInt stirling_first(unsigned n, unsigned k) {
    require_k_le_n(n, k, "stirling_first");
    return (*stirling_first_table(n))[n][k];
}

BigInt stirling_second(unsigned n, unsigned k) {
    require_k_le_n(n, k, "stirling_second");
    return (*stirling_second_table(n))[n][k];
}

Rational forward_difference_power(unsigned n, unsigned k, const Rational& x) {
    Rational acc;
    for (unsigned j = 0; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * pow(x + Rational(static_cast<long>(j)), n);
        if ((k - j) % 2 == 1) acc -= term;
        else acc += term;
    }
    return acc;
}

Polynomial forward_difference_power_polynomial(unsigned n, unsigned k) {
    return Polynomial::monomial(n).forward_difference(k);
}

Rational generalized_stirling(unsigned n, unsigned k, const Rational& x) {
    require_k_le_n(n, k, "generalized_stirling");
    return forward_difference_power(n, k, x) / Rational(factorial(k));
}

MomentSequence::MomentSequence(std::vector<Rational> moments, std::string label)
    : moments_(std::move(moments)), label_(std::move(label)) {
    if (moments_.empty() || moments_[0] != Rational(1))
        throw std::invalid_argument("moment sequence must start with m_0 = 1");
}

MomentSequence MomentSequence::from_moments(std::vector<Rational> moments, std::string label) {
    return MomentSequence(std::move(moments), std::move(label));
}

MomentSequence MomentSequence::point_mass(const Rational& c, unsigned order) {
    std::vector<Rational> m(order + 1);
    m[0] = 1;
    for (unsigned n = 1; n <= order; ++n) m[n] = m[n - 1] * c;
    return MomentSequence(std::move(m), "point-mass(" + c.to_string() + ")");
}

MomentSequence MomentSequence::uniform01(unsigned order) {
    std::vector<Rational> m(order + 1);
    for (unsigned n = 0; n <= order; ++n) m[n] = Rational(1, static_cast<long>(n + 1));
    return MomentSequence(std::move(m), "uniform01");
}

MomentSequence MomentSequence::exponential1(unsigned order) {
    std::vector<Rational> m(order + 1);
    for (unsigned n = 0; n <= order; ++n) m[n] = Rational(factorial(n));
    return MomentSequence(std::move(m), "exponential1");
}

MomentSequence MomentSequence::uniform_times_exponential(unsigned order) {
    std::vector<Rational> m(order + 1);
    for (unsigned n = 0; n <= order; ++n) m[n] = Rational(factorial(n), BigInt(n + 1));
    return MomentSequence(std::move(m), "uniform-times-exponential");
}

MomentSequence MomentSequence::negated(const MomentSequence& y) {
    std::vector<Rational> m = y.moments_;
    for (std::size_t n = 1; n < m.size(); n += 2) m[n] = -m[n];
    return MomentSequence(std::move(m), "negated(" + y.label_ + ")");
}

MomentSequence MomentSequence::finite_support(const std::vector<std::pair<Rational, Rational>>& atoms,
                                              unsigned order) {
    Rational total;
    for (const auto& [value, p] : atoms) {
        if (p.sign() < 0) throw std::invalid_argument("negative probability in finite_support");
        total += p;
    }
    if (total != Rational(1)) throw std::invalid_argument("finite_support probabilities must sum to 1");
    std::vector<Rational> m(order + 1);
    for (const auto& [value, p] : atoms) {
        Rational power = p;
        for (unsigned n = 0; n <= order; ++n) {
            m[n] += power;
            power *= value;
        }
    }
    return MomentSequence(std::move(m), "finite-support");
}

MomentSequence moments_of_iid_sum(const MomentSequence& m, unsigned k) {
    const std::size_t len = m.order() + 1;
    std::vector<Rational> acc(len);
    acc[0] = 1;
    for (unsigned i = 0; i < k; ++i) acc = kernels::binomial_convolution(acc, m.moments(), len);
    return MomentSequence::from_moments(std::move(acc), "iid-sum(" + m.label() + ", " + std::to_string(k) + ")");
}

Rational stirling_second_via_moments(unsigned n, unsigned k) {
    require_k_le_n(n, k, "stirling_second_via_moments");
    const MomentSequence sum = moments_of_iid_sum(MomentSequence::uniform01(n - k), k);
    return Rational(binomial(n, k)) * sum[n - k];
}

Rational stirling_first_via_moments(unsigned n, unsigned k) {
    require_k_le_n(n, k, "stirling_first_via_moments");
    const MomentSequence sum = moments_of_iid_sum(MomentSequence::uniform_times_exponential(n - k), k);
    Rational v = Rational(binomial(n, k)) * sum[n - k];
    return (n - k) % 2 == 1 ? -v : v;
}

}  // namespace appell
