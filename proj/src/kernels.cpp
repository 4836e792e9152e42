#include "appell/kernels.hpp"

#include <cassert>

namespace appell::kernels {

namespace {

Rational binomial_convolution_term(std::span<const Rational> u, std::span<const Rational> v,
                                   std::size_t n) {
    Rational acc;
    BigInt c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (!u[k].is_zero() && !v[n - k].is_zero()) acc += Rational(c) * u[k] * v[n - k];
        c *= static_cast<unsigned long>(n - k);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return acc;
}

Rational cauchy_term(std::span<const Rational> f, std::span<const Rational> g, std::size_t n) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k)
        if (!f[k].is_zero() && !g[n - k].is_zero()) acc += f[k] * g[n - k];
    return acc;
}

Rational triangular_term(const IntTriangle& table, std::span<const Rational> u, std::size_t n) {
    Rational acc;
    const auto& row = table[n];
    for (std::size_t k = 0; k <= n; ++k)
        if (row[k] != 0 && !u[k].is_zero()) acc += Rational(row[k]) * u[k];
    return acc;
}

}  // namespace

std::vector<Rational> binomial_convolution_serial(std::span<const Rational> u,
                                                  std::span<const Rational> v, std::size_t len) {
    assert(u.size() >= len && v.size() >= len);
    std::vector<Rational> out(len);
    for (std::size_t n = 0; n < len; ++n) out[n] = binomial_convolution_term(u, v, n);
    return out;
}

std::vector<Rational> binomial_convolution(std::span<const Rational> u, std::span<const Rational> v,
                                           std::size_t len) {
    assert(u.size() >= len && v.size() >= len);
    std::vector<Rational> out(len);
    const auto n_max = static_cast<long>(len);
#pragma omp parallel for schedule(dynamic) if (len >= parallel_threshold)
    for (long n = 0; n < n_max; ++n) out[n] = binomial_convolution_term(u, v, static_cast<std::size_t>(n));
    return out;
}

std::vector<Rational> cauchy_product_serial(std::span<const Rational> f, std::span<const Rational> g,
                                            std::size_t len) {
    assert(f.size() >= len && g.size() >= len);
    std::vector<Rational> out(len);
    for (std::size_t n = 0; n < len; ++n) out[n] = cauchy_term(f, g, n);
    return out;
}

std::vector<Rational> cauchy_product(std::span<const Rational> f, std::span<const Rational> g,
                                     std::size_t len) {
    assert(f.size() >= len && g.size() >= len);
    std::vector<Rational> out(len);
    const auto n_max = static_cast<long>(len);
#pragma omp parallel for schedule(dynamic) if (len >= parallel_threshold)
    for (long n = 0; n < n_max; ++n) out[n] = cauchy_term(f, g, static_cast<std::size_t>(n));
    return out;
}

std::vector<Rational> triangular_transform_serial(const IntTriangle& table,
                                                  std::span<const Rational> u) {
    assert(table.size() >= u.size());
    std::vector<Rational> out(u.size());
    for (std::size_t n = 0; n < u.size(); ++n) out[n] = triangular_term(table, u, n);
    return out;
}

std::vector<Rational> triangular_transform(const IntTriangle& table, std::span<const Rational> u) {
    assert(table.size() >= u.size());
    std::vector<Rational> out(u.size());
    const auto n_max = static_cast<long>(u.size());
#pragma omp parallel for schedule(dynamic) if (u.size() >= parallel_threshold)
    for (long n = 0; n < n_max; ++n) out[n] = triangular_term(table, u, static_cast<std::size_t>(n));
    return out;
}

}  // namespace appell::kernels
