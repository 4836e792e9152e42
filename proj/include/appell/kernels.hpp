#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "appell/rational.hpp"

// Inner loops shared by the series, group and Stirling code. Every kernel has
// an OpenMP version (used by the library) and a serial reference kept for
// tests and the benchmark. Output entries are independent, so the parallel
// versions split on the output index and produce bit-identical results.
namespace appell::kernels {

/// Row n holds T(n, 0..n).
using IntTriangle = std::vector<std::vector<BigInt>>;

/// out_n = sum_k C(n,k) u_k v_{n-k} for n < len.
std::vector<Rational> binomial_convolution(std::span<const Rational> u, std::span<const Rational> v,
                                           std::size_t len);
std::vector<Rational> binomial_convolution_serial(std::span<const Rational> u,
                                                  std::span<const Rational> v, std::size_t len);

/// out_n = sum_k f_k g_{n-k} for n < len.
std::vector<Rational> cauchy_product(std::span<const Rational> f, std::span<const Rational> g,
                                     std::size_t len);
std::vector<Rational> cauchy_product_serial(std::span<const Rational> f, std::span<const Rational> g,
                                            std::size_t len);

/// out_n = sum_{k<=n} T(n,k) u_k for n < u.size(); T needs at least u.size() rows.
std::vector<Rational> triangular_transform(const IntTriangle& table, std::span<const Rational> u);
std::vector<Rational> triangular_transform_serial(const IntTriangle& table,
                                                  std::span<const Rational> u);

/// Below this many outputs the parallel kernels stay on one thread.
inline constexpr std::size_t parallel_threshold = 24;

}  // namespace appell::kernels
