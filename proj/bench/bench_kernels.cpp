// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "appell/families.hpp"
#include "appell/kernels.hpp"
#include "appell/random.hpp"
#include "appell/stirling.hpp"

using namespace appell;

namespace {

std::vector<Rational> random_terms(std::size_t len, std::uint64_t seed) {
    PointGenerator gen(seed);
    std::vector<Rational> v(len);
    for (auto& r : v) r = gen.rational();
    return v;
}

template <auto Kernel>
void convolution(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto u = random_terms(len, 1), v = random_terms(len, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, v, len));
    state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void triangular(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto u = random_terms(len, 3);
    const auto table = stirling_second_table(static_cast<unsigned>(len));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(*table, u));
    state.SetComplexityN(state.range(0));
}

template <Execution Mode>
void verify(benchmark::State& state) {
    const auto degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_identity(Identity::bernoulli_higher, {3, 1, Rational(1, 2)}, degree, 8, 1, Mode));
}

}  // namespace

BENCHMARK(convolution<kernels::binomial_convolution_serial>)->Name("binomial_convolution/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(convolution<kernels::binomial_convolution>)->Name("binomial_convolution/omp")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(convolution<kernels::cauchy_product_serial>)->Name("cauchy_product/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(convolution<kernels::cauchy_product>)->Name("cauchy_product/omp")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(triangular<kernels::triangular_transform_serial>)->Name("stirling_transform/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(triangular<kernels::triangular_transform>)->Name("stirling_transform/omp")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(verify<Execution::serial>)->Name("verify_bernoulli_higher/serial")->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(verify<Execution::parallel>)->Name("verify_bernoulli_higher/omp")->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
