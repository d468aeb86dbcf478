#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "gapbrack/hermitian.hpp"

using namespace gapbrack;

namespace {

HermitianMatrix random_hermitian(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    HermitianMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.at(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            std::complex<double> z(dist(rng), dist(rng));
            h.at(i, j) = z;
            h.at(j, i) = std::conj(z);
        }
    }
    return h;
}

void BM_hermitian_eigenvalues(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    HermitianMatrix h = random_hermitian(n, 42);
    for (auto _ : state) {
        Spectrum s = hermitian_eigenvalues(h);
        benchmark::DoNotOptimize(s.eigenvalues.data());
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}

} // namespace

BENCHMARK(BM_hermitian_eigenvalues)->RangeMultiplier(2)->Range(4, 128)->Complexity();
