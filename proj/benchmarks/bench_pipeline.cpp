#include <benchmark/benchmark.h>

#include "gapbrack/gap_certify.hpp"

using namespace gapbrack;

namespace {

WeightedGraph ring_with_pendant(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        pairs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    pairs.emplace_back(0, static_cast<VertexId>(n));
    return apply_weight_scheme(Graph::from_pairs(n + 1, pairs), WeightScheme::standard());
}

PeriodicQuotient ring_quotient(std::size_t n) {
    PeriodicQuotient q;
    q.base = ring_with_pendant(n);
    q.rank = 1;
    q.index[0] = {1};
    return validate_quotient(std::move(q));
}

void BM_assemble_dml(benchmark::State& state) {
    WeightedGraph w = ring_with_pendant(static_cast<std::size_t>(state.range(0)));
    VectorPotential a;
    a.set(0, 1.3);
    for (auto _ : state) {
        HermitianMatrix h = assemble_dml(w, a);
        benchmark::DoNotOptimize(h.dimension());
    }
}

void BM_bracketing_report(benchmark::State& state) {
    WeightedGraph w = ring_with_pendant(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        BracketingReport r = bracketing_report(w, {0}, {0});
        benchmark::DoNotOptimize(r.trace_bound);
    }
}

void BM_floquet_sweep(benchmark::State& state) {
    PeriodicQuotient q = ring_quotient(8);
    const std::size_t grid = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        IntervalSet u = floquet_spectrum_sample(q, {grid}, 1e-10, 1);
        benchmark::DoNotOptimize(u.measure());
    }
}

void BM_certify(benchmark::State& state) {
    WeightedGraph w = ring_with_pendant(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        GapCertificate cert = certify_magnetic_gap(w);
        benchmark::DoNotOptimize(cert.guaranteed_gap_measure);
    }
}

} // namespace

BENCHMARK(BM_assemble_dml)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_bracketing_report)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_floquet_sweep)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_certify)->Arg(8)->Arg(16);
