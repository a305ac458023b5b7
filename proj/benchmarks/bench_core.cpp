#include <benchmark/benchmark.h>

#include "pik/catalytic.hpp"
#include "pik/qft.hpp"
#include "pik/synth.hpp"
#include "pik/termgen.hpp"

namespace {

void BM_RingMul(benchmark::State& state) {
    const pik::Precision k(static_cast<int>(state.range(0)));
    pik::Rng rng(1);
    std::vector<pik::Integer> ca, cb;
    for (long i = 0; i < k.coeff_len(); ++i) {
        ca.emplace_back(rng.range(-1000, 1000));
        cb.emplace_back(rng.range(-1000, 1000));
    }
    const pik::RingElem a(k, 3, ca), b(k, 5, cb);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMul)->Arg(2)->Arg(4)->Arg(6);

void BM_EvalQft(benchmark::State& state) {
    const pik::Precision k(static_cast<int>(state.range(0)));
    const pik::Term circuit = pik::build_qft(state.range(0), k);
    for (auto _ : state)
        benchmark::DoNotOptimize(pik::eval(circuit, k));
}
BENCHMARK(BM_EvalQft)->Arg(3)->Arg(4);

void BM_Synth8(benchmark::State& state) {
    const pik::Precision k2(2);
    pik::Rng rng(7);
    pik::TermGenOptions opts;
    opts.allow_h = false;
    const pik::ExactMatrix u = pik::eval(pik::random_term(rng, k2, 8, opts), k2);
    for (auto _ : state)
        benchmark::DoNotOptimize(pik::synth(u));
}
BENCHMARK(BM_Synth8);

void BM_Catalysis(benchmark::State& state) {
    const pik::Precision k(static_cast<int>(state.range(0)));
    pik::Rng rng(11);
    const pik::Term a = pik::random_term(rng, k, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(pik::catalysis_check(a, k));
}
BENCHMARK(BM_Catalysis)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
