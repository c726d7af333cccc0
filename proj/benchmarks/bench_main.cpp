#include <binowords/complexity.hpp>
#include <binowords/detail/signature_kernel.hpp>
#include <binowords/factor_index.hpp>
#include <binowords/generators.hpp>

#include <benchmark/benchmark.h>

using namespace binowords;

namespace {

// Sliding a length-64 window across the Thue-Morse word with the counting kernel.
template <class T>
void BM_KernelSlide(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const std::size_t n = 64;
    const auto letters = thue_morse_word().prefix_letters(4096);
    detail::SignatureKernel kernel(2, k);
    std::vector<T> cnt(kernel.size());
    for (auto _ : state) {
        kernel.reset(cnt.data());
        for (std::size_t i = 0; i < n; ++i) kernel.append(cnt.data(), letters[i]);
        for (std::size_t i = n; i < letters.size(); ++i) {
            kernel.remove_front(cnt.data(), letters[i - n]);
            kernel.append(cnt.data(), letters[i]);
        }
        benchmark::DoNotOptimize(cnt.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * letters.size()));
}
BENCHMARK_TEMPLATE(BM_KernelSlide, std::uint64_t)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK_TEMPLATE(BM_KernelSlide, BigInt)->Arg(2)->Arg(4)->Arg(6);

void BM_FactorIndexBuild(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto gen = fibonacci_word();
    (void)gen.prefix(len);
    for (auto _ : state) {
        FactorIndex index(gen, len);
        index.ensure(len);
        benchmark::DoNotOptimize(index.size());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * len));
}
BENCHMARK(BM_FactorIndexBuild)->Range(1 << 12, 1 << 18);

void BM_FactorComplexity(benchmark::State& state) {
    const auto n_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(factor_complexity(thue_morse_word(), n_max).values.back());
}
BENCHMARK(BM_FactorComplexity)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_BinomialComplexity(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const auto gen = image_of(Morphism::thue_morse(), 2, fibonacci_word());
    EngineOptions single;
    single.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(binomial_complexity(gen, k, 64, single).values.back());
}
BENCHMARK(BM_BinomialComplexity)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
