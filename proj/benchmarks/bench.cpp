#include <benchmark/benchmark.h>

#include "sdc/bincode.hpp"
#include "sdc/construction.hpp"
#include "sdc/graymap.hpp"
#include "sdc/search.hpp"
#include "sdc/transforms.hpp"

namespace {

sdc::BinaryCode random_code(std::uint64_t seed, int n, int k) {
    sdc::SplitMix64 rng(seed);
    std::vector<sdc::Word128> rows;
    while (static_cast<int>(rows.size()) < k) {
        sdc::Word128 w;
        for (int j = 0; j < n; ++j)
            if (rng.next() & 1) w.flip(j);
        rows.push_back(w);
        if (sdc::BinaryCode::from_rows(rows, n).dimension() != static_cast<int>(rows.size())) rows.pop_back();
    }
    return sdc::BinaryCode::from_rows(rows, n);
}

void BM_WeightDistribution(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto c = random_code(1, 68, k);
    for (auto _ : state) benchmark::DoNotOptimize(c.weight_distribution(1));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << k));
}
BENCHMARK(BM_WeightDistribution)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_MinDistanceEarlyExit(benchmark::State& state) {
    const auto c = random_code(2, 68, 20);
    for (auto _ : state) benchmark::DoNotOptimize(c.has_word_below(12, 1));
}
BENCHMARK(BM_MinDistanceEarlyExit)->Unit(benchmark::kMillisecond);

void BM_SigmaBuild(benchmark::State& state) {
    const auto g = sdc::make_group("C17");
    sdc::SplitMix64 rng(3);
    std::vector<sdc::ringbits> v1(17), v2(17), ra(17);
    for (auto* w : {&v1, &v2, &ra})
        for (auto& s : *w) s = static_cast<sdc::ringbits>(rng.next() & 1);
    const auto spec = sdc::make_spec(sdc::RingId::F2, g, sdc::natural_listing(17), v1, v2, ra);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sdc::check_theorem2(spec));
        benchmark::DoNotOptimize(sdc::build(spec));
    }
}
BENCHMARK(BM_SigmaBuild);

void BM_GrayImage(benchmark::State& state) {
    const auto g = sdc::make_group("C8");
    sdc::SplitMix64 rng(4);
    std::vector<sdc::ringbits> v1(8), v2(8), ra(8);
    for (auto* w : {&v1, &v2, &ra})
        for (auto& s : *w) s = static_cast<sdc::ringbits>(rng.next() & 3);
    const auto spec = sdc::make_spec(sdc::RingId::F2uF2, g, sdc::natural_listing(8), v1, v2, ra);
    const auto gen = sdc::build(spec);
    const sdc::RingCode stage{sdc::RingId::F2uF2, gen.length(), gen.rows()};
    for (auto _ : state) benchmark::DoNotOptimize(stage.binary_image());
}
BENCHMARK(BM_GrayImage);

}  // namespace

BENCHMARK_MAIN();
