#include <benchmark/benchmark.h>

#include <secring/cover.hpp>
#include <secring/graded.hpp>
#include <secring/scenarios.hpp>
#include <secring/sections.hpp>

namespace {

using namespace secring;

void BM_HilbertWindow(benchmark::State& state) {
    SectionRing a = one_third_three_points_ring();
    for (auto _ : state) {
        BigInt total = 0;
        for (std::int64_t n = 0; n <= state.range(0); ++n)
            total += hilbert(a, n);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_HilbertWindow)->Arg(64)->Arg(512);

void BM_CanonicalOrder(benchmark::State& state) {
    SectionRing b = one_half_even_hypersurface_ring(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto ord = canonical_order(b, 60);
        benchmark::DoNotOptimize(ord.order);
    }
}
BENCHMARK(BM_CanonicalOrder)->Arg(4)->Arg(6);

void BM_CoverDepth(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    SectionRing a = one_third_three_points_ring();
    SectionRing b = d == 3 ? one_half_four_points_ring() : one_half_even_hypersurface_ring(d);
    for (auto _ : state) {
        GradedObject cover_product = segre(export_graded_object(canonical_cover(a, 60)),
                                           export_graded_object(canonical_cover(b, 60)));
        benchmark::DoNotOptimize(depth(cover_product));
    }
}
BENCHMARK(BM_CoverDepth)->Arg(3)->Arg(6);

void BM_GeneratorCounts(benchmark::State& state) {
    SectionRing b = one_half_four_points_ring();
    for (auto _ : state) {
        auto counts = minimal_generator_counts(b, state.range(0));
        benchmark::DoNotOptimize(counts.size());
    }
}
BENCHMARK(BM_GeneratorCounts)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
