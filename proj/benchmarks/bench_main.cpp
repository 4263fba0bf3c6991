#include <memory>
#include <string>

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "ggt/galois.hpp"
#include "ggt/mapalg.hpp"

namespace {

using namespace ggt;

std::string name(const char* stem, std::size_t i)
{
    return stem + std::to_string(i);
}

/// The cyclic group C_n acting on F_2^n by rotating the blocks.
fixtures::Instance cyclic(std::size_t n)
{
    RawGroupoid g;
    for (std::size_t i = 0; i < n; ++i)
        g.elements.push_back(i == 0 ? "e" : name("a", i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.products.push_back({g.elements[i], g.elements[j], g.elements[(i + j) % n]});
    std::vector<std::string> blocks;
    for (std::size_t i = 0; i < n; ++i)
        blocks.push_back(name("w", i));
    RawAction a;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            a.maps[g.elements[k]].sigma[blocks[i]] = blocks[(i + k) % n];
    return fixtures::finish(g, prime_field(2), blocks, {{"e", blocks}}, a);
}

/// The pair groupoid on n objects acting on F_2^n, one block per object.
fixtures::Instance pairs(std::size_t n)
{
    auto arrow = [](std::size_t i, std::size_t j) { return name("p", i) + "_" + std::to_string(j); };
    RawGroupoid g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.elements.push_back(i == j ? name("e", i) : arrow(i, j));
    auto label = [&](std::size_t i, std::size_t j) { return i == j ? name("e", i) : arrow(i, j); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                g.products.push_back({label(i, j), label(j, k), label(i, k)});
    std::vector<std::string> blocks;
    std::map<std::string, std::vector<std::string>> ideals;
    for (std::size_t i = 0; i < n; ++i) {
        blocks.push_back(name("v", i));
        ideals[name("e", i)] = {blocks.back()};
    }
    RawAction a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                a.maps[label(i, j)].sigma[blocks[j]] = blocks[i];
    return fixtures::finish(g, prime_field(2), blocks, ideals, a);
}

void BM_InvariantsStructural(benchmark::State& state)
{
    const auto in = cyclic(static_cast<std::size_t>(state.range(0)));
    const SubgroupoidSpec g = whole(*in.groupoid);
    Limits no_cross_check;
    no_cross_check.max_elements = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(invariants(*in.action, g, no_cross_check));
}
BENCHMARK(BM_InvariantsStructural)->DenseRange(2, 12, 2);

void BM_InvariantsBruteForce(benchmark::State& state)
{
    const auto in = cyclic(static_cast<std::size_t>(state.range(0)));
    const SubgroupoidSpec g = whole(*in.groupoid);
    for (auto _ : state)
        benchmark::DoNotOptimize(invariants_brute_force(*in.action, g));
}
BENCHMARK(BM_InvariantsBruteForce)->DenseRange(2, 12, 2);

void BM_WideSubgroupoids(benchmark::State& state)
{
    const auto in = pairs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_wide_subgroupoids(*in.groupoid));
}
BENCHMARK(BM_WideSubgroupoids)->DenseRange(2, 4);

void BM_ComputeAXRegular(benchmark::State& state)
{
    const auto in = cyclic(static_cast<std::size_t>(state.range(0)));
    const auto x = std::make_shared<const GSet>(regular_gset(in.groupoid));
    const MapAlgebra m = build_mapalg(x, in.action);
    Limits no_cross_check;
    no_cross_check.max_elements = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_AX(m, no_cross_check));
}
BENCHMARK(BM_ComputeAXRegular)->DenseRange(2, 6);

void BM_GaloisCoordinates(benchmark::State& state)
{
    const auto in = cyclic(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_galois_coordinates(*in.action));
}
BENCHMARK(BM_GaloisCoordinates)->DenseRange(2, 8, 2);

void BM_SkewRing(benchmark::State& state)
{
    const auto in = pairs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_skew_ring(*in.action));
}
BENCHMARK(BM_SkewRing)->DenseRange(2, 4);

void BM_CorrespondenceFixtures(benchmark::State& state)
{
    const auto in = state.range(0) == 0 ? fixtures::fix1() : fixtures::fix_c2();
    for (auto _ : state)
        benchmark::DoNotOptimize(correspondence(in.action));
}
BENCHMARK(BM_CorrespondenceFixtures)->Arg(0)->Arg(1);

void BM_SeparabilityIdempotent(benchmark::State& state)
{
    const auto in = cyclic(static_cast<std::size_t>(state.range(0)));
    IdealRef all;
    for (std::size_t b = 0; b < in.ring->size(); ++b)
        all.support.push_back(b);
    const Subalgebra r = span_of(in.ring, prime_basis(*in.ring, all));
    const Subalgebra k = invariants(*in.action, whole(*in.groupoid));
    for (auto _ : state)
        benchmark::DoNotOptimize(separability_idempotent(r, k));
}
BENCHMARK(BM_SeparabilityIdempotent)->DenseRange(2, 6, 2);

} // namespace

BENCHMARK_MAIN();
