#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cncode/boolean_function.hpp"
#include "cncode/constructions.hpp"
#include "cncode/metric.hpp"
#include "cncode/word.hpp"

using cncode::BooleanFunction;
using cncode::Code;
using cncode::Word;

namespace {

Code random_code(std::size_t n, std::size_t K, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word> words;
    std::vector<std::string> seen;
    while (words.size() < K) {
        std::string s(n, '0');
        for (auto& c : s) c = (rng() & 1) ? '1' : '0';
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
        seen.push_back(s);
        words.push_back(Word::from_string(s));
    }
    return Code(std::move(words));
}

void BM_PairScan(benchmark::State& state) {
    Code code = random_code(std::size_t(state.range(0)), std::size_t(state.range(1)), 0xbe7c);
    for (auto _ : state) {
        auto prof = cncode::profile(code);
        benchmark::DoNotOptimize(prof);
    }
    state.SetItemsProcessed(state.iterations() * state.range(1) * (state.range(1) - 1));
}

void BM_Walsh(benchmark::State& state) {
    int m = int(state.range(0));
    std::mt19937_64 rng(0x5eedbe);
    std::vector<std::uint8_t> tab(std::size_t{1} << m);
    for (auto& v : tab) v = std::uint8_t(rng() & 1);
    BooleanFunction f(m, tab);
    for (auto _ : state) {
        auto spec = cncode::walsh(f);
        benchmark::DoNotOptimize(spec);
    }
    state.SetItemsProcessed(state.iterations() << m);
}

void BM_ConstructionC(benchmark::State& state) {
    cncode::ConstructionRequest req;
    req.id = "construction-c";
    req.m = int(state.range(0));
    for (auto _ : state) {
        auto built = cncode::build_construction(req);
        benchmark::DoNotOptimize(built);
    }
}

void BM_MinHamming(benchmark::State& state) {
    Code code = random_code(64, std::size_t(state.range(0)), 0xd157);
    for (auto _ : state) {
        auto d = cncode::min_hamming(code);
        benchmark::DoNotOptimize(d);
    }
}

} // namespace

BENCHMARK(BM_PairScan)->Args({64, 256})->Args({64, 1024})->Args({256, 512});
BENCHMARK(BM_Walsh)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_ConstructionC)->Arg(4)->Arg(6);
BENCHMARK(BM_MinHamming)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
