// Compares the OpenMP kernels against their serial reference
// implementations: GF(2) rank elimination and the corpus verifier.
#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cliquetop/cliques.hpp"
#include "cliquetop/gf2.hpp"
#include "cliquetop/graph.hpp"
#include "cliquetop/harness.hpp"

using namespace cliquetop;

namespace {

std::vector<Bitset> random_rows(int rows, int bits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Bitset> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        Bitset r(bits);
        for (int b = 0; b < bits; ++b)
            if (rng() & 1) r.set(b);
        out.push_back(r);
    }
    return out;
}

const std::vector<Bitset>& rank_fixture() {
    static std::vector<Bitset> rows = random_rows(2500, 2500, 20260814);
    return rows;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

struct NullBuffer : std::streambuf {
    int overflow(int c) override { return c; }
};

void corpus_run(int jobs) {
    CorpusSpec spec;
    spec.max_n = 6;
    NullBuffer sink;
    std::ostream devnull(&sink);
    run_corpus(spec, all_checks(), jobs, devnull);
}

void BM_gf2_rank_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gf2_rank_serial(rank_fixture()));
}

void BM_gf2_rank_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(rank_fixture()));
}

void BM_maximal_cliques(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}

void BM_corpus_verify_serial(benchmark::State& state) {
    for (auto _ : state) corpus_run(1);
}

void BM_corpus_verify_parallel(benchmark::State& state) {
#ifdef _OPENMP
    int jobs = omp_get_max_threads();
#else
    int jobs = 1;
#endif
    for (auto _ : state) corpus_run(jobs);
}

BENCHMARK(BM_gf2_rank_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gf2_rank_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_maximal_cliques)->Arg(60)->Arg(90)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_corpus_verify_serial)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_corpus_verify_parallel)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
