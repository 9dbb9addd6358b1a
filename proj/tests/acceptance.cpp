// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Wall-clock ceilings are asserted where a criterion carries one.
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliquetop/cliques.hpp"
#include "cliquetop/generators.hpp"
#include "cliquetop/graph_io.hpp"
#include "cliquetop/harness.hpp"
#include "cliquetop/homology.hpp"
#include "cliquetop/isomorphism.hpp"
#include "cliquetop/reduce.hpp"

using namespace cliquetop;
using Clock = std::chrono::steady_clock;

namespace {

struct NullBuffer : std::streambuf {
    int overflow(int c) override { return c; }
};

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << (pass ? " PASS " : " FAIL ") << detail << "\n";
    if (!pass) ++failures;
}

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Backtracking dismantlability over induced-subgraph bitmasks: some order
// of dominated-vertex removals reaches a single vertex.
bool exhaustively_dismantlable(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> cn(n);
    for (int v = 0; v < n; ++v)
        for (int u : g.closed_neighborhood(v).members()) cn[v] |= std::uint64_t(1) << u;
    std::vector<signed char> memo(std::size_t(1) << n, -1);
    std::function<bool(std::uint64_t)> rec = [&](std::uint64_t mask) -> bool {
        if (std::popcount(mask) == 1) return true;
        signed char& slot = memo[mask];
        if (slot != -1) return slot == 1;
        slot = 0;
        for (int x = 0; x < n; ++x) {
            if (!(mask >> x & 1)) continue;
            std::uint64_t nx = cn[x] & mask;
            for (int y = 0; y < n; ++y) {
                if (y == x || !(mask >> y & 1)) continue;
                if ((nx & ~(cn[y] & mask)) == 0) {
                    if (rec(mask & ~(std::uint64_t(1) << x))) slot = 1;
                    break;  // one dominator justifies trying the removal
                }
            }
            if (slot == 1) return true;
        }
        return false;
    };
    return rec((std::uint64_t(1) << n) - 1);
}

void criterion_octahedron_law() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 4 && ok; ++k) {
        Graph kg = clique_graph(gen_octahedron(k)).kg;
        auto order = octahedron_order(kg);
        int expected = 1 << (k - 1);
        if (!order || *order != expected) {
            ok = false;
            detail = "K(O_" + std::to_string(k) + ") not recognized as O_" +
                     std::to_string(expected);
        }
    }
    long long ms = elapsed_ms(start);
    if (ok && ms >= 5000) {
        ok = false;
        detail = "exceeded the 5 s ceiling";
    }
    if (ok) detail = "K(O_k) = O_{2^{k-1}} for k=1..4 (" + std::to_string(ms) + " ms)";
    report(1, ok, detail);
}

void criterion_divergence_trace() {
    auto start = Clock::now();
    IterationOutcome out = iterate_clique_graph(gen_octahedron(3), 3, 300);
    long long ms = elapsed_ms(start);
    bool ok = out.sizes == std::vector<long long>{6, 8, 16, 256} &&
              out.status == IterationOutcome::Status::Completed && ms < 30000;
    std::ostringstream detail;
    detail << "octahedron iterates have sizes";
    for (long long s : out.sizes) detail << " " << s;
    detail << " (" << ms << " ms)";
    report(2, ok, detail.str());
}

CorpusSpec main_corpus_spec() {
    CorpusSpec spec;
    spec.max_n = 7;
    spec.max_degree = 4;
    return spec;
}

void criterion_main_theorem_corpus() {
    auto start = Clock::now();
    NullBuffer sink;
    std::ostream devnull(&sink);
    CorpusSummary s = run_corpus(main_corpus_spec(),
                                 {Check::K2Helly, Check::SignaturesEqual, Check::BettiTailZero,
                                  Check::WedgeReduce},
                                 0, devnull);
    long long ms = elapsed_ms(start);
    bool ok = s.total == 461 && s.failed == 0 && ms < 600000;
    report(3, ok,
           std::to_string(s.total) + " connected graphs (max degree 4, up to 7 vertices), " +
               std::to_string(s.failed) + " failures (" + std::to_string(ms) + " ms)");
}

void criterion_h_constructions() {
    auto start = Clock::now();
    NullBuffer sink;
    std::ostream devnull(&sink);
    CorpusSummary s =
        run_corpus(main_corpus_spec(), {Check::HInvariance, Check::HCliqueLevel}, 0, devnull);
    bool ok = s.total == 461 && s.failed == 0;
    report(4, ok,
           "twin contractions on " + std::to_string(s.total) + " graphs, " +
               std::to_string(s.failed) + " failures (" + std::to_string(elapsed_ms(start)) +
               " ms)");
}

void criterion_sphere_signatures() {
    HomotopySignature o3 = homotopy_signature(gen_octahedron(3));
    HomotopySignature o4 = homotopy_signature(gen_octahedron(4));
    bool ok = o3.euler == 2 && o3.betti == std::vector<long long>{1, 0, 1} && o4.euler == 0 &&
              o4.betti == std::vector<long long>{1, 0, 0, 1};
    report(5, ok,
           "signature(O_3) = " + format_signature(o3) + ", signature(O_4) = " +
               format_signature(o4));
}

void criterion_move_preservation() {
    auto start = Clock::now();
    std::mt19937 rng(20260814u);
    long long moves_checked = 0, violations = 0;
    const int graphs = 500;
    for (int i = 0; i < graphs; ++i) {
        int n = 1 + int(rng() % 9);
        std::uniform_real_distribution<double> pd(0.15, 0.85);
        std::bernoulli_distribution flip(pd(rng));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (flip(rng)) g.add_edge(u, v);
        HomotopySignature base = homotopy_signature(g);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y || !is_dominated(g, x, y)) continue;
                Move m;
                m.kind = Move::Kind::RemoveDominatedVertex;
                m.x = x;
                m.y = y;
                ++moves_checked;
                if (homotopy_signature(apply_move(g, m)) != base) ++violations;
            }
        for (auto [u, v] : removable_edges(g)) {
            Move m;
            m.kind = Move::Kind::RemoveEdge;
            m.x = u;
            m.y = v;
            ++moves_checked;
            if (homotopy_signature(apply_move(g, m)) != base) ++violations;
        }
    }
    bool ok = violations == 0 && moves_checked > 0;
    report(6, ok,
           std::to_string(moves_checked) + " moves over " + std::to_string(graphs) +
               " seeded random graphs, " + std::to_string(violations) + " signature changes (" +
               std::to_string(elapsed_ms(start)) + " ms)");
}

void criterion_helly_preservation() {
    auto start = Clock::now();
    std::vector<Graph> corpus;
    for (const CorpusItem& item : enumerate_corpus(main_corpus_spec())) corpus.push_back(*item.graph);
    for (const Graph& g : connected_graphs(6)) corpus.push_back(g);
    long long helly_inputs = 0, violations = 0;
    for (const Graph& g : corpus) {
        if (!is_clique_helly(g).helly) continue;
        ++helly_inputs;
        Graph kg = clique_graph(g).kg;
        if (!is_clique_helly(kg).helly) ++violations;
        if (homotopy_signature(g) != homotopy_signature(kg)) ++violations;
    }
    bool ok = violations == 0 && corpus.size() == 461 + 143;
    report(7, ok,
           std::to_string(helly_inputs) + " Helly graphs out of " + std::to_string(corpus.size()) +
               ", " + std::to_string(violations) + " violations (" +
               std::to_string(elapsed_ms(start)) + " ms)");
}

void criterion_null_implies_contractible() {
    auto start = Clock::now();
    long long nulls = 0, violations = 0;
    for (const CorpusItem& item : enumerate_corpus(main_corpus_spec())) {
        IterationOutcome out = iterate_clique_graph(*item.graph, 10, 2048);
        bool reached_point = false;
        for (long long s : out.sizes)
            if (s == 1) reached_point = true;
        if (!reached_point) continue;
        ++nulls;
        HomotopySignature sig = homotopy_signature(*item.graph);
        if (sig.betti != std::vector<long long>{1} || sig.euler != 1) ++violations;
    }
    bool ok = violations == 0 && nulls > 0;
    report(8, ok,
           std::to_string(nulls) + " null graphs in the corpus, " + std::to_string(violations) +
               " non-contractible (" + std::to_string(elapsed_ms(start)) + " ms)");
}

void criterion_dismantle_agreement() {
    auto start = Clock::now();
    long long total = 0, disagreements = 0;
    for (const Graph& g : connected_graphs(7)) {
        ++total;
        if (dismantle(g).dismantlable != exhaustively_dismantlable(g)) ++disagreements;
    }
    bool ok = disagreements == 0 && total == 996;
    report(9, ok,
           "greedy vs exhaustive dismantling on " + std::to_string(total) +
               " connected graphs, " + std::to_string(disagreements) + " disagreements (" +
               std::to_string(elapsed_ms(start)) + " ms)");
}

void criterion_format_round_trip() {
    long long total = 0, mismatches = 0;
    for (const CorpusItem& item : enumerate_corpus(main_corpus_spec())) {
        ++total;
        if (parse_graph6(item.graph6) != *item.graph) ++mismatches;
        if (emit_graph6(*item.graph) != item.graph6) ++mismatches;
    }
    for (const Graph& g : connected_graphs(6)) {
        ++total;
        if (parse_graph6(emit_graph6(g)) != g) ++mismatches;
    }
    report(10, mismatches == 0,
           "graph6 round trip over " + std::to_string(total) + " graphs, " +
               std::to_string(mismatches) + " mismatches");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        void (*run)();
    };
    const Criterion criteria[] = {
        {1, criterion_octahedron_law},        {2, criterion_divergence_trace},
        {3, criterion_main_theorem_corpus},   {4, criterion_h_constructions},
        {5, criterion_sphere_signatures},     {6, criterion_move_preservation},
        {7, criterion_helly_preservation},    {8, criterion_null_implies_contractible},
        {9, criterion_dismantle_agreement},   {10, criterion_format_round_trip},
    };
    for (const Criterion& c : criteria) {
        try {
            c.run();
        } catch (const std::exception& e) {
            report(c.id, false, std::string("exception: ") + e.what());
        }
    }
    std::cout << "acceptance: " << (10 - failures) << "/10 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
