#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cliquetop/graph.hpp"

namespace cliquetop {

// Per-graph theorem checks. All of them presuppose a low degree input
// (connected, max degree 4, not the octahedron); on other graphs every
// requested check fails with witness "not low degree".
enum class Check {
    K2Helly,          // K^2(G) is clique-Helly
    KgO3Free,         // K(G) has no induced octahedron
    SignaturesEqual,  // signature(G) = signature(K(G)) = signature(K^2(G))
    WedgeReduce,      // reduction to triangle-free succeeds, wedge count = b_1
    BettiTailZero,    // Betti numbers vanish beyond b_1
    HInvariance,      // twin contraction H: signature(H) = signature(G)
    HCliqueLevel,     // clique-level H: signature(H) = signature(K(G))
    NecktieShape,     // every necktie is 4 triangles around an internal one
};

const std::vector<Check>& all_checks();
std::string check_name(Check check);

struct CheckResult {
    bool pass = false;
    std::string witness;  // empty = no witness (serialized as null)
    long long ms = 0;
};

struct GraphReport {
    std::string graph6;
    int n = 0;
    int m = 0;
    // Ordered as requested; parse failures hold a single "parse" entry.
    std::vector<std::pair<std::string, CheckResult>> checks;

    bool all_pass() const;
};

// Runs the requested checks with a cooperative per-graph deadline: once the
// budget is spent, remaining checks fail with witness "timeout".
GraphReport verify_graph(const Graph& g, const std::vector<Check>& checks,
                         std::chrono::milliseconds budget = std::chrono::seconds(10));

// Corpus selection: either a file of graph6 lines, or exhaustive generation
// of connected graphs with 1..max_n vertices, max degree bounded by
// max_degree (<= 0 means unbounded), deduplicated up to isomorphism, with
// the octahedron O_3 excluded unless include_octahedron is set.
struct CorpusSpec {
    int max_n = 6;
    int max_degree = 4;
    bool dedup = true;
    bool include_octahedron = false;
    std::optional<std::string> input_file;
};

struct CorpusItem {
    std::string graph6;
    std::optional<Graph> graph;   // absent on parse failure
    std::string parse_error_msg;  // set on parse failure
    int line_no = 0;              // 1-based for file corpora
};

// Deterministic order: file order, or generation order of the first labeled
// representative of each isomorphism class. Generated corpora require
// max_n <= 8 (exact-isomorphism dedup bound).
std::vector<CorpusItem> enumerate_corpus(const CorpusSpec& spec);

// Convenience for exhaustive property tests.
std::vector<Graph> connected_graphs(int max_n, int max_degree = 0,
                                    bool include_octahedron = true);

struct CorpusSummary {
    long long total = 0;
    long long failed = 0;
    std::map<std::string, long long> failed_by_check;
};

// Maps verify_graph over the corpus (OpenMP across graphs when jobs != 1),
// writing one JSONL record per item in corpus order, then a summary line.
// Output is byte-identical across runs except for the "ms" fields.
CorpusSummary run_corpus(const CorpusSpec& spec, const std::vector<Check>& checks, int jobs,
                         std::ostream& out,
                         std::chrono::milliseconds budget = std::chrono::seconds(10));

}  // namespace cliquetop
