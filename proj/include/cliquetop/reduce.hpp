#pragma once

#include <string>
#include <vector>

#include "cliquetop/cliques.hpp"
#include "cliquetop/graph.hpp"

namespace cliquetop {

// One homotopy-preserving reduction move. Vertex indices refer to the graph
// the move is applied to (earlier removals have already shifted labels).
struct Move {
    enum class Kind { RemoveDominatedVertex, RemoveEdge, RemoveTwinClass };

    Kind kind = Kind::RemoveDominatedVertex;
    // RemoveDominatedVertex: x removed, y its dominator.
    // RemoveEdge: edge {x, y} with x < y.
    // RemoveTwinClass: x kept, removed holds its deleted twins.
    int x = -1;
    int y = -1;
    std::vector<int> removed;
    // RemoveEdge justification: the closed neighborhood N[x] & N[y], which
    // must be complete and properly contain {x, y}. Filled at application
    // time; not serialized (replay recomputes it).
    VertexSet edge_neighborhood;
};

// Validates the move's precondition against g and applies it. Vertex
// removals relabel by shifting higher indices down. Throws
// invariant_violation when the precondition fails.
Graph apply_move(const Graph& g, const Move& move);

// Replayable audit trail of a reduction.
struct ReductionTrace {
    int initial_n = 0;
    long long initial_m = 0;
    std::string initial_graph6;
    std::vector<Move> moves;
    Graph final_graph;
};

// Text form:
//   trace <n> <m> <graph6>
//   dom <x> <y> | edge <u> <v> | twinclass <kept> <removed...>
//   final <graph6>
std::string serialize_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(const std::string& text);

// Re-applies the moves from the initial graph, re-validating every
// precondition; returns the final graph and checks it matches the recorded
// one. Any breach throws invariant_violation naming the move index.
Graph replay(const ReductionTrace& trace);

// Edges e = {x, y} whose closed neighborhood N[e] = N[x] & N[y] is complete
// and properly contains {x, y}; removing such an edge preserves the
// homotopy type of the clique complex. Lexicographic order.
std::vector<std::pair<int, int>> removable_edges(const Graph& g);

// Greedy domination folding: repeatedly removes the smallest-index
// dominated vertex (with its smallest-index dominator) until none remains.
struct DismantleResult {
    Graph core;
    ReductionTrace trace;
    bool dismantlable = false;
};

DismantleResult dismantle(const Graph& g);

// Certificate that source #-retracts onto the induced subgraph on kept:
// every vertex outside kept is dominated, in source, by its assigned kept
// dominator. This witnesses a homotopy equivalence that the clique graph
// operator preserves.
struct HashRetraction {
    Graph source;
    VertexSet kept;
    std::vector<int> dominator;  // -1 for kept vertices
};

struct HashRetractResult {
    Graph h;
    std::vector<int> old_to_new;  // -1 for removed vertices
    HashRetraction cert;
    ReductionTrace trace;
};

// Validates the certificate against g (not against any intermediate graph)
// and returns the induced subgraph plus a replayable trace. An invalid
// domination is rejected with invariant_violation naming the vertex.
HashRetractResult hash_retract(const Graph& g, const VertexSet& kept,
                               const std::vector<int>& dominator);

// Twin-class contraction: keeps the smallest vertex of every twin class of
// size >= 3 and removes the rest (such classes span triangles lying in two
// different cliques). The result must have all triangles in unique cliques
// and no induced octahedron; a breach throws invariant_violation.
// Requires a low degree input.
HashRetractResult build_h_invariance(const Graph& g);

// The same contraction one clique level up: operates on K(G), removing its
// internal-triangle vertices. Internal triangles sharing an edge are twins
// in K(G) (keep the lexicographically smallest label per component);
// isolated internal triangles are dominated by one of their ears (smallest
// dominating ear index). Requires a low degree input.
struct CliqueLevelResult {
    CliqueGraphResult base;
    HashRetractResult retract;  // over base.kg
};

CliqueLevelResult build_h_clique_level(const Graph& g);

// Reduces a low degree graph to a triangle-free one by homotopy-preserving
// moves: the K_5 input collapses to a point; otherwise 4-cliques are
// eliminated first (dominated vertex, forced twin, or edge removal), then
// triangles are opened one edge at a time, each edge lying in exactly one
// clique which is a triangle. wedge_count = m - n + 1 of the final
// connected graph, the number of circles in the wedge it deforms to.
struct WedgeReduction {
    Graph triangle_free;
    ReductionTrace trace;
    long long wedge_count = 0;
};

WedgeReduction low_degree_reduce(const Graph& g);

}  // namespace cliquetop
