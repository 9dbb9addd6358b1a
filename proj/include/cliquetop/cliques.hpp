#pragma once

#include <optional>
#include <vector>

#include "cliquetop/graph.hpp"

namespace cliquetop {

// Maximal cliques of a graph, each as a vertex set, sorted lexicographically
// by ascending member list. This canonical order makes clique indices stable
// across runs, so traces and witnesses are reproducible.
using CliqueList = std::vector<VertexSet>;

// Bron-Kerbosch with pivoting. Throws empty_graph_error on the empty graph
// (the clique graph operator is undefined there; K_1 yields one empty-graph
// step already at the first iteration that collapses to a single vertex).
CliqueList maximal_cliques(const Graph& g);

// Size of a largest clique. Empty graph has clique number 0.
int clique_number(const Graph& g);

// Clique graph K(G): one vertex per maximal clique of g, adjacent when the
// cliques intersect. labels[i] is the vertex set of clique i in g.
struct CliqueGraphResult {
    Graph kg;
    CliqueList labels;
};

CliqueGraphResult clique_graph(const Graph& g);

// Iterated clique graphs K^0(G)=G, K^1, ..., K^steps.
struct IterationOutcome {
    enum class Status { Completed, FixedPointDetected, BudgetExceeded };

    // sizes[i] = vertex count of K^i; stops early on fixed point or budget.
    std::vector<long long> sizes;
    // retained[i] holds K^i when its vertex count is at most kRetainLimit.
    std::vector<std::optional<Graph>> retained;
    Status status = Status::Completed;
    // Step index at which iteration stopped (== steps when completed; the
    // first repeated step for a fixed point; the step whose clique graph
    // blew the budget otherwise).
    int stop_step = 0;
    // For BudgetExceeded: number of cliques enumerated before giving up.
    long long budget_hit_count = 0;
};

inline constexpr int kRetainLimit = 4096;

// max_vertices bounds the size of any intermediate clique graph; it must be
// at least |V(G)|. Fixed points are only detected when two consecutive
// iterates are small enough for exact isomorphism.
IterationOutcome iterate_clique_graph(const Graph& g, int steps, long long max_vertices);

// Cliques of g containing vertex x (the star of x), as indices into cliques.
std::vector<int> star_of(const Graph& g, const CliqueList& cliques, int x);

// x is normal when its star is a maximal complete subgraph of K(G), i.e. no
// clique of g outside x* intersects every clique containing x. Stars of
// normal vertices are exactly the star-type cliques of K(G).
bool is_normal_vertex(const Graph& g, int x);

// Classification of the cliques of K(G) (vertices of K^2(G)).
// Every clique Q of K(G) is either a star (the cliques in Q have a common
// vertex) or a necktie (empty total intersection). For low degree graphs a
// necktie consists of 4 triangles arranged around an internal triangle: the
// center plus three ears, pairwise meeting in the three edges of the center.
struct K2VertexClass {
    VertexSet member_cliques;          // clique indices of g forming Q
    bool is_star = false;
    std::vector<int> star_vertices;    // all x with common intersection; empty for neckties
    std::optional<VertexSet> center;   // necktie center (a clique of g)
    std::vector<VertexSet> ears;       // necktie ears in index order
};

// Classifies every maximal clique of K(G). When g is low degree, validates
// the necktie shape (center is an internal triangle, exactly 3 ears, each
// ear meets the center in one of its edges) and throws invariant_violation
// on a breach. cliques must be maximal_cliques(g).
std::vector<K2VertexClass> classify_k2_vertices(const Graph& g, const CliqueList& cliques);

// Clique-Helly test: every family of pairwise intersecting cliques has a
// common vertex. Equivalently, every clique of K(G) is a star. On failure,
// witness holds the offending necktie.
struct HellyResult {
    bool helly = true;
    std::optional<K2VertexClass> witness;
};

HellyResult is_clique_helly(const Graph& g);

// Triangles {a,b,c} that are maximal cliques and each of whose edges lies in
// some other maximal clique too. Returned as indices into cliques, which
// must be the full maximal clique list of the graph.
std::vector<int> internal_triangles(const CliqueList& cliques);

// The necktie around internal triangle T: all cliques sharing at least 2
// vertices (an edge) with T, as indices into cliques. Throws
// invariant_violation if T is not an internal triangle.
std::vector<int> necktie_of(const CliqueList& cliques, const VertexSet& t);

// True when g has an induced subgraph isomorphic to the octahedron O_3.
bool contains_induced_octahedron(const Graph& g);

// True when every triangle (3-vertex complete subgraph) of g lies in
// exactly one maximal clique.
bool triangles_in_unique_cliques(const Graph& g);

// Edges of g lying in exactly one maximal clique, paired with that clique's
// index. Order: lexicographic by (u, v), u < v.
std::vector<std::pair<std::pair<int, int>, int>> edges_in_unique_clique(
    const Graph& g, const CliqueList& cliques);

}  // namespace cliquetop
