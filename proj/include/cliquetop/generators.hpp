#pragma once

#include <optional>

#include "cliquetop/graph.hpp"

namespace cliquetop {

// O_k: complement of k disjoint edges. Vertex 2i is non-adjacent exactly
// to vertex 2i+1; the graph is (2k-2)-regular on 2k vertices.
Graph gen_octahedron(int k);

Graph gen_cycle(int k);     // k >= 3
Graph gen_complete(int k);  // k >= 1

// Triangle {0,1,2} with ear triangles {0,1,3}, {1,2,4}, {0,2,5}.
// Smallest low degree graph containing a necktie; handy fixture.
Graph gen_sun3();

// Returns k when g is the octahedron O_k (complement a perfect matching),
// otherwise nullopt.
std::optional<int> octahedron_order(const Graph& g);

// Connected, maximum degree <= 4, and not O_3.
bool is_low_degree(const Graph& g);

}  // namespace cliquetop
