#pragma once

#include <utility>
#include <vector>

#include "cliquetop/bitset.hpp"

namespace cliquetop {

using VertexSet = Bitset;

// Simple undirected graph on dense vertices 0..n-1 with bitset adjacency
// rows. Values are treated as immutable once built; every operation below
// returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    void add_edge(int u, int v) {
        assert(u != v);
        adj_[u].set(v);
        adj_[v].set(u);
    }

    void drop_edge(int u, int v) {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        s.set(v);
        return s;
    }

    int degree(int v) const { return adj_[v].count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    VertexSet all_vertices() const {
        VertexSet s(n_);
        for (int v = 0; v < n_; ++v) s.set(v);
        return s;
    }

    // Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;

    // Throws invariant_violation if adjacency is asymmetric or reflexive.
    void check_valid() const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// N[x] subseteq N[y]; requires x != y.
bool is_dominated(const Graph& g, int x, int y);

// N[x] == N[y]; requires x != y. Twins are always adjacent.
bool are_twins(const Graph& g, int x, int y);

// Result of an operation that drops vertices: the new graph plus the
// order-preserving relabeling (old index -> new index, -1 when removed).
struct Relabeling {
    Graph graph;
    std::vector<int> old_to_new;
};

Relabeling remove_vertex(const Graph& g, int x);
Graph remove_edge(const Graph& g, int u, int v);
Relabeling induced(const Graph& g, const VertexSet& keep);

}  // namespace cliquetop
