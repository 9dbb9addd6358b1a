#include "cliquetop/graph.hpp"

#include <stdexcept>

#include "cliquetop/errors.hpp"

namespace cliquetop {

void Graph::check_valid() const {
    for (int v = 0; v < n_; ++v) {
        if (adj_[v].universe() != n_)
            throw invariant_violation("adjacency row universe mismatch at vertex " +
                                      std::to_string(v));
        if (adj_[v].test(v))
            throw invariant_violation("self-loop at vertex " + std::to_string(v));
        for (int u = adj_[v].first(); u != -1; u = adj_[v].next(u))
            if (!adj_[u].test(v))
                throw invariant_violation("asymmetric edge {" + std::to_string(v) + "," +
                                          std::to_string(u) + "}");
    }
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    VertexSet seen(n);
    std::vector<int> stack = {0};
    seen.set(0);
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) {
            if (!seen.test(u)) {
                seen.set(u);
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

int component_count(const Graph& g) {
    int n = g.vertex_count();
    VertexSet seen(n);
    int components = 0;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        ++components;
        std::vector<int> stack = {s};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) {
                if (!seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
            }
        }
    }
    return components;
}

bool is_dominated(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("is_dominated requires x != y");
    return g.closed_neighborhood(x).subset_of(g.closed_neighborhood(y));
}

bool are_twins(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("are_twins requires x != y");
    return g.closed_neighborhood(x) == g.closed_neighborhood(y);
}

Relabeling remove_vertex(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count())
        throw std::invalid_argument("remove_vertex: no such vertex " + std::to_string(x));
    VertexSet keep = g.all_vertices();
    keep.reset(x);
    return induced(g, keep);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
        throw std::invalid_argument("remove_edge: no such edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    Graph h(g.vertex_count());
    for (auto [a, b] : g.edges())
        if (!(a == std::min(u, v) && b == std::max(u, v))) h.add_edge(a, b);
    return h;
}

Relabeling induced(const Graph& g, const VertexSet& keep) {
    int n = g.vertex_count();
    if (keep.universe() != n) throw std::invalid_argument("induced: universe mismatch");
    std::vector<int> old_to_new(n, -1);
    int m = 0;
    for (int v = keep.first(); v != -1; v = keep.next(v)) old_to_new[v] = m++;
    Graph h(m);
    for (int v = keep.first(); v != -1; v = keep.next(v)) {
        VertexSet nb = g.neighbors(v) & keep;
        for (int u = nb.next(v); u != -1; u = nb.next(u))
            h.add_edge(old_to_new[v], old_to_new[u]);
    }
    return {std::move(h), std::move(old_to_new)};
}

}  // namespace cliquetop
