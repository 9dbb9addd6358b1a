#include "cliquetop/generators.hpp"

#include <stdexcept>

namespace cliquetop {

Graph gen_octahedron(int k) {
    if (k < 1) throw std::invalid_argument("gen_octahedron requires k >= 1");
    int n = 2 * k;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    return g;
}

Graph gen_cycle(int k) {
    if (k < 3) throw std::invalid_argument("gen_cycle requires k >= 3");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

Graph gen_complete(int k) {
    if (k < 1) throw std::invalid_argument("gen_complete requires k >= 1");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_sun3() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 4);
    g.add_edge(0, 5);
    g.add_edge(2, 5);
    return g;
}

std::optional<int> octahedron_order(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || n % 2 != 0) return std::nullopt;
    // Complement must be a perfect matching: every vertex misses exactly
    // one other vertex, and missing is mutual.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 2) return std::nullopt;
    VertexSet matched(n);
    for (int v = 0; v < n; ++v) {
        if (matched.test(v)) continue;
        VertexSet miss = g.neighbors(v).flipped();
        miss.reset(v);
        int u = miss.first();
        if (u == -1 || miss.next(u) != -1) return std::nullopt;
        matched.set(v);
        matched.set(u);
    }
    return n / 2;
}

bool is_low_degree(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    if (!is_connected(g)) return false;
    if (g.max_degree() > 4) return false;
    return octahedron_order(g) != 3;
}

}  // namespace cliquetop
