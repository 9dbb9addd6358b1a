#include "cliquetop/isomorphism.hpp"

#include <algorithm>
#include <vector>

#include "cliquetop/errors.hpp"
#include "cliquetop/generators.hpp"

namespace cliquetop {

namespace {

// Sorted multiset of neighbor degrees, one per vertex.
std::vector<std::vector<int>> neighbor_degree_profiles(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out(n);
    for (int v = 0; v < n; ++v) {
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            out[v].push_back(g.degree(u));
        std::sort(out[v].begin(), out[v].end());
    }
    return out;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> map_ab;   // a-vertex -> b-vertex or -1
    std::vector<bool> used_b;
    std::vector<std::vector<bool>> candidate;  // candidate[va][vb]

    bool extend(int va) {
        int n = a.vertex_count();
        if (va == n) return true;
        for (int vb = 0; vb < n; ++vb) {
            if (used_b[vb] || !candidate[va][vb]) continue;
            bool ok = true;
            for (int u = 0; u < va && ok; ++u)
                if (a.has_edge(va, u) != b.has_edge(vb, map_ab[u])) ok = false;
            if (!ok) continue;
            map_ab[va] = vb;
            used_b[vb] = true;
            if (extend(va + 1)) return true;
            used_b[vb] = false;
            map_ab[va] = -1;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > kExactIsoLimit || b.vertex_count() > kExactIsoLimit)
        throw size_limit_error("too large for exact isomorphism (limit " +
                               std::to_string(kExactIsoLimit) + " vertices)");
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (n == 0) return true;

    auto pa = neighbor_degree_profiles(a);
    auto pb = neighbor_degree_profiles(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    IsoSearch s{a, b, std::vector<int>(n, -1), std::vector<bool>(n, false),
                std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (int va = 0; va < n; ++va)
        for (int vb = 0; vb < n; ++vb)
            s.candidate[va][vb] = (a.degree(va) == b.degree(vb) && pa[va] == pb[vb]);
    return s.extend(0);
}

bool same_invariants(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return octahedron_order(a) == octahedron_order(b);
}

}  // namespace cliquetop
