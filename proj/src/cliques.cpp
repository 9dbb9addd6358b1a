#include "cliquetop/cliques.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "cliquetop/errors.hpp"
#include "cliquetop/generators.hpp"
#include "cliquetop/isomorphism.hpp"

namespace cliquetop {

namespace {

// Bron-Kerbosch with pivoting. cap < 0 means unlimited; otherwise the
// search aborts as soon as the clique count exceeds cap.
struct BkEnumerator {
    const Graph& g;
    long long cap;
    CliqueList out{};
    bool exceeded = false;

    void expand(VertexSet r, VertexSet p, VertexSet x) {
        if (exceeded) return;
        if (p.none() && x.none()) {
            out.push_back(r);
            if (cap >= 0 && static_cast<long long>(out.size()) > cap) exceeded = true;
            return;
        }
        VertexSet px = p;
        px |= x;
        int pivot = -1, best = -1;
        for (int u = px.first(); u != -1; u = px.next(u)) {
            VertexSet t = p;
            t &= g.neighbors(u);
            int c = t.count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        VertexSet ext = p;
        ext &= g.neighbors(pivot).flipped();
        for (int v : ext.members()) {
            VertexSet r2 = r;
            r2.set(v);
            VertexSet p2 = p;
            p2 &= g.neighbors(v);
            VertexSet x2 = x;
            x2 &= g.neighbors(v);
            expand(std::move(r2), std::move(p2), std::move(x2));
            if (exceeded) return;
            p.reset(v);
            x.set(v);
        }
    }

    void run() {
        int n = g.vertex_count();
        expand(VertexSet(n), VertexSet(n).flipped(), VertexSet(n));
        std::sort(out.begin(), out.end(), Bitset::lex_less);
    }
};

CliqueList cliques_capped(const Graph& g, long long cap, bool& exceeded, long long& hit_count) {
    BkEnumerator bk{g, cap};
    bk.run();
    exceeded = bk.exceeded;
    hit_count = static_cast<long long>(bk.out.size());
    return std::move(bk.out);
}

Graph clique_graph_from(const CliqueList& labels) {
    Graph kg(static_cast<int>(labels.size()));
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(labels.size()); ++j)
            if (labels[i].intersects(labels[j])) kg.add_edge(i, j);
    return kg;
}

bool is_internal_triangle(const CliqueList& cliques, int idx) {
    const VertexSet& t = cliques[idx];
    if (t.count() != 3) return false;
    auto vs = t.members();
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            bool covered = false;
            for (int j = 0; j < static_cast<int>(cliques.size()) && !covered; ++j) {
                if (j == idx) continue;
                if (cliques[j].test(vs[a]) && cliques[j].test(vs[b])) covered = true;
            }
            if (!covered) return false;
        }
    return true;
}

}  // namespace

CliqueList maximal_cliques(const Graph& g) {
    if (g.vertex_count() == 0)
        throw empty_graph_error("maximal cliques of the empty graph are undefined");
    bool exceeded = false;
    long long hits = 0;
    return cliques_capped(g, -1, exceeded, hits);
}

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int best = 0;
    for (const VertexSet& q : maximal_cliques(g)) best = std::max(best, q.count());
    return best;
}

CliqueGraphResult clique_graph(const Graph& g) {
    CliqueList labels = maximal_cliques(g);
    return CliqueGraphResult{clique_graph_from(labels), std::move(labels)};
}

IterationOutcome iterate_clique_graph(const Graph& g, int steps, long long max_vertices) {
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    if (max_vertices < g.vertex_count())
        throw std::invalid_argument("max_vertices must be at least the vertex count of the input");

    IterationOutcome out;
    Graph current = g;
    out.sizes.push_back(current.vertex_count());
    out.retained.emplace_back(current.vertex_count() <= kRetainLimit
                                  ? std::optional<Graph>(current)
                                  : std::nullopt);
    out.stop_step = 0;

    for (int step = 1; step <= steps; ++step) {
        bool exceeded = false;
        long long hits = 0;
        CliqueList labels = cliques_capped(current, max_vertices, exceeded, hits);
        if (exceeded) {
            out.status = IterationOutcome::Status::BudgetExceeded;
            out.stop_step = step;
            out.budget_hit_count = hits;
            return out;
        }
        Graph next = clique_graph_from(labels);
        out.sizes.push_back(next.vertex_count());
        out.retained.emplace_back(next.vertex_count() <= kRetainLimit
                                      ? std::optional<Graph>(next)
                                      : std::nullopt);
        out.stop_step = step;
        if (step < steps && current.vertex_count() <= kExactIsoLimit &&
            next.vertex_count() <= kExactIsoLimit && is_isomorphic(current, next)) {
            out.status = IterationOutcome::Status::FixedPointDetected;
            return out;
        }
        current = std::move(next);
    }
    out.status = IterationOutcome::Status::Completed;
    return out;
}

std::vector<int> star_of(const Graph& g, const CliqueList& cliques, int x) {
    if (x < 0 || x >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
        if (cliques[i].test(x)) idx.push_back(i);
    return idx;
}

bool is_normal_vertex(const Graph& g, int x) {
    CliqueList cliques = maximal_cliques(g);
    std::vector<int> star = star_of(g, cliques, x);
    VertexSet in_star(static_cast<int>(cliques.size()));
    for (int i : star) in_star.set(i);
    for (int j = 0; j < static_cast<int>(cliques.size()); ++j) {
        if (in_star.test(j)) continue;
        bool meets_all = true;
        for (int i : star)
            if (!cliques[j].intersects(cliques[i])) {
                meets_all = false;
                break;
            }
        if (meets_all) return false;
    }
    return true;
}

std::vector<K2VertexClass> classify_k2_vertices(const Graph& g, const CliqueList& cliques) {
    const bool low_deg = is_low_degree(g);
    Graph kg = clique_graph_from(cliques);
    CliqueList k2_vertices = maximal_cliques(kg);

    std::vector<K2VertexClass> out;
    out.reserve(k2_vertices.size());
    for (const VertexSet& q : k2_vertices) {
        K2VertexClass cls;
        cls.member_cliques = q;
        VertexSet common = VertexSet(g.vertex_count()).flipped();
        for (int i : q.members()) common &= cliques[i];
        if (common.any()) {
            cls.is_star = true;
            cls.star_vertices = common.members();
            out.push_back(std::move(cls));
            continue;
        }

        cls.is_star = false;
        auto members = q.members();
        std::vector<int> centers;
        for (int i : members) {
            bool meets_all_in_edge = true;
            for (int j : members) {
                if (j == i) continue;
                VertexSet inter = cliques[i];
                inter &= cliques[j];
                if (inter.count() < 2) {
                    meets_all_in_edge = false;
                    break;
                }
            }
            if (meets_all_in_edge) centers.push_back(i);
        }

        if (centers.size() == 1) {
            int c = centers.front();
            cls.center = cliques[c];
            for (int j : members)
                if (j != c) cls.ears.push_back(cliques[j]);
        }

        if (low_deg) {
            std::string breach;
            if (centers.size() != 1) {
                breach = "necktie without a unique center";
            } else if (cls.center->count() != 3) {
                breach = "necktie center is not a triangle";
            } else if (!is_internal_triangle(cliques, centers.front())) {
                breach = "necktie center is not an internal triangle";
            } else if (cls.ears.size() != 3) {
                breach = "necktie has " + std::to_string(cls.ears.size()) + " ears instead of 3";
            } else {
                std::vector<VertexSet> edges;
                for (const VertexSet& ear : cls.ears) {
                    VertexSet inter = ear;
                    inter &= *cls.center;
                    if (inter.count() != 2) {
                        breach = "necktie ear does not meet the center in an edge";
                        break;
                    }
                    edges.push_back(inter);
                }
                if (breach.empty())
                    for (std::size_t a = 0; a < edges.size() && breach.empty(); ++a)
                        for (std::size_t b = a + 1; b < edges.size(); ++b)
                            if (edges[a] == edges[b]) {
                                breach = "two necktie ears meet the center in the same edge";
                                break;
                            }
            }
            if (!breach.empty())
                throw invariant_violation("low degree necktie shape violated: " + breach);
        }
        out.push_back(std::move(cls));
    }
    return out;
}

HellyResult is_clique_helly(const Graph& g) {
    CliqueList cliques = maximal_cliques(g);
    for (K2VertexClass& cls : classify_k2_vertices(g, cliques))
        if (!cls.is_star) return HellyResult{false, std::move(cls)};
    return HellyResult{true, std::nullopt};
}

std::vector<int> internal_triangles(const CliqueList& cliques) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
        if (is_internal_triangle(cliques, i)) out.push_back(i);
    return out;
}

std::vector<int> necktie_of(const CliqueList& cliques, const VertexSet& t) {
    int idx = -1;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
        if (cliques[i] == t) {
            idx = i;
            break;
        }
    if (idx == -1) throw invariant_violation("necktie_of: set is not a maximal clique");
    if (!is_internal_triangle(cliques, idx))
        throw invariant_violation("necktie_of: clique is not an internal triangle");
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(cliques.size()); ++j) {
        VertexSet inter = cliques[j];
        inter &= t;
        if (inter.count() >= 2) out.push_back(j);
    }
    return out;
}

bool contains_induced_octahedron(const Graph& g) {
    int n = g.vertex_count();
    if (n < 6) return false;
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 4) candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < 6) return false;

    std::vector<int> chosen;
    // miss_count[i]: non-neighbors of chosen[i] among the chosen set.
    std::vector<int> miss(6, 0);

    auto feasible = [&](int v) {
        int v_miss = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (!g.has_edge(v, chosen[i])) {
                if (miss[i] >= 1) return false;
                ++v_miss;
            }
        }
        return v_miss <= 1;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (chosen.size() == 6) {
            for (std::size_t i = 0; i < 6; ++i)
                if (miss[i] != 1) return false;
            return true;
        }
        for (std::size_t ci = from; ci < candidates.size(); ++ci) {
            int v = candidates[ci];
            if (!feasible(v)) continue;
            std::vector<int> bumped;
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (!g.has_edge(v, chosen[i])) {
                    ++miss[i];
                    bumped.push_back(static_cast<int>(i));
                }
            int v_miss = static_cast<int>(bumped.size());
            miss[chosen.size()] = v_miss;
            chosen.push_back(v);
            if (rec(ci + 1)) return true;
            chosen.pop_back();
            for (int i : bumped) --miss[i];
        }
        return false;
    };
    return rec(0);
}

bool triangles_in_unique_cliques(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    CliqueList cliques = maximal_cliques(g);
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            VertexSet common = g.neighbors(a);
            common &= g.neighbors(b);
            for (int c = common.next(b); c != -1; c = common.next(c)) {
                int count = 0;
                for (const VertexSet& q : cliques)
                    if (q.test(a) && q.test(b) && q.test(c) && ++count > 1) return false;
            }
        }
    return true;
}

std::vector<std::pair<std::pair<int, int>, int>> edges_in_unique_clique(
    const Graph& g, const CliqueList& cliques) {
    std::vector<std::pair<std::pair<int, int>, int>> out;
    for (auto [u, v] : g.edges()) {
        int count = 0, last = -1;
        for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
            if (cliques[i].test(u) && cliques[i].test(v)) {
                ++count;
                last = i;
            }
        if (count == 1) out.push_back({{u, v}, last});
    }
    return out;
}

}  // namespace cliquetop
