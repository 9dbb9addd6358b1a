#include "cliquetop/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cliquetop/errors.hpp"
#include "cliquetop/generators.hpp"
#include "cliquetop/graph_io.hpp"

namespace cliquetop {

namespace {

VertexSet edge_nbhd(const Graph& g, int u, int v) {
    VertexSet s = g.closed_neighborhood(u);
    s &= g.closed_neighborhood(v);
    return s;
}

bool induces_complete(const Graph& g, const VertexSet& s) {
    auto vs = s.members();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw invariant_violation(std::string(what) + " " + std::to_string(v) +
                                  " is out of range");
}

// Applies validated moves to a working graph while recording them.
struct TraceBuilder {
    Graph current;
    ReductionTrace trace;

    explicit TraceBuilder(const Graph& g) : current(g) {
        trace.initial_n = g.vertex_count();
        trace.initial_m = g.edge_count();
        trace.initial_graph6 = emit_graph6(g);
    }

    void apply(Move m) {
        current = apply_move(current, m);
        trace.moves.push_back(std::move(m));
    }

    void dom(int x, int y) {
        Move m;
        m.kind = Move::Kind::RemoveDominatedVertex;
        m.x = x;
        m.y = y;
        apply(std::move(m));
    }

    void edge(int u, int v) {
        Move m;
        m.kind = Move::Kind::RemoveEdge;
        m.x = std::min(u, v);
        m.y = std::max(u, v);
        m.edge_neighborhood = edge_nbhd(current, u, v);
        apply(std::move(m));
    }

    void twinclass(int kept, std::vector<int> removed) {
        Move m;
        m.kind = Move::Kind::RemoveTwinClass;
        m.x = kept;
        std::sort(removed.begin(), removed.end());
        m.removed = std::move(removed);
        apply(std::move(m));
    }

    ReductionTrace finish() {
        trace.final_graph = current;
        return trace;
    }
};

// Updates an original-index -> current-index map after removing the given
// current indices (ascending).
void drop_from_map(std::vector<int>& cur, const std::vector<int>& removed_cur) {
    for (int& c : cur) {
        if (c == -1) continue;
        int shift = 0;
        bool gone = false;
        for (int r : removed_cur) {
            if (c == r) {
                gone = true;
                break;
            }
            if (r < c) ++shift;
        }
        c = gone ? -1 : c - shift;
    }
}

void guard_not_octahedron(const Graph& g, const char* stage) {
    if (octahedron_order(g) == 3)
        throw invariant_violation(std::string(stage) +
                                  " produced an octahedron intermediate");
}

}  // namespace

Graph apply_move(const Graph& g, const Move& move) {
    switch (move.kind) {
        case Move::Kind::RemoveDominatedVertex: {
            check_vertex(g, move.x, "dominated vertex");
            check_vertex(g, move.y, "dominator");
            if (move.x == move.y)
                throw invariant_violation("a vertex cannot dominate itself");
            if (!is_dominated(g, move.x, move.y))
                throw invariant_violation("vertex " + std::to_string(move.x) +
                                          " is not dominated by " + std::to_string(move.y));
            return remove_vertex(g, move.x).graph;
        }
        case Move::Kind::RemoveEdge: {
            int u = std::min(move.x, move.y), v = std::max(move.x, move.y);
            check_vertex(g, u, "edge endpoint");
            check_vertex(g, v, "edge endpoint");
            if (u == v || !g.has_edge(u, v))
                throw invariant_violation("edge {" + std::to_string(u) + "," +
                                          std::to_string(v) + "} is not present");
            VertexSet ne = edge_nbhd(g, u, v);
            if (ne.count() <= 2)
                throw invariant_violation("edge {" + std::to_string(u) + "," +
                                          std::to_string(v) +
                                          "} is not properly contained in its closed neighborhood");
            if (!induces_complete(g, ne))
                throw invariant_violation("closed neighborhood of edge {" + std::to_string(u) +
                                          "," + std::to_string(v) + "} is not complete");
            return remove_edge(g, u, v);
        }
        case Move::Kind::RemoveTwinClass: {
            check_vertex(g, move.x, "kept twin");
            if (move.removed.empty())
                throw invariant_violation("twin class move removes nothing");
            std::vector<int> removed = move.removed;
            std::sort(removed.begin(), removed.end());
            for (std::size_t i = 0; i < removed.size(); ++i) {
                check_vertex(g, removed[i], "removed twin");
                if (removed[i] == move.x)
                    throw invariant_violation("twin class move removes its kept vertex");
                if (i > 0 && removed[i] == removed[i - 1])
                    throw invariant_violation("twin class move lists a vertex twice");
                if (!are_twins(g, removed[i], move.x))
                    throw invariant_violation("vertex " + std::to_string(removed[i]) +
                                              " is not a twin of " + std::to_string(move.x));
            }
            Graph out = g;
            for (auto it = removed.rbegin(); it != removed.rend(); ++it)
                out = remove_vertex(out, *it).graph;
            return out;
        }
    }
    throw invariant_violation("unknown move kind");
}

std::string serialize_trace(const ReductionTrace& trace) {
    std::string out = "trace " + std::to_string(trace.initial_n) + " " +
                      std::to_string(trace.initial_m) + " " + trace.initial_graph6 + "\n";
    for (const Move& m : trace.moves) {
        switch (m.kind) {
            case Move::Kind::RemoveDominatedVertex:
                out += "dom " + std::to_string(m.x) + " " + std::to_string(m.y) + "\n";
                break;
            case Move::Kind::RemoveEdge:
                out += "edge " + std::to_string(m.x) + " " + std::to_string(m.y) + "\n";
                break;
            case Move::Kind::RemoveTwinClass:
                out += "twinclass " + std::to_string(m.x);
                for (int r : m.removed) out += " " + std::to_string(r);
                out += "\n";
                break;
        }
    }
    out += "final " + emit_graph6(trace.final_graph) + "\n";
    return out;
}

ReductionTrace parse_trace(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ReductionTrace trace;
    bool saw_header = false, saw_final = false;
    int line_no = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw parse_error("trace line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (saw_final) fail("content after the final line");
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!saw_header) {
            if (tag != "trace") fail("expected the trace header");
            std::string g6;
            if (!(ls >> trace.initial_n >> trace.initial_m >> g6)) fail("malformed header");
            trace.initial_graph6 = g6;
            Graph g = parse_graph6(g6);
            if (g.vertex_count() != trace.initial_n ||
                static_cast<long long>(g.edge_count()) != trace.initial_m)
                fail("header fingerprint does not match its graph6 payload");
            saw_header = true;
            continue;
        }
        if (tag == "dom" || tag == "edge") {
            Move m;
            m.kind = tag == "dom" ? Move::Kind::RemoveDominatedVertex : Move::Kind::RemoveEdge;
            if (!(ls >> m.x >> m.y)) fail("malformed " + tag + " move");
            std::string extra;
            if (ls >> extra) fail("trailing tokens on " + tag + " move");
            trace.moves.push_back(std::move(m));
        } else if (tag == "twinclass") {
            Move m;
            m.kind = Move::Kind::RemoveTwinClass;
            if (!(ls >> m.x)) fail("malformed twinclass move");
            int r;
            while (ls >> r) m.removed.push_back(r);
            if (!ls.eof()) fail("malformed twinclass move");
            if (m.removed.empty()) fail("twinclass move lists no removed vertices");
            trace.moves.push_back(std::move(m));
        } else if (tag == "final") {
            std::string g6;
            if (!(ls >> g6)) fail("malformed final line");
            trace.final_graph = parse_graph6(g6);
            saw_final = true;
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    ++line_no;
    if (!saw_header) fail("missing trace header");
    if (!saw_final) fail("missing final line");
    return trace;
}

Graph replay(const ReductionTrace& trace) {
    Graph g = parse_graph6(trace.initial_graph6);
    if (g.vertex_count() != trace.initial_n ||
        static_cast<long long>(g.edge_count()) != trace.initial_m)
        throw invariant_violation("trace corrupt: header fingerprint mismatch");
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        try {
            g = apply_move(g, trace.moves[i]);
        } catch (const invariant_violation& e) {
            throw invariant_violation("trace corrupt at move " + std::to_string(i) + ": " +
                                      e.what());
        }
    }
    if (!(g == trace.final_graph))
        throw invariant_violation("trace corrupt: replay does not reproduce the final graph");
    return g;
}

std::vector<std::pair<int, int>> removable_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        VertexSet ne = edge_nbhd(g, u, v);
        if (ne.count() > 2 && induces_complete(g, ne)) out.emplace_back(u, v);
    }
    return out;
}

DismantleResult dismantle(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("dismantle requires a nonempty graph");
    TraceBuilder tb(g);
    for (;;) {
        int n = tb.current.vertex_count();
        int dx = -1, dy = -1;
        for (int x = 0; x < n && dx == -1; ++x)
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                if (is_dominated(tb.current, x, y)) {
                    dx = x;
                    dy = y;
                    break;
                }
            }
        if (dx == -1) break;
        tb.dom(dx, dy);
    }
    DismantleResult result;
    result.core = tb.current;
    result.dismantlable = tb.current.vertex_count() == 1;
    result.trace = tb.finish();
    return result;
}

HashRetractResult hash_retract(const Graph& g, const VertexSet& kept,
                               const std::vector<int>& dominator) {
    int n = g.vertex_count();
    if (kept.universe() != n)
        throw std::invalid_argument("kept set universe does not match the graph");
    if (static_cast<int>(dominator.size()) != n)
        throw std::invalid_argument("dominator map must assign every vertex");
    if (kept.none()) throw std::invalid_argument("kept set must be nonempty");

    for (int v = 0; v < n; ++v) {
        if (kept.test(v)) continue;
        int d = dominator[v];
        if (d < 0 || d >= n || !kept.test(d) || d == v)
            throw invariant_violation("vertex " + std::to_string(v) +
                                      " has no kept dominator assigned");
        if (!is_dominated(g, v, d))
            throw invariant_violation("vertex " + std::to_string(v) + " is not dominated by " +
                                      std::to_string(d) + " in the source graph");
    }

    TraceBuilder tb(g);
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    for (int v = 0; v < n; ++v) {
        if (kept.test(v)) continue;
        int cx = cur[v], cy = cur[dominator[v]];
        tb.dom(cx, cy);
        drop_from_map(cur, {cx});
    }

    Relabeling ind = induced(g, kept);
    if (!(tb.current == ind.graph))
        throw invariant_violation("internal error: retraction trace mismatch");

    HashRetractResult out;
    out.h = ind.graph;
    out.old_to_new = ind.old_to_new;
    out.cert.source = g;
    out.cert.kept = kept;
    out.cert.dominator = dominator;
    for (int v = 0; v < n; ++v)
        if (kept.test(v)) out.cert.dominator[v] = -1;
    out.trace = tb.finish();
    return out;
}

HashRetractResult build_h_invariance(const Graph& g) {
    if (!is_low_degree(g)) throw std::invalid_argument("requires a low degree graph");
    int n = g.vertex_count();

    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<int> cls{v};
        seen[v] = true;
        for (int u = v + 1; u < n; ++u)
            if (!seen[u] && are_twins(g, v, u)) {
                cls.push_back(u);
                seen[u] = true;
            }
        classes.push_back(std::move(cls));
    }

    VertexSet kept = g.all_vertices();
    std::vector<int> dominator(n, -1);
    for (const auto& cls : classes) {
        if (cls.size() < 3) continue;
        for (std::size_t i = 1; i < cls.size(); ++i) {
            kept.reset(cls[i]);
            dominator[cls[i]] = cls[0];
        }
    }

    HashRetractResult out = hash_retract(g, kept, dominator);

    TraceBuilder tb(g);
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    for (const auto& cls : classes) {
        if (cls.size() < 3) continue;
        std::vector<int> removed;
        for (std::size_t i = 1; i < cls.size(); ++i) removed.push_back(cur[cls[i]]);
        std::sort(removed.begin(), removed.end());
        tb.twinclass(cur[cls[0]], removed);
        drop_from_map(cur, removed);
    }
    if (!(tb.current == out.h))
        throw invariant_violation("internal error: twin class trace mismatch");
    out.trace = tb.finish();

    if (contains_induced_octahedron(out.h))
        throw invariant_violation("twin contraction left an induced octahedron");
    if (!triangles_in_unique_cliques(out.h))
        throw invariant_violation("twin contraction left a triangle in two cliques");
    return out;
}

CliqueLevelResult build_h_clique_level(const Graph& g) {
    if (!is_low_degree(g)) throw std::invalid_argument("requires a low degree graph");
    CliqueLevelResult result;
    result.base = clique_graph(g);
    const Graph& kg = result.base.kg;
    const CliqueList& labels = result.base.labels;
    int kn = kg.vertex_count();

    std::vector<int> internal = internal_triangles(labels);

    // Components of the shares-an-edge relation among internal triangles.
    std::vector<std::vector<int>> components;
    std::vector<bool> grouped(internal.size(), false);
    for (std::size_t i = 0; i < internal.size(); ++i) {
        if (grouped[i]) continue;
        std::vector<int> comp{internal[i]};
        grouped[i] = true;
        for (std::size_t pos = 0; pos < comp.size(); ++pos)
            for (std::size_t j = 0; j < internal.size(); ++j) {
                if (grouped[j]) continue;
                VertexSet inter = labels[comp[pos]];
                inter &= labels[internal[j]];
                if (inter.count() >= 2) {
                    comp.push_back(internal[j]);
                    grouped[j] = true;
                }
            }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end());

    VertexSet kept = kg.all_vertices();
    std::vector<int> dominator(kn, -1);
    for (const auto& comp : components) {
        if (comp.size() >= 2) {
            for (std::size_t i = 1; i < comp.size(); ++i) {
                if (!are_twins(kg, comp[i], comp[0]))
                    throw invariant_violation(
                        "internal triangles sharing an edge are not twins in the clique graph");
                kept.reset(comp[i]);
                dominator[comp[i]] = comp[0];
            }
        } else {
            int t = comp[0];
            std::vector<int> tie = necktie_of(labels, labels[t]);
            int dom = -1;
            for (int ear : tie) {
                if (ear == t) continue;
                if (is_dominated(kg, t, ear)) {
                    dom = ear;
                    break;
                }
            }
            if (dom == -1)
                throw invariant_violation("no ear dominates internal triangle " +
                                          std::to_string(t) + " in the clique graph");
            kept.reset(t);
            dominator[t] = dom;
        }
    }

    result.retract = hash_retract(kg, kept, dominator);

    TraceBuilder tb(kg);
    std::vector<int> cur(kn);
    std::iota(cur.begin(), cur.end(), 0);
    for (const auto& comp : components) {
        if (comp.size() >= 2) {
            std::vector<int> removed;
            for (std::size_t i = 1; i < comp.size(); ++i) removed.push_back(cur[comp[i]]);
            std::sort(removed.begin(), removed.end());
            tb.twinclass(cur[comp[0]], removed);
            drop_from_map(cur, removed);
        } else {
            int cx = cur[comp[0]];
            tb.dom(cx, cur[dominator[comp[0]]]);
            drop_from_map(cur, {cx});
        }
    }
    if (!(tb.current == result.retract.h))
        throw invariant_violation("internal error: clique level trace mismatch");
    result.retract.trace = tb.finish();

    if (contains_induced_octahedron(result.retract.h))
        throw invariant_violation("clique level contraction left an induced octahedron");
    if (!triangles_in_unique_cliques(result.retract.h))
        throw invariant_violation("clique level contraction left a triangle in two cliques");
    return result;
}

WedgeReduction low_degree_reduce(const Graph& g) {
    if (!is_low_degree(g)) throw std::invalid_argument("requires a low degree graph");
    TraceBuilder tb(g);

    if (clique_number(tb.current) >= 5) {
        // The complete graph on 5 vertices is the only low degree graph
        // with a 5-clique; it collapses vertex by vertex.
        if (tb.current.vertex_count() != 5 || tb.current.edge_count() != 10)
            throw invariant_violation("clique number 5 in a low degree graph other than K_5");
        while (tb.current.vertex_count() > 1) tb.dom(0, 1);
    }

    for (;;) {
        CliqueList cliques = maximal_cliques(tb.current);
        int qi = -1;
        for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
            int c = cliques[i].count();
            if (c > 4)
                throw invariant_violation("clique larger than 4 during 4-clique elimination");
            if (c == 4) {
                qi = i;
                break;
            }
        }
        if (qi == -1) break;
        const VertexSet& q = cliques[qi];
        auto qm = q.members();

        int ax = -1;
        for (int v : qm)
            if (tb.current.neighbors(v).subset_of(q)) {
                ax = v;
                break;
            }
        if (ax != -1) {
            tb.dom(ax, qm[0] == ax ? qm[1] : qm[0]);
        } else {
            int bx = -1, by = -1;
            for (std::size_t i = 0; i < qm.size() && bx == -1; ++i)
                for (std::size_t j = i + 1; j < qm.size(); ++j) {
                    VertexSet shared = tb.current.neighbors(qm[i]);
                    shared &= tb.current.neighbors(qm[j]);
                    shared &= q.flipped();
                    if (shared.any()) {
                        bx = qm[i];
                        by = qm[j];
                        break;
                    }
                }
            if (bx != -1)
                tb.dom(bx, by);  // forced twins: both see q plus the shared vertex
            else
                tb.edge(qm[0], qm[1]);  // N[e] is exactly q here
        }
        guard_not_octahedron(tb.current, "4-clique elimination");
    }

    for (;;) {
        CliqueList cliques = maximal_cliques(tb.current);
        int max_size = 0;
        for (const VertexSet& q : cliques) max_size = std::max(max_size, q.count());
        if (max_size > 3)
            throw invariant_violation("clique larger than 3 during triangle elimination");
        if (max_size < 3) break;

        auto unique_edges = edges_in_unique_clique(tb.current, cliques);
        int eu = -1, ev = -1;
        for (const auto& [edge, idx] : unique_edges)
            if (cliques[idx].count() == 3) {
                eu = edge.first;
                ev = edge.second;
                break;
            }
        if (eu == -1)
            throw invariant_violation(
                "triangles remain but none has an edge in exactly one clique");
        tb.edge(eu, ev);
        guard_not_octahedron(tb.current, "triangle elimination");
    }

    if (!is_connected(tb.current))
        throw invariant_violation("reduction disconnected the graph");

    WedgeReduction out;
    out.triangle_free = tb.current;
    out.wedge_count = static_cast<long long>(tb.current.edge_count()) -
                      tb.current.vertex_count() + 1;
    out.trace = tb.finish();
    return out;
}

}  // namespace cliquetop
