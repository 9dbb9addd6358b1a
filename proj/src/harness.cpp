#include "cliquetop/harness.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <tuple>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "cliquetop/cliques.hpp"
#include "cliquetop/errors.hpp"
#include "cliquetop/generators.hpp"
#include "cliquetop/graph_io.hpp"
#include "cliquetop/homology.hpp"
#include "cliquetop/isomorphism.hpp"
#include "cliquetop/reduce.hpp"

namespace cliquetop {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_set(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::pair<bool, std::string> check_k2_helly(const Graph& g) {
    Graph k1 = clique_graph(g).kg;
    Graph k2 = clique_graph(k1).kg;
    HellyResult r = is_clique_helly(k2);
    if (r.helly) return {true, ""};
    return {false, "clique of K^2 with empty total intersection: " +
                       fmt_set(r.witness->member_cliques)};
}

std::pair<bool, std::string> check_kg_o3_free(const Graph& g) {
    if (contains_induced_octahedron(clique_graph(g).kg))
        return {false, "K(G) contains an induced octahedron"};
    return {true, ""};
}

std::pair<bool, std::string> check_signatures_equal(const Graph& g) {
    Graph k1 = clique_graph(g).kg;
    Graph k2 = clique_graph(k1).kg;
    HomotopySignature s0 = homotopy_signature(g);
    HomotopySignature s1 = homotopy_signature(k1);
    HomotopySignature s2 = homotopy_signature(k2);
    if (s0 == s1 && s1 == s2) return {true, ""};
    return {false, "G: " + format_signature(s0) + "; K: " + format_signature(s1) +
                       "; K^2: " + format_signature(s2)};
}

std::pair<bool, std::string> check_wedge_reduce(const Graph& g) {
    WedgeReduction w = low_degree_reduce(g);
    replay(w.trace);
    if (clique_number(w.triangle_free) >= 3)
        return {false, "reduction output still has a triangle"};
    HomotopySignature sig = homotopy_signature(g);
    long long b1 = sig.betti.size() > 1 ? sig.betti[1] : 0;
    if (w.wedge_count != b1)
        return {false, "wedge count " + std::to_string(w.wedge_count) + " but b_1 = " +
                           std::to_string(b1)};
    return {true, ""};
}

std::pair<bool, std::string> check_betti_tail_zero(const Graph& g) {
    HomotopySignature sig = homotopy_signature(g);
    if (sig.betti.size() > 2) return {false, format_signature(sig)};
    return {true, ""};
}

std::pair<bool, std::string> check_h_invariance(const Graph& g) {
    HashRetractResult h = build_h_invariance(g);
    HomotopySignature sg = homotopy_signature(g);
    HomotopySignature sh = homotopy_signature(h.h);
    if (sg == sh) return {true, ""};
    return {false, "H: " + format_signature(sh) + " but G: " + format_signature(sg)};
}

std::pair<bool, std::string> check_h_clique_level(const Graph& g) {
    CliqueLevelResult r = build_h_clique_level(g);
    HomotopySignature sk = homotopy_signature(r.base.kg);
    HomotopySignature sh = homotopy_signature(r.retract.h);
    if (sk == sh) return {true, ""};
    return {false, "H: " + format_signature(sh) + " but K(G): " + format_signature(sk)};
}

std::pair<bool, std::string> check_necktie_shape(const Graph& g) {
    CliqueList cliques = maximal_cliques(g);
    classify_k2_vertices(g, cliques);  // throws on a shape breach
    return {true, ""};
}

std::pair<bool, std::string> run_check(Check check, const Graph& g) {
    switch (check) {
        case Check::K2Helly: return check_k2_helly(g);
        case Check::KgO3Free: return check_kg_o3_free(g);
        case Check::SignaturesEqual: return check_signatures_equal(g);
        case Check::WedgeReduce: return check_wedge_reduce(g);
        case Check::BettiTailZero: return check_betti_tail_zero(g);
        case Check::HInvariance: return check_h_invariance(g);
        case Check::HCliqueLevel: return check_h_clique_level(g);
        case Check::NecktieShape: return check_necktie_shape(g);
    }
    return {false, "unknown check"};
}

}  // namespace

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks{
        Check::K2Helly,     Check::KgO3Free,      Check::SignaturesEqual,
        Check::WedgeReduce, Check::BettiTailZero, Check::HInvariance,
        Check::HCliqueLevel, Check::NecktieShape,
    };
    return checks;
}

std::string check_name(Check check) {
    switch (check) {
        case Check::K2Helly: return "k2_helly";
        case Check::KgO3Free: return "kg_o3_free";
        case Check::SignaturesEqual: return "signatures_equal";
        case Check::WedgeReduce: return "wedge_reduce";
        case Check::BettiTailZero: return "betti_tail_zero";
        case Check::HInvariance: return "h_invariance";
        case Check::HCliqueLevel: return "h_clique_level";
        case Check::NecktieShape: return "necktie_shape";
    }
    return "unknown";
}

bool GraphReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto& c) { return c.second.pass; });
}

GraphReport verify_graph(const Graph& g, const std::vector<Check>& checks,
                         std::chrono::milliseconds budget) {
    GraphReport report;
    report.graph6 = emit_graph6(g);
    report.n = g.vertex_count();
    report.m = g.edge_count();
    const bool low = is_low_degree(g);
    const auto deadline = Clock::now() + budget;

    for (Check check : checks) {
        CheckResult result;
        auto t0 = Clock::now();
        if (t0 >= deadline) {
            result.pass = false;
            result.witness = "timeout";
        } else if (!low) {
            result.pass = false;
            result.witness = "not low degree";
        } else {
            try {
                std::tie(result.pass, result.witness) = run_check(check, g);
            } catch (const std::exception& e) {
                result.pass = false;
                result.witness = e.what();
            }
            result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                            .count();
        }
        report.checks.emplace_back(check_name(check), result);
    }
    return report;
}

namespace {

std::string invariant_key(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> profiles(n);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v).members()) profiles[v].push_back(g.degree(u));
        std::sort(profiles[v].begin(), profiles[v].end());
        profiles[v].insert(profiles[v].begin(), g.degree(v));
    }
    std::sort(profiles.begin(), profiles.end());
    std::string key = std::to_string(n) + "|" + std::to_string(g.edge_count());
    for (const auto& p : profiles) {
        key += "|";
        for (int d : p) key += std::to_string(d) + ".";
    }
    return key;
}

struct CorpusGenerator {
    int n;
    int max_degree;          // <= 0: unbounded
    bool include_octahedron;
    bool dedup;
    std::map<std::string, std::vector<Graph>>& buckets;
    std::vector<Graph>& out;

    Graph g;
    std::vector<int> deg;

    void leaf() {
        if (!is_connected(g)) return;
        if (!include_octahedron && octahedron_order(g) == 3) return;
        if (dedup) {
            auto& reps = buckets[invariant_key(g)];
            for (const Graph& r : reps)
                if (is_isomorphic(r, g)) return;
            reps.push_back(g);
        }
        out.push_back(g);
    }

    void rec(int v) {
        if (v == n) {
            leaf();
            return;
        }
        for (unsigned mask = 0; mask < (1u << v); ++mask) {
            int bits = std::popcount(mask);
            if (max_degree > 0 && bits > max_degree) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if ((mask >> u) & 1u) {
                    if (max_degree > 0 && deg[u] + 1 > max_degree) ok = false;
                }
            if (!ok) continue;
            for (int u = 0; u < v; ++u)
                if ((mask >> u) & 1u) {
                    g.add_edge(u, v);
                    ++deg[u];
                    ++deg[v];
                }
            rec(v + 1);
            for (int u = 0; u < v; ++u)
                if ((mask >> u) & 1u) {
                    g.drop_edge(u, v);
                    --deg[u];
                    --deg[v];
                }
        }
    }
};

}  // namespace

std::vector<Graph> connected_graphs(int max_n, int max_degree, bool include_octahedron) {
    if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
    if (max_n > 8)
        throw std::invalid_argument("generated corpora are limited to max_n <= 8");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::string, std::vector<Graph>> buckets;
        CorpusGenerator gen{n, max_degree, include_octahedron, true, buckets, out,
                            Graph(n), std::vector<int>(n, 0)};
        gen.rec(1);
    }
    return out;
}

std::vector<CorpusItem> enumerate_corpus(const CorpusSpec& spec) {
    std::vector<CorpusItem> items;
    if (spec.input_file) {
        std::ifstream in(*spec.input_file);
        if (!in) throw std::runtime_error("cannot open corpus file " + *spec.input_file);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            CorpusItem item;
            item.graph6 = line;
            item.line_no = line_no;
            try {
                item.graph = parse_graph6(line);
            } catch (const std::exception& e) {
                item.parse_error_msg = e.what();
            }
            items.push_back(std::move(item));
        }
        return items;
    }

    if (spec.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
    if (spec.max_n > 8)
        throw std::invalid_argument("generated corpora are limited to max_n <= 8");
    std::vector<Graph> graphs;
    for (int n = 1; n <= spec.max_n; ++n) {
        std::map<std::string, std::vector<Graph>> buckets;
        CorpusGenerator gen{n,       spec.max_degree, spec.include_octahedron,
                            spec.dedup, buckets,     graphs,
                            Graph(n), std::vector<int>(n, 0)};
        gen.rec(1);
    }
    items.reserve(graphs.size());
    for (Graph& g : graphs) {
        CorpusItem item;
        item.graph6 = emit_graph6(g);
        item.graph = std::move(g);
        items.push_back(std::move(item));
    }
    return items;
}

CorpusSummary run_corpus(const CorpusSpec& spec, const std::vector<Check>& checks, int jobs,
                         std::ostream& out, std::chrono::milliseconds budget) {
    std::vector<CorpusItem> items = enumerate_corpus(spec);
    std::vector<GraphReport> reports(items.size());

    auto process = [&](std::size_t i) {
        const CorpusItem& item = items[i];
        if (item.graph) {
            reports[i] = verify_graph(*item.graph, checks, budget);
        } else {
            GraphReport r;
            r.graph6 = item.graph6;
            CheckResult res;
            res.pass = false;
            res.witness = "line " + std::to_string(item.line_no) + ": " + item.parse_error_msg;
            r.checks.emplace_back("parse", res);
            reports[i] = std::move(r);
        }
    };

#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i)
        process(static_cast<std::size_t>(i));
#else
    (void)jobs;
    for (std::size_t i = 0; i < items.size(); ++i) process(i);
#endif

    CorpusSummary summary;
    summary.total = static_cast<long long>(reports.size());
    for (Check c : checks) summary.failed_by_check[check_name(c)] = 0;

    for (const GraphReport& r : reports) {
        nlohmann::ordered_json rec;
        rec["graph6"] = r.graph6;
        rec["n"] = r.n;
        rec["m"] = r.m;
        nlohmann::ordered_json checks_json = nlohmann::ordered_json::object();
        bool any_fail = false;
        for (const auto& [name, res] : r.checks) {
            nlohmann::ordered_json c;
            c["pass"] = res.pass;
            c["witness"] = res.witness.empty() ? nlohmann::ordered_json(nullptr)
                                               : nlohmann::ordered_json(res.witness);
            c["ms"] = res.ms;
            checks_json[name] = std::move(c);
            if (!res.pass) {
                any_fail = true;
                ++summary.failed_by_check[name];
            }
        }
        rec["checks"] = std::move(checks_json);
        if (any_fail) ++summary.failed;
        out << rec.dump() << "\n";
    }

    nlohmann::ordered_json tail;
    tail["total"] = summary.total;
    tail["failed"] = summary.failed;
    nlohmann::ordered_json by_check = nlohmann::ordered_json::object();
    for (const auto& [name, count] : summary.failed_by_check) by_check[name] = count;
    tail["by_check"] = std::move(by_check);
    out << tail.dump() << "\n";
    return summary;
}

}  // namespace cliquetop
