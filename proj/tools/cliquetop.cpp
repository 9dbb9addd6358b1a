#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cliquetop/cliques.hpp"
#include "cliquetop/errors.hpp"
#include "cliquetop/generators.hpp"
#include "cliquetop/graph_io.hpp"
#include "cliquetop/harness.hpp"
#include "cliquetop/homology.hpp"
#include "cliquetop/isomorphism.hpp"
#include "cliquetop/reduce.hpp"

namespace {

using namespace cliquetop;

std::string slurp(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Graph read_graph(const std::string& path) {
    if (path.empty() || path == "-") return parse_graph_auto(slurp(std::cin));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    return parse_graph_auto(slurp(in));
}

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

std::string fmt_indices(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

int cmd_kgraph(const std::string& input) {
    Graph g = read_graph(input);
    CliqueGraphResult r = clique_graph(g);
    std::cout << emit_graph6(r.kg) << "\n";
    for (std::size_t i = 0; i < r.labels.size(); ++i)
        std::cout << "# " << i << " " << fmt_set(r.labels[i]) << "\n";
    return 0;
}

int cmd_iterate(const std::string& input, int steps, long long max_vertices) {
    Graph g = read_graph(input);
    IterationOutcome out = iterate_clique_graph(g, steps, max_vertices);
    std::cout << "sizes";
    for (long long s : out.sizes) std::cout << " " << s;
    std::cout << "\n";
    switch (out.status) {
        case IterationOutcome::Status::Completed:
            std::cout << "status completed\n";
            break;
        case IterationOutcome::Status::FixedPointDetected:
            std::cout << "status fixed-point step " << out.stop_step << "\n";
            break;
        case IterationOutcome::Status::BudgetExceeded:
            std::cout << "status budget-exceeded step " << out.stop_step << " cliques "
                      << out.budget_hit_count << "\n";
            break;
    }
    return 0;
}

int cmd_helly(const std::string& input) {
    Graph g = read_graph(input);
    HellyResult r = is_clique_helly(g);
    if (r.helly) {
        std::cout << "helly\n";
        return 0;
    }
    std::cout << "not-helly witness=" << fmt_set(r.witness->member_cliques) << "\n";
    return 1;
}

int cmd_classify_k2(const std::string& input) {
    Graph g = read_graph(input);
    CliqueList cliques = maximal_cliques(g);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        std::cout << "# clique " << i << " " << fmt_set(cliques[i]) << "\n";
    for (const K2VertexClass& cls : classify_k2_vertices(g, cliques)) {
        if (cls.is_star) {
            std::cout << "star vertices=" << fmt_indices(cls.star_vertices)
                      << " cliques=" << fmt_set(cls.member_cliques) << "\n";
        } else {
            std::cout << "necktie";
            if (cls.center) {
                std::cout << " center=" << fmt_set(*cls.center) << " ears=";
                for (std::size_t i = 0; i < cls.ears.size(); ++i) {
                    if (i) std::cout << ",";
                    std::cout << fmt_set(cls.ears[i]);
                }
            }
            std::cout << " cliques=" << fmt_set(cls.member_cliques) << "\n";
        }
    }
    return 0;
}

int cmd_reduce(const std::string& input, const std::string& pipeline,
               const std::string& trace_file) {
    Graph g = read_graph(input);
    std::string text;
    if (pipeline == "wedge") {
        WedgeReduction w = low_degree_reduce(g);
        text = "# wedge_count " + std::to_string(w.wedge_count) + "\n" +
               serialize_trace(w.trace);
    } else if (pipeline == "h4") {
        HashRetractResult h = build_h_invariance(g);
        text = serialize_trace(h.trace);
    } else if (pipeline == "h5") {
        CliqueLevelResult r = build_h_clique_level(g);
        text = "# reduces K(G) of the input\n" + serialize_trace(r.retract.trace);
    } else if (pipeline == "dismantle") {
        DismantleResult d = dismantle(g);
        text = std::string("# dismantlable ") + (d.dismantlable ? "true" : "false") + "\n" +
               serialize_trace(d.trace);
    } else {
        throw std::invalid_argument("unknown pipeline " + pipeline);
    }
    std::cout << text;
    if (!trace_file.empty()) {
        std::ofstream out(trace_file);
        if (!out) throw std::invalid_argument("cannot open trace file " + trace_file);
        out << text;
    }
    return 0;
}

int cmd_betti(const std::string& input) {
    Graph g = read_graph(input);
    std::cout << format_signature(homotopy_signature(g)) << "\n";
    return 0;
}

int cmd_gen(const std::string& family, int param) {
    Graph g;
    if (family == "octahedron")
        g = gen_octahedron(param);
    else if (family == "cycle")
        g = gen_cycle(param);
    else if (family == "complete")
        g = gen_complete(param);
    else if (family == "sun3")
        g = gen_sun3();
    else
        throw std::invalid_argument("unknown family " + family);
    std::cout << emit_graph6(g) << "\n";
    return 0;
}

int cmd_verify(int max_n, int max_degree, bool include_octahedron, bool no_dedup,
               const std::string& input_file, int jobs, const std::string& out_file) {
    CorpusSpec spec;
    spec.max_n = max_n;
    spec.max_degree = max_degree;
    spec.dedup = !no_dedup;
    spec.include_octahedron = include_octahedron;
    if (!input_file.empty()) spec.input_file = input_file;

    CorpusSummary summary;
    if (out_file.empty()) {
        summary = run_corpus(spec, all_checks(), jobs, std::cout);
    } else {
        std::ofstream out(out_file);
        if (!out) throw std::invalid_argument("cannot open output file " + out_file);
        summary = run_corpus(spec, all_checks(), jobs, out);
    }
    std::cerr << "verified " << summary.total << " graphs, " << summary.failed
              << " failed\n";
    return summary.failed == 0 ? 0 : 1;
}

int cmd_iso(const std::string& a_path, const std::string& b_path) {
    if ((a_path.empty() || a_path == "-") && (b_path.empty() || b_path == "-"))
        throw std::invalid_argument("at most one of the two graphs can come from stdin");
    Graph a = read_graph(a_path);
    Graph b = read_graph(b_path);

    if (a.vertex_count() <= kExactIsoLimit && b.vertex_count() <= kExactIsoLimit) {
        bool iso = is_isomorphic(a, b);
        std::cout << (iso ? "isomorphic" : "non-isomorphic") << "\n";
        return iso ? 0 : 1;
    }
    auto oa = octahedron_order(a), ob = octahedron_order(b);
    if (oa && ob) {
        bool iso = *oa == *ob;
        std::cout << (iso ? "isomorphic" : "non-isomorphic") << "\n";
        return iso ? 0 : 1;
    }
    if (!same_invariants(a, b)) {
        std::cout << "non-isomorphic\n";
        return 1;
    }
    std::cerr << "graphs are too large for exact isomorphism and are not octahedra\n";
    std::cout << "indeterminate\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique graphs, clique complexes, and homotopy reductions"};
    app.require_subcommand(1);

    std::string input;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "graph6 or edge-list file (default: stdin)");
    };

    auto* kgraph = app.add_subcommand("kgraph", "emit the clique graph K(G) with labels");
    add_input(kgraph);

    auto* iterate = app.add_subcommand("iterate", "iterate the clique graph operator");
    add_input(iterate);
    int steps = 0;
    long long max_vertices = 0;
    iterate->add_option("--steps", steps, "number of iterations")->required();
    iterate->add_option("--max-vertices", max_vertices, "bound on any iterate's size")
        ->required();

    auto* helly = app.add_subcommand("helly", "test the clique-Helly property");
    add_input(helly);

    auto* classify = app.add_subcommand("classify-k2",
                                        "classify cliques of K(G) as stars or neckties");
    add_input(classify);

    auto* reduce = app.add_subcommand("reduce", "run a homotopy-preserving reduction");
    add_input(reduce);
    std::string pipeline = "wedge";
    reduce->add_option("--pipeline", pipeline, "wedge | h4 | h5 | dismantle")
        ->check(CLI::IsMember({"wedge", "h4", "h5", "dismantle"}));
    std::string trace_file;
    reduce->add_option("--trace", trace_file, "also write the trace to this file");

    auto* betti = app.add_subcommand("betti", "homotopy signature of the clique complex");
    add_input(betti);

    auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
    std::string family;
    int param = 0;
    gen->add_option("--family", family, "octahedron | cycle | complete | sun3")->required();
    gen->add_option("--param", param, "family size parameter");

    auto* verify = app.add_subcommand("verify", "run theorem checks over a corpus");
    int max_n = 6, max_degree = 4, jobs = 0;
    bool include_octahedron = false, no_dedup = false;
    std::string verify_input, out_file;
    verify->add_option("--max-n", max_n, "largest vertex count to enumerate");
    verify->add_option("--max-degree", max_degree, "degree bound (0 = unbounded)");
    verify->add_option("--input", verify_input, "graph6 corpus file instead of enumeration");
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify->add_option("--out", out_file, "JSONL report file (default: stdout)");
    verify->add_flag("--include-octahedron", include_octahedron,
                     "keep the octahedron O_3 in generated corpora");
    verify->add_flag("--no-dedup", no_dedup, "emit every labeled graph");

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
    std::string iso_a, iso_b;
    iso->add_option("a", iso_a, "first graph file, or - for stdin")->required();
    iso->add_option("b", iso_b, "second graph file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kgraph->parsed()) return cmd_kgraph(input);
        if (iterate->parsed()) return cmd_iterate(input, steps, max_vertices);
        if (helly->parsed()) return cmd_helly(input);
        if (classify->parsed()) return cmd_classify_k2(input);
        if (reduce->parsed()) return cmd_reduce(input, pipeline, trace_file);
        if (betti->parsed()) return cmd_betti(input);
        if (gen->parsed()) return cmd_gen(family, param);
        if (verify->parsed())
            return cmd_verify(max_n, max_degree, include_octahedron, no_dedup, verify_input,
                              jobs, out_file);
        if (iso->parsed()) return cmd_iso(iso_a, iso_b);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
