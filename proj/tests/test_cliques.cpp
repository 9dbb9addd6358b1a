#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <stdexcept>

#include "cliquetop/cliques.hpp"
#include "cliquetop/errors.hpp"
#include "cliquetop/generators.hpp"
#include "cliquetop/harness.hpp"
#include "cliquetop/isomorphism.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cliquetop;
using namespace cliquetop::testutil;

namespace {

// Exponential reference enumerator: every subset, kept when complete and
// not extendable.
CliqueList brute_force_cliques(const Graph& g) {
    int n = g.vertex_count();
    REQUIRE(n <= 16);
    auto complete = [&](unsigned mask) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v)) return false;
        return true;
    };
    CliqueList out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!complete(mask)) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w)
            if (!(mask >> w & 1) && complete(mask | (1u << w))) maximal = false;
        if (!maximal) continue;
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.set(v);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), Bitset::lex_less);
    return out;
}

}  // namespace

TEST_CASE("maximal cliques agree with the subset-enumeration reference") {
    for (const Graph& g : connected_graphs(5)) CHECK(maximal_cliques(g) == brute_force_cliques(g));
    CHECK(maximal_cliques(gen_octahedron(3)) == brute_force_cliques(gen_octahedron(3)));
    CHECK(maximal_cliques(two_tetrahedra()) == brute_force_cliques(two_tetrahedra()));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        CHECK(maximal_cliques(g) == brute_force_cliques(g));
    }
}

TEST_CASE("maximal cliques rejects the empty graph") {
    CHECK_THROWS_AS(maximal_cliques(Graph(0)), empty_graph_error);
}

TEST_CASE("clique list is lexicographically sorted") {
    CliqueList cl = maximal_cliques(gen_sun3());
    REQUIRE(cl.size() == 4);
    CHECK(cl[0] == vs(6, {0, 1, 2}));
    CHECK(cl[1] == vs(6, {0, 1, 3}));
    CHECK(cl[2] == vs(6, {0, 2, 5}));
    CHECK(cl[3] == vs(6, {1, 2, 4}));

    CliqueList oct = maximal_cliques(gen_octahedron(3));
    REQUIRE(oct.size() == 8);
    CHECK(oct[0] == vs(6, {0, 2, 4}));
    CHECK(oct[7] == vs(6, {1, 3, 5}));
}

TEST_CASE("clique number") {
    CHECK(clique_number(Graph(0)) == 0);
    CHECK(clique_number(gen_complete(1)) == 1);
    CHECK(clique_number(gen_cycle(5)) == 2);
    CHECK(clique_number(gen_sun3()) == 3);
    CHECK(clique_number(two_tetrahedra()) == 4);
    CHECK(clique_number(petersen()) == 2);
}

TEST_CASE("clique graph of the sun is complete") {
    CliqueGraphResult r = clique_graph(gen_sun3());
    CHECK(r.kg == gen_complete(4));
    CHECK(r.labels == maximal_cliques(gen_sun3()));
}

TEST_CASE("clique graph of the octahedron doubles the matching") {
    CliqueGraphResult r = clique_graph(gen_octahedron(3));
    CHECK(r.kg.vertex_count() == 8);
    CHECK(octahedron_order(r.kg) == 4);
}

TEST_CASE("clique graph of a path") {
    CliqueGraphResult r = clique_graph(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(r.kg == make_graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("iteration records the divergent octahedron trajectory") {
    IterationOutcome out = iterate_clique_graph(gen_octahedron(3), 3, 300);
    CHECK(out.sizes == std::vector<long long>{6, 8, 16, 256});
    CHECK(out.status == IterationOutcome::Status::Completed);
    CHECK(out.stop_step == 3);
    REQUIRE(out.retained.size() == 4);
    REQUIRE(out.retained[1].has_value());
    CHECK(octahedron_order(*out.retained[1]) == 4);
    REQUIRE(out.retained[3].has_value());
    CHECK(octahedron_order(*out.retained[3]) == 128);
}

TEST_CASE("iteration starts from the input graph itself") {
    IterationOutcome out = iterate_clique_graph(gen_complete(5), 2, 300);
    CHECK(out.sizes == std::vector<long long>{5, 1, 1});
    CHECK(out.status == IterationOutcome::Status::Completed);
}

TEST_CASE("iteration detects fixed points early") {
    IterationOutcome out = iterate_clique_graph(gen_complete(5), 5, 300);
    CHECK(out.sizes == std::vector<long long>{5, 1, 1});
    CHECK(out.status == IterationOutcome::Status::FixedPointDetected);
    CHECK(out.stop_step == 2);

    IterationOutcome sun = iterate_clique_graph(gen_sun3(), 4, 300);
    CHECK(sun.sizes == std::vector<long long>{6, 4, 1, 1});
    CHECK(sun.status == IterationOutcome::Status::FixedPointDetected);
}

TEST_CASE("iteration stops at the vertex budget") {
    IterationOutcome out = iterate_clique_graph(gen_octahedron(3), 3, 100);
    CHECK(out.sizes == std::vector<long long>{6, 8, 16});
    CHECK(out.status == IterationOutcome::Status::BudgetExceeded);
    CHECK(out.stop_step == 3);
    CHECK(out.budget_hit_count >= 100);
}

TEST_CASE("iteration argument validation") {
    CHECK_THROWS_AS(iterate_clique_graph(gen_sun3(), -1, 300), std::invalid_argument);
    CHECK_THROWS_AS(iterate_clique_graph(gen_sun3(), 2, 5), std::invalid_argument);
}

TEST_CASE("stars of vertices") {
    Graph s3 = gen_sun3();
    CliqueList cl = maximal_cliques(s3);
    CHECK(star_of(s3, cl, 0) == std::vector<int>{0, 1, 2});
    CHECK(star_of(s3, cl, 3) == std::vector<int>{1});
    CHECK(star_of(s3, cl, 4) == std::vector<int>{3});
}

TEST_CASE("normal vertices") {
    // every star of C_4 is a maximal complete subgraph of K(C_4)
    for (int v = 0; v < 4; ++v) CHECK(is_normal_vertex(gen_cycle(4), v));
    // in the sun all four cliques pairwise intersect, so no star is maximal
    for (int v = 0; v < 6; ++v) CHECK_FALSE(is_normal_vertex(gen_sun3(), v));
    CHECK(is_normal_vertex(gen_complete(3), 0));
}

TEST_CASE("k2 vertex classification of the sun") {
    Graph s3 = gen_sun3();
    CliqueList cl = maximal_cliques(s3);
    std::vector<K2VertexClass> classes = classify_k2_vertices(s3, cl);
    REQUIRE(classes.size() == 1);  // K(sun) = K_4 has one maximal clique
    const K2VertexClass& q = classes[0];
    CHECK_FALSE(q.is_star);
    CHECK(q.member_cliques == vs(4, {0, 1, 2, 3}));
    REQUIRE(q.center.has_value());
    CHECK(*q.center == vs(6, {0, 1, 2}));
    REQUIRE(q.ears.size() == 3);
    CHECK(q.ears[0] == vs(6, {0, 1, 3}));
    CHECK(q.ears[1] == vs(6, {0, 2, 5}));
    CHECK(q.ears[2] == vs(6, {1, 2, 4}));
    CHECK(q.star_vertices.empty());
}

TEST_CASE("k2 vertex classification of the octahedron") {
    Graph o3 = gen_octahedron(3);
    std::vector<K2VertexClass> classes = classify_k2_vertices(o3, maximal_cliques(o3));
    int stars = 0, neckties = 0;
    for (const auto& c : classes) (c.is_star ? stars : neckties)++;
    CHECK(stars == 6);
    CHECK(neckties == 10);
    for (const auto& c : classes)
        if (c.is_star) {
            CHECK(c.member_cliques.count() == 4);  // each vertex lies in 4 triangles
            CHECK(c.star_vertices.size() == 1);
        }
}

TEST_CASE("clique-Helly detection") {
    CHECK(is_clique_helly(gen_cycle(4)).helly);
    CHECK(is_clique_helly(gen_complete(4)).helly);
    CHECK(is_clique_helly(gen_cycle(7)).helly);
    CHECK(is_clique_helly(two_tetrahedra()).helly);

    HellyResult s = is_clique_helly(gen_sun3());
    CHECK_FALSE(s.helly);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->member_cliques == vs(4, {0, 1, 2, 3}));

    CHECK_FALSE(is_clique_helly(gen_octahedron(3)).helly);
}

TEST_CASE("internal triangles") {
    CHECK(internal_triangles(maximal_cliques(gen_sun3())) == std::vector<int>{0});
    CHECK(internal_triangles(maximal_cliques(gen_cycle(5))).empty());
    CHECK(internal_triangles(maximal_cliques(gen_complete(4))).empty());
    CHECK(internal_triangles(maximal_cliques(gen_octahedron(3))).size() == 8);
    CHECK(internal_triangles(maximal_cliques(twin_triangle_graph())) == std::vector<int>{0, 1});
}

TEST_CASE("neckties around internal triangles") {
    CliqueList cl = maximal_cliques(gen_sun3());
    CHECK(necktie_of(cl, vs(6, {0, 1, 2})) == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(necktie_of(cl, vs(6, {0, 1, 3})), invariant_violation);

    CliqueList tl = maximal_cliques(twin_triangle_graph());
    CHECK(necktie_of(tl, vs(6, {0, 1, 2})).size() == 4);
}

TEST_CASE("induced octahedron detection") {
    CHECK(contains_induced_octahedron(gen_octahedron(3)));
    CHECK(contains_induced_octahedron(gen_octahedron(4)));
    CHECK_FALSE(contains_induced_octahedron(gen_complete(6)));  // subgraph but not induced
    CHECK_FALSE(contains_induced_octahedron(gen_sun3()));
    CHECK_FALSE(contains_induced_octahedron(gen_cycle(7)));
    CHECK_FALSE(contains_induced_octahedron(petersen()));

    Graph pendant = gen_octahedron(3);
    Graph bigger(7);
    for (auto [u, v] : pendant.edges()) bigger.add_edge(u, v);
    bigger.add_edge(0, 6);
    CHECK(contains_induced_octahedron(bigger));
}

TEST_CASE("triangles in unique cliques") {
    CHECK(triangles_in_unique_cliques(gen_sun3()));
    CHECK(triangles_in_unique_cliques(gen_complete(4)));
    CHECK(triangles_in_unique_cliques(gen_octahedron(3)));
    CHECK(triangles_in_unique_cliques(gen_cycle(5)));           // vacuously
    CHECK_FALSE(triangles_in_unique_cliques(two_tetrahedra())); // {0,1,2} is in both
}

TEST_CASE("edges lying in exactly one clique") {
    Graph s3 = gen_sun3();
    auto unique_edges = edges_in_unique_clique(s3, maximal_cliques(s3));
    REQUIRE(unique_edges.size() == 6);
    CHECK(unique_edges[0] == std::pair<std::pair<int, int>, int>{{0, 3}, 1});
    CHECK(unique_edges[1] == std::pair<std::pair<int, int>, int>{{0, 5}, 2});
    CHECK(unique_edges[5] == std::pair<std::pair<int, int>, int>{{2, 5}, 2});

    Graph k4 = gen_complete(4);
    CHECK(edges_in_unique_clique(k4, maximal_cliques(k4)).size() == 6);
    Graph c4 = gen_cycle(4);
    CHECK(edges_in_unique_clique(c4, maximal_cliques(c4)).size() == 4);
}
