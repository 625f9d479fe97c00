#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "triangulex/chordal.hpp"
#include "triangulex/gen.hpp"
#include "triangulex/graph.hpp"
#include "triangulex/io.hpp"

using namespace triangulex;

TEST_CASE("construction rejects bad edges and collapses duplicates") {
    REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    REQUIRE(g.m() == 2);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 0));
    REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("neighborhood of a set") {
    Graph c5 = cycle_graph(5);
    VertexSet s(5);
    s.set(0);
    REQUIRE(c5.neighborhood(s).to_string() == "{1,4}");
    s.set(1);
    REQUIRE(c5.neighborhood(s).to_string() == "{2,4}");
    REQUIRE(c5.neighborhood(VertexSet(5)).empty());
    REQUIRE(c5.closed_neighborhood(s).to_string() == "{0,1,2,4}");
}

TEST_CASE("connected components are ordered by minimum vertex") {
    Graph p4 = path_graph(4);
    VertexSet domain = p4.vertices();
    domain.reset(1);
    auto comps = p4.connected_components(domain);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0].to_string() == "{0}");
    REQUIRE(comps[1].to_string() == "{2,3}");

    auto all = empty_graph(3).connected_components();
    REQUIRE(all.size() == 3);
    REQUIRE(cycle_graph(4).connected_components().size() == 1);
    REQUIRE(Graph().connected_components().empty());
}

TEST_CASE("is_clique") {
    Graph k4 = complete_graph(4);
    REQUIRE(k4.is_clique(k4.vertices()));
    Graph c4 = cycle_graph(4);
    VertexSet e(4);
    e.set(0);
    e.set(1);
    REQUIRE(c4.is_clique(e));
    VertexSet diag(4);
    diag.set(0);
    diag.set(2);
    REQUIRE_FALSE(c4.is_clique(diag));
    REQUIRE(c4.is_clique(VertexSet(4)));
    REQUIRE(c4.is_clique(VertexSet::single(4, 2)));
}

TEST_CASE("induced subgraph keeps edges and reports the vertex map") {
    Graph c5 = cycle_graph(5);
    VertexSet s(5);
    s.set(1);
    s.set(2);
    s.set(4);
    auto [h, map] = c5.induced_subgraph(s);
    REQUIRE(h.n() == 3);
    REQUIRE(map == std::vector<int>{1, 2, 4});
    REQUIRE(h.m() == 1);  // only 1-2 survives
    REQUIRE(h.has_edge(0, 1));
}

TEST_CASE("chordality on fixed graphs") {
    REQUIRE(is_chordal(path_graph(6)));
    REQUIRE(is_chordal(complete_graph(5)));
    REQUIRE(is_chordal(empty_graph(4)));
    REQUIRE(is_chordal(Graph()));
    REQUIRE(is_chordal(cycle_graph(3)));
    REQUIRE_FALSE(is_chordal(cycle_graph(4)));
    REQUIRE_FALSE(is_chordal(cycle_graph(6)));
    REQUIRE_FALSE(is_chordal(petersen()));
    // C4 plus one chord is chordal.
    REQUIRE(is_chordal(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
}

TEST_CASE("chordality agrees with induced-cycle search on all graphs up to n=7") {
    for (int n = 0; n <= 7; ++n) {
        uint32_t total = 1u << tsup::pair_count(n);
        for (uint32_t mask = 0; mask < total; ++mask) {
            bool lib = is_chordal(tsup::graph_from_mask(n, mask));
            bool ref = tsup::tiny_is_chordal(tsup::tiny_from_mask(n, mask));
            if (lib != ref) {
                INFO("n=" << n << " mask=" << mask);
                REQUIRE(lib == ref);
            }
        }
    }
}

TEST_CASE("maximal cliques of chordal graphs") {
    auto cliques = maximal_cliques_of_chordal(complete_graph(4));
    REQUIRE(cliques.size() == 1);
    REQUIRE(cliques[0].count() == 4);

    auto path_cliques = maximal_cliques_of_chordal(path_graph(4));
    REQUIRE(path_cliques.size() == 3);
    for (const auto& c : path_cliques) REQUIRE(c.count() == 2);

    Graph two_tri(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto tri = maximal_cliques_of_chordal(two_tri);
    REQUIRE(tri.size() == 2);
    REQUIRE(tri[0].count() == 3);
    REQUIRE(tri[1].count() == 3);
}

TEST_CASE("fill-in produces a chordal supergraph; minimization keeps it minimal") {
    Graph c6 = cycle_graph(6);
    std::vector<int> order{0, 1, 2, 3, 4, 5};
    Graph tri = fill_in(c6, order);
    REQUIRE(is_chordal(tri));
    REQUIRE(tri.m() >= c6.m());
    Graph minimal = minimize_triangulation(c6, tri);
    REQUIRE(is_chordal(minimal));
    // A minimal triangulation of C6 has exactly 3 fill edges? No: C_n needs
    // n-3 chords, so 3 fill edges for C6.
    REQUIRE(minimal.m() == c6.m() + 3);
    for (auto [u, v] : c6.edges()) REQUIRE(minimal.has_edge(u, v));
}

TEST_CASE("dimacs parsing") {
    Graph g = parse_graph("c a comment\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    REQUIRE(g.n() == 4);
    REQUIRE(g.m() == 4);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(3, 0));

    SECTION("errors carry line numbers") {
        try {
            parse_graph("p edge 3 1\ne 1 4\n", GraphFormat::dimacs);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            REQUIRE(e.line == 2);
            REQUIRE(std::string(e.what()).find("out of range") != std::string::npos);
        }
        try {
            parse_graph("c x\np edge 3\n", GraphFormat::dimacs);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            REQUIRE(e.line == 2);
        }
        REQUIRE_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), parse_error);
        REQUIRE_THROWS_AS(parse_graph("p edge 3 1\ne 2 2\n", GraphFormat::dimacs), parse_error);
        REQUIRE_THROWS_AS(parse_graph("", GraphFormat::dimacs), parse_error);
        REQUIRE_THROWS_AS(parse_graph("p edge 2 0\nq\n", GraphFormat::dimacs), parse_error);
    }
}

TEST_CASE("edgelist parsing") {
    Graph g = parse_graph("# comment\n0 1\n\n1 2\n3 1\n", GraphFormat::edgelist);
    REQUIRE(g.n() == 4);
    REQUIRE(g.m() == 3);
    REQUIRE(g.has_edge(1, 3));
    REQUIRE(parse_graph("", GraphFormat::edgelist).n() == 0);
    REQUIRE_THROWS_AS(parse_graph("0 0\n", GraphFormat::edgelist), parse_error);
    REQUIRE_THROWS_AS(parse_graph("1 -2\n", GraphFormat::edgelist), parse_error);
    REQUIRE_THROWS_AS(parse_graph("0 1 2\n", GraphFormat::edgelist), parse_error);
}

TEST_CASE("format sniffing and round trips") {
    std::string dim = serialize_graph(petersen(), GraphFormat::dimacs);
    REQUIRE(sniff_format(dim) == GraphFormat::dimacs);
    Graph back = parse_graph(dim);
    REQUIRE(back.n() == 10);
    REQUIRE(back.m() == 15);
    for (auto [u, v] : petersen().edges()) REQUIRE(back.has_edge(u, v));

    std::string el = serialize_graph(cycle_graph(5), GraphFormat::edgelist);
    REQUIRE(sniff_format(el) == GraphFormat::edgelist);
    Graph c5 = parse_graph(el);
    REQUIRE(c5.n() == 5);
    REQUIRE(c5.m() == 5);

    // Round trip preserves graphs drawn at random.
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_gnp(9, 0.4, seed);
        Graph h = parse_graph(serialize_graph(g, GraphFormat::dimacs));
        REQUIRE(h.n() == g.n());
        REQUIRE(h.m() == g.m());
        for (auto [u, v] : g.edges()) REQUIRE(h.has_edge(u, v));
    }
}

TEST_CASE("generators have the expected shapes") {
    Graph p = petersen();
    REQUIRE(p.n() == 10);
    REQUIRE(p.m() == 15);
    for (int v = 0; v < 10; ++v) REQUIRE(p.degree(v) == 3);

    REQUIRE(complete_bipartite(2, 3).m() == 6);
    REQUIRE(path_graph(1).m() == 0);
    REQUIRE(random_gnp(10, 0.0, 1).m() == 0);
    REQUIRE(random_gnp(10, 1.0, 1).m() == 45);
    REQUIRE(random_tree(8, 3).m() == 7);
    REQUIRE(random_tree(8, 3).is_connected());
    // Deterministic across calls with the same seed.
    REQUIRE(random_gnp(12, 0.3, 42).edges() == random_gnp(12, 0.3, 42).edges());
}
