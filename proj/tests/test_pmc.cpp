#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"
#include "triangulex/artifacts.hpp"
#include "triangulex/chordal.hpp"
#include "triangulex/gen.hpp"
#include "triangulex/oracle.hpp"

using namespace triangulex;

namespace {

VertexSet vs(int width, std::initializer_list<int> xs) {
    VertexSet s(width);
    for (int x : xs) s.set(x);
    return s;
}

std::vector<VertexSet> omegas_of(const std::vector<PmcRecord>& recs) {
    std::vector<VertexSet> out;
    for (const auto& r : recs) out.push_back(r.omega);
    return out;
}

// The definition route: collect the maximal cliques of every minimal
// triangulation reachable from an elimination order. Feasible for tiny n
// since every minimal triangulation arises from some order.
std::vector<VertexSet> pmcs_by_definition(const Graph& g) {
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::set<std::vector<std::pair<int, int>>> seen_fills;
    std::vector<VertexSet> out;
    std::unordered_set<VertexSet> unique;
    do {
        Graph tri = fill_in(g, order);
        if (!seen_fills.insert(tri.edges()).second) continue;
        Graph reduced = minimize_triangulation(g, tri);
        if (reduced.m() != tri.m()) continue;  // not a minimal triangulation
        for (const VertexSet& k : maximal_cliques_of_chordal(tri))
            if (unique.insert(k).second) out.push_back(k);
    } while (std::next_permutation(order.begin(), order.end()));
    sort_sets(out);
    return out;
}

}  // namespace

TEST_CASE("is_pmc on fixed graphs") {
    Graph c4 = cycle_graph(4);
    REQUIRE(is_pmc(c4, vs(4, {0, 1, 2})));
    REQUIRE_FALSE(is_pmc(c4, vs(4, {0, 1})));
    REQUIRE_FALSE(is_pmc(c4, vs(4, {0, 1, 2, 3})));
    REQUIRE(is_pmc(complete_graph(3), vs(3, {0, 1, 2})));
    REQUIRE(is_pmc(path_graph(3), vs(3, {0, 1})));
    REQUIRE_FALSE(is_pmc(path_graph(3), vs(3, {0, 2})));
}

TEST_CASE("enumerate_connected_sets yields each connected superset once") {
    auto always = [](const VertexSet&) { return true; };

    std::vector<VertexSet> got;
    enumerate_connected_sets(path_graph(3), 0, always,
                             [&](const VertexSet& z) { got.push_back(z); });
    sort_sets(got);
    REQUIRE(got == std::vector<VertexSet>{vs(3, {0}), vs(3, {0, 1}),
                                          vs(3, {0, 1, 2})});

    got.clear();
    enumerate_connected_sets(complete_graph(3), 0, always,
                             [&](const VertexSet& z) { got.push_back(z); });
    sort_sets(got);
    REQUIRE(got == std::vector<VertexSet>{vs(3, {0}), vs(3, {0, 1}),
                                          vs(3, {0, 2}), vs(3, {0, 1, 2})});

    got.clear();
    enumerate_connected_sets(
        petersen(), 3, [](const VertexSet& z) { return z.count() <= 1; },
        [&](const VertexSet& z) { got.push_back(z); });
    REQUIRE(got == std::vector<VertexSet>{vs(10, {3})});

    // No repetitions, and exactly the connected sets containing z.
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_gnp(9, 0.3, 500 + seed);
        std::vector<VertexSet> sets;
        enumerate_connected_sets(g, 0, always,
                                 [&](const VertexSet& z) { sets.push_back(z); });
        std::unordered_set<VertexSet> uniq(sets.begin(), sets.end());
        REQUIRE(uniq.size() == sets.size());
        size_t expected = 0;
        for (uint32_t mask = 1; mask < (1u << 9); ++mask) {
            if (!(mask & 1)) continue;
            VertexSet s(9);
            for (int v = 0; v < 9; ++v)
                if (mask >> v & 1) s.set(v);
            if (g.connected_components(s).size() == 1) ++expected;
        }
        REQUIRE(sets.size() == expected);
    }
}

TEST_CASE("enumerate_pmcs on fixed graphs") {
    REQUIRE(omegas_of(enumerate_pmcs(path_graph(3))) ==
            std::vector<VertexSet>{vs(3, {0, 1}), vs(3, {1, 2})});
    REQUIRE(omegas_of(enumerate_pmcs(cycle_graph(4))) ==
            std::vector<VertexSet>{vs(4, {0, 1, 2}), vs(4, {0, 1, 3}),
                                   vs(4, {0, 2, 3}), vs(4, {1, 2, 3})});
    REQUIRE(omegas_of(enumerate_pmcs(complete_graph(4))) ==
            std::vector<VertexSet>{vs(4, {0, 1, 2, 3})});
    REQUIRE(enumerate_pmcs(Graph()).empty());
    REQUIRE(omegas_of(enumerate_pmcs(empty_graph(1))) ==
            std::vector<VertexSet>{vs(1, {0})});
    REQUIRE(omegas_of(enumerate_pmcs(empty_graph(2))) ==
            std::vector<VertexSet>{vs(2, {0}), vs(2, {1})});
}

TEST_CASE("pmc enumeration matches the subset oracle on random graphs") {
    double ps[] = {0.15, 0.3, 0.5, 0.75};
    for (uint64_t seed = 0; seed < 500; ++seed) {
        int n = 4 + (int)(seed % 5);
        Graph g = random_gnp(n, ps[seed % 4], 7000 + seed);
        REQUIRE(omegas_of(enumerate_pmcs(g)) == brute_pmcs(g));
    }
    for (uint64_t seed = 0; seed < 200; ++seed) {
        int n = 9 + (int)(seed % 5);
        Graph g = random_gnp(n, ps[seed % 4], 9000 + seed);
        auto fast = omegas_of(enumerate_pmcs(g));
        if (!(fast == brute_pmcs(g))) {
            INFO("n=" << n << " seed=" << 9000 + seed);
            REQUIRE(fast == brute_pmcs(g));
        }
    }
}

TEST_CASE("pmc enumeration matches the triangulation definition on tiny graphs") {
    for (int n = 1; n <= 5; ++n) {
        uint32_t total = 1u << tsup::pair_count(n);
        for (uint32_t mask = 0; mask < total; ++mask) {
            Graph g = tsup::graph_from_mask(n, mask);
            REQUIRE(omegas_of(enumerate_pmcs(g)) == pmcs_by_definition(g));
        }
    }
    for (uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_gnp(6, seed % 2 ? 0.35 : 0.6, 100 + seed);
        REQUIRE(omegas_of(enumerate_pmcs(g)) == pmcs_by_definition(g));
    }
}

TEST_CASE("local separators are minimal separators strictly inside the PMC") {
    for (uint64_t seed = 0; seed < 120; ++seed) {
        int n = 4 + (int)(seed % 9);
        Graph g = random_gnp(n, seed % 2 ? 0.3 : 0.55, 4200 + seed);
        for (const PmcRecord& rec : enumerate_pmcs(g)) {
            for (const VertexSet& s : rec.local_separators) {
                REQUIRE(is_minimal_separator(g, s));
                REQUIRE(s.is_subset_of(rec.omega));
                REQUIRE_FALSE(s == rec.omega);
            }
        }
    }
}

TEST_CASE("good triples on fixed graphs") {
    Graph c4 = cycle_graph(4);
    GraphArtifacts a = build_artifacts(c4);
    REQUIRE(a.triples.size() == 4);
    for (const GoodTriple& t : a.triples) {
        const Block& b = a.blocks[t.block_id];
        const VertexSet& omega = a.pmcs[t.omega_id].omega;
        REQUIRE(b.separator.is_subset_of(omega));
        REQUIRE(omega.is_subset_of(b.whole()));
    }
    // Omega={0,1,2} pairs only with block ({0,2},{1}).
    int oid = -1;
    for (size_t q = 0; q < a.pmcs.size(); ++q)
        if (a.pmcs[q].omega == vs(4, {0, 1, 2})) oid = (int)q;
    int hits = 0;
    for (const GoodTriple& t : a.triples)
        if (t.omega_id == oid) {
            ++hits;
            REQUIRE(a.blocks[t.block_id].separator == vs(4, {0, 2}));
            REQUIRE(a.blocks[t.block_id].component == vs(4, {1}));
        }
    REQUIRE(hits == 1);

    GraphArtifacts k4 = build_artifacts(complete_graph(4));
    REQUIRE(k4.triples.empty());
    REQUIRE(k4.blocks.empty());
    REQUIRE(k4.pmcs.size() == 1);

    GraphArtifacts p3 = build_artifacts(path_graph(3));
    REQUIRE(p3.triples.size() == 2);
}

TEST_CASE("disconnected graphs decompose through empty-separator blocks") {
    Graph two_k2(4, {{0, 1}, {2, 3}});
    GraphArtifacts a = build_artifacts(two_k2);
    REQUIRE(a.seps == std::vector<VertexSet>{vs(4, {})});
    REQUIRE(a.blocks.size() == 2);
    REQUIRE(a.blocks[0].separator.empty());
    REQUIRE(a.blocks[0].component == vs(4, {0, 1}));
    REQUIRE(a.blocks[1].component == vs(4, {2, 3}));
    REQUIRE(omegas_of(a.pmcs) ==
            std::vector<VertexSet>{vs(4, {0, 1}), vs(4, {2, 3})});
    REQUIRE(a.triples.size() == 2);
    for (const PmcRecord& rec : a.pmcs)
        REQUIRE(rec.local_separators == std::vector<VertexSet>{vs(4, {})});
}

TEST_CASE("every PMC joins between one and n good triples when blocks exist") {
    for (uint64_t seed = 0; seed < 80; ++seed) {
        int n = 4 + (int)(seed % 8);
        Graph g = random_gnp(n, seed % 2 ? 0.35 : 0.6, 2024 + seed);
        GraphArtifacts a = build_artifacts(g);
        if (a.seps.empty()) continue;  // complete graph
        std::vector<int> per_pmc(a.pmcs.size(), 0);
        for (const GoodTriple& t : a.triples) ++per_pmc[t.omega_id];
        for (size_t q = 0; q < a.pmcs.size(); ++q) {
            bool is_whole = a.pmcs[q].omega == g.vertices();
            if (!is_whole) REQUIRE(per_pmc[q] >= 1);
            REQUIRE(per_pmc[q] <= n);
        }
    }
}

TEST_CASE("threaded enumeration merges to the same result") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_gnp(11, 0.4, 86 + seed);
        REQUIRE(omegas_of(enumerate_pmcs(g, 2)) ==
                omegas_of(enumerate_pmcs(g, 1)));
        REQUIRE(omegas_of(enumerate_pmcs(g, 4)) ==
                omegas_of(enumerate_pmcs(g, 1)));
    }
}
