#pragma once

#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "triangulex/common.hpp"
#include "triangulex/graph.hpp"
#include "triangulex/minsep.hpp"

namespace triangulex {

// A potential maximal clique Omega together with the neighborhoods of the
// components of G minus Omega: exactly the minimal separators of G that are
// contained in Omega.
struct PmcRecord {
    VertexSet omega;
    std::vector<VertexSet> local_separators;
};

// (S, C, Omega) with S ⊆ Omega ⊆ S∪C and (S,C) a full block, stored as ids
// into the sorted block and PMC lists.
struct GoodTriple {
    int block_id = -1;
    int omega_id = -1;
};

// Both structural conditions on a candidate clique-of-some-minimal-
// triangulation: no component of G minus k sees all of k, and every
// nonadjacent pair inside k is covered by some component neighborhood.
inline bool is_pmc(const Graph& g, const VertexSet& k) {
    check(k.width() == g.n(), "is_pmc width mismatch");
    check(!k.empty(), "is_pmc needs a nonempty candidate");
    std::vector<VertexSet> local;
    for (const VertexSet& c : g.connected_components(g.vertices() - k)) {
        VertexSet s = g.neighborhood(c);
        if (s == k) return false;
        local.push_back(s);
    }
    for (int u : k) {
        VertexSet need = k - g.closed_neighborhood(u);
        if (need.empty()) continue;
        VertexSet covered(g.n());
        for (const VertexSet& s : local)
            if (s.test(u)) covered |= s;
        if (!need.is_subset_of(covered)) return false;
    }
    return true;
}

// Every connected set Z containing z whose whole search-path prefix chain
// satisfies prune, each exactly once. Children forbid the extension vertices
// of earlier sibling branches, which makes generation paths unique.
template <typename Prune, typename Yield>
void enumerate_connected_sets(const Graph& g, int z, Prune&& prune,
                              Yield&& yield) {
    check(z >= 0 && z < g.n(), "start vertex out of range");
    VertexSet start = VertexSet::single(g.n(), z);
    if (!prune(start)) return;
    auto rec = [&](auto&& self, const VertexSet& zset,
                   const VertexSet& forbidden) -> void {
        yield(zset);
        VertexSet ext = g.neighborhood(zset) - forbidden;
        VertexSet blocked = forbidden;
        for (int u : ext) {
            VertexSet next = zset;
            next.set(u);
            if (prune(next)) self(self, next, blocked);
            blocked.set(u);
        }
    };
    rec(rec, start, VertexSet(g.n()));
}

namespace pmc_detail {

// Search-tree prune from the enumeration analysis: |Z|-1 may not exceed
// twice the number of vertices outside N[Z minus z]. The right side only
// shrinks as Z grows, so cutting a branch here loses no surviving set.
inline bool growth_prune(const Graph& g, int z, const VertexSet& zset) {
    VertexSet core = zset;
    core.reset(z);
    int outside = g.n() - g.closed_neighborhood(core).count();
    return (int)zset.count() - 1 <= 2 * outside;
}

inline std::vector<VertexSet> local_separators_of(const Graph& g,
                                                  const VertexSet& omega) {
    std::vector<VertexSet> local;
    std::unordered_set<VertexSet> seen;
    for (const VertexSet& c : g.connected_components(g.vertices() - omega)) {
        VertexSet s = g.neighborhood(c);
        if (seen.insert(s).second) local.push_back(s);
    }
    sort_sets(local);
    return local;
}

// Candidates arising from one enumerated (Z, z) pair.
template <typename Try>
void offer_candidates(const Graph& g, int z, const VertexSet& zset, Try&& try_candidate) {
    VertexSet core = zset;
    core.reset(z);
    if (!core.empty()) {
        VertexSet cand = g.neighborhood(core);
        if (!cand.empty()) try_candidate(cand);
    }
    VertexSet cand2 = g.neighborhood(zset);
    cand2.set(z);
    try_candidate(cand2);
}

inline void collect_for_vertex(const Graph& g, int z,
                               std::unordered_set<VertexSet>& tested,
                               std::vector<VertexSet>& found) {
    enumerate_connected_sets(
        g, z, [&](const VertexSet& zset) { return growth_prune(g, z, zset); },
        [&](const VertexSet& zset) {
            offer_candidates(g, z, zset, [&](const VertexSet& cand) {
                if (!tested.insert(cand).second) return;
                if (is_pmc(g, cand)) found.push_back(cand);
            });
        });
}

}  // namespace pmc_detail

// All potential maximal cliques, sorted by size then lexicographically.
// threads > 1 splits the start-vertex loop; results are merged and deduped.
inline std::vector<PmcRecord> enumerate_pmcs(const Graph& g, int threads = 1) {
    const int n = g.n();
    std::vector<PmcRecord> records;
    if (n == 0) return records;

    std::vector<VertexSet> omegas;
    if (threads <= 1) {
        std::unordered_set<VertexSet> tested;
        for (int z = 0; z < n; ++z)
            pmc_detail::collect_for_vertex(g, z, tested, omegas);
    } else {
        int workers = std::min(threads, n);
        std::vector<std::vector<VertexSet>> parts(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::unordered_set<VertexSet> tested;
                for (int z = w; z < n; z += workers)
                    pmc_detail::collect_for_vertex(g, z, tested, parts[w]);
            });
        }
        for (auto& th : pool) th.join();
        std::unordered_set<VertexSet> merged;
        for (auto& part : parts)
            for (auto& cand : part)
                if (merged.insert(cand).second) omegas.push_back(cand);
    }
    // The whole vertex set pairs with no block, so the enumeration above can
    // only reach it through a candidate; check it directly instead.
    if (is_pmc(g, g.vertices())) omegas.push_back(g.vertices());

    std::unordered_set<VertexSet> unique;
    std::vector<VertexSet> final_omegas;
    for (const VertexSet& o : omegas)
        if (unique.insert(o).second) final_omegas.push_back(o);
    sort_sets(final_omegas);

    records.reserve(final_omegas.size());
    for (const VertexSet& o : final_omegas)
        records.push_back(PmcRecord{o, pmc_detail::local_separators_of(g, o)});
    return records;
}

// All good triples (S, C, Omega), derived per PMC: for each local separator
// S of Omega, the component of G minus S containing Omega minus S completes
// the unique full block with Omega inside it. Sorted by block then PMC id.
inline std::vector<GoodTriple> good_triples(const Graph& g,
                                            const std::vector<Block>& blocks,
                                            const std::vector<PmcRecord>& pmcs) {
    std::unordered_map<VertexSet, int> block_of_union;
    for (size_t i = 0; i < blocks.size(); ++i)
        block_of_union.emplace(blocks[i].whole(), (int)i);

    std::vector<GoodTriple> triples;
    for (size_t q = 0; q < pmcs.size(); ++q) {
        const PmcRecord& rec = pmcs[q];
        for (const VertexSet& s : rec.local_separators) {
            VertexSet rest = rec.omega - s;
            check(!rest.empty(), "local separator equals its PMC");
            VertexSet comp = g.component_of(g.vertices() - s, rest.first());
            if (!rest.is_subset_of(comp)) continue;
            if (!(g.neighborhood(comp) == s)) continue;
            auto it = block_of_union.find(s | comp);
            check(it != block_of_union.end(), "good triple hit an unknown block");
            triples.push_back(GoodTriple{it->second, (int)q});
        }
    }
    std::sort(triples.begin(), triples.end(),
              [](const GoodTriple& a, const GoodTriple& b) {
                  if (a.block_id != b.block_id) return a.block_id < b.block_id;
                  return a.omega_id < b.omega_id;
              });
    return triples;
}

}  // namespace triangulex
