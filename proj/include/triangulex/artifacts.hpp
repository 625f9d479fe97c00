#pragma once

#include <unordered_map>
#include <vector>

#include "triangulex/minsep.hpp"
#include "triangulex/pmc.hpp"

namespace triangulex {

// Everything the dynamic programs consume, built once per input graph:
// minimal separators, full blocks sorted ascending by |S∪C|, PMCs, and the
// good triples grouped per block.
struct GraphArtifacts {
    std::vector<VertexSet> seps;
    std::vector<Block> blocks;
    std::vector<PmcRecord> pmcs;
    std::vector<GoodTriple> triples;
    std::unordered_map<VertexSet, int> block_by_union;
    std::vector<std::vector<int>> triples_by_block;
    std::unordered_map<VertexSet, std::vector<int>> blocks_by_separator;
};

// The components of domain minus head, each resolved to its full block.
// Every such component C has N(C) a minimal separator (or the empty set on a
// disconnected graph), so the lookup never misses on a well-formed table.
struct SubBlockList {
    std::vector<int> ids;
    std::vector<VertexSet> seps;
};

inline SubBlockList resolve_sub_blocks(const Graph& g, const GraphArtifacts& a,
                                       const VertexSet& domain,
                                       const VertexSet& head) {
    SubBlockList subs;
    for (const VertexSet& c : g.connected_components(domain - head)) {
        VertexSet s = g.neighborhood(c);
        auto it = a.block_by_union.find(s | c);
        check(it != a.block_by_union.end(),
              "component does not form a known full block");
        check((s | c).count() < domain.count(), "sub-block does not shrink");
        subs.ids.push_back(it->second);
        subs.seps.push_back(std::move(s));
    }
    return subs;
}

inline GraphArtifacts build_artifacts(const Graph& g, int threads = 1) {
    GraphArtifacts a;
    a.seps = enumerate_minimal_separators(g);
    a.blocks = all_full_blocks(g, a.seps);
    a.pmcs = enumerate_pmcs(g, threads);
    a.triples = good_triples(g, a.blocks, a.pmcs);
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        a.block_by_union.emplace(a.blocks[i].whole(), (int)i);
        a.blocks_by_separator[a.blocks[i].separator].push_back((int)i);
    }
    a.triples_by_block.resize(a.blocks.size());
    for (size_t i = 0; i < a.triples.size(); ++i)
        a.triples_by_block[a.triples[i].block_id].push_back((int)i);
    return a;
}

}  // namespace triangulex
