#pragma once

#include <unordered_set>
#include <vector>

#include "triangulex/common.hpp"
#include "triangulex/graph.hpp"

namespace triangulex {

// A block (S, C): minimal separator S together with one connected component C
// of G minus S. Full when N(C) = S. Only full blocks are materialized here;
// they are the decomposition units of the downstream dynamic programs.
struct Block {
    VertexSet separator;
    VertexSet component;
    bool is_full = false;
    bool is_inclusion_minimal = false;

    VertexSet whole() const { return separator | component; }
};

// True iff G minus s has at least two components C with N(C) = s.
inline bool is_minimal_separator(const Graph& g, const VertexSet& s) {
    check(s.width() == g.n(), "separator width mismatch");
    VertexSet rest = g.vertices() - s;
    int full = 0;
    for (const VertexSet& c : g.connected_components(rest)) {
        if (g.neighborhood(c) == s && ++full == 2) return true;
    }
    return false;
}

// All minimal separators, found by closing a work queue under the expansion
// rule: seed with N(C) for components C of G minus N[v], then for each known
// separator S and x in S add N(C) for components C of G minus (S union N[x]).
// Every candidate is filtered through is_minimal_separator before joining the
// queue. Result is sorted by size then lexicographically.
inline std::vector<VertexSet> enumerate_minimal_separators(const Graph& g) {
    const int n = g.n();
    std::vector<VertexSet> result;
    if (n == 0) return result;

    std::unordered_set<VertexSet> offered;
    std::vector<VertexSet> queue;
    auto offer = [&](const VertexSet& cand) {
        if (!offered.insert(cand).second) return;
        if (is_minimal_separator(g, cand)) {
            result.push_back(cand);
            queue.push_back(cand);
        }
    };

    for (int v = 0; v < n; ++v) {
        VertexSet rest = g.vertices() - g.closed_neighborhood(v);
        for (const VertexSet& c : g.connected_components(rest))
            offer(g.neighborhood(c));
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexSet s = queue[head];
        for (int x : s) {
            VertexSet rest = g.vertices() - (s | g.closed_neighborhood(x));
            for (const VertexSet& c : g.connected_components(rest))
                offer(g.neighborhood(c));
        }
    }
    sort_sets(result);
    return result;
}

// Every full block (S, C) with S in seps, sorted ascending by |S union C|
// with ties broken lexicographically on S union C. Distinct full blocks have
// distinct unions (S is recoverable as N(V minus the union)), which makes the
// sorted position a stable block id.
inline std::vector<Block> all_full_blocks(const Graph& g,
                                          const std::vector<VertexSet>& seps) {
    std::vector<Block> blocks;
    for (const VertexSet& s : seps) {
        for (const VertexSet& c : g.connected_components(g.vertices() - s)) {
            if (g.neighborhood(c) == s)
                blocks.push_back(Block{s, c, true, false});
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        VertexSet wa = a.whole(), wb = b.whole();
        if (wa.count() != wb.count()) return wa.count() < wb.count();
        return wa.lex_less(wb);
    });
    for (size_t i = 1; i < blocks.size(); ++i)
        check(!(blocks[i - 1].whole() == blocks[i].whole()),
              "full blocks must have distinct unions");
    // A block is inclusion-minimal when no strictly smaller block's vertex set
    // sits inside its own. Quadratic over the sorted list; sizes ascend, so
    // only earlier blocks can witness non-minimality.
    for (size_t i = 0; i < blocks.size(); ++i) {
        VertexSet wi = blocks[i].whole();
        bool minimal = true;
        for (size_t j = 0; j < i && minimal; ++j) {
            const Block& bj = blocks[j];
            if (bj.whole().count() < wi.count() && bj.whole().is_subset_of(wi))
                minimal = false;
        }
        blocks[i].is_inclusion_minimal = minimal;
    }
    return blocks;
}

}  // namespace triangulex
