#pragma once

// Small self-contained helpers for the test suite. The brute-force routines
// here deliberately avoid the library's algorithm headers so that agreement
// checks compare genuinely independent computations.

#include <cstdint>
#include <vector>

#include "triangulex/graph.hpp"

namespace tsup {

using triangulex::Graph;
using triangulex::VertexSet;

// Graphs on up to 8 vertices encoded as edge masks over pairs (i,j), i<j,
// in the order (0,1),(0,2),(1,2),(0,3),... i.e. pair index = j*(j-1)/2 + i.
inline Graph graph_from_mask(int n, uint32_t mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (mask >> bit & 1) es.emplace_back(i, j);
        }
    }
    return Graph(n, es);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Adjacency rows as plain bit masks; the independent representation used by
// the exhaustive sweeps.
struct TinyGraph {
    int n;
    uint16_t adj[8];
};

inline TinyGraph tiny_from_mask(int n, uint32_t mask) {
    TinyGraph t{n, {0, 0, 0, 0, 0, 0, 0, 0}};
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (mask >> bit & 1) {
                t.adj[i] |= (uint16_t)(1u << j);
                t.adj[j] |= (uint16_t)(1u << i);
            }
        }
    }
    return t;
}

// Chordal iff no induced cycle of length >= 4: check every subset for being
// one (all degrees 2 inside, connected, size >= 4).
inline bool tiny_is_chordal(const TinyGraph& g) {
    for (uint32_t s = 0; s < (1u << g.n); ++s) {
        if (std::popcount(s) < 4) continue;
        bool cyc = true;
        for (int v = 0; v < g.n && cyc; ++v) {
            if (s >> v & 1) cyc = std::popcount(g.adj[v] & s) == 2;
        }
        if (!cyc) continue;
        uint32_t comp = s & (~s + 1), last = 0;
        while (comp != last) {
            last = comp;
            for (int v = 0; v < g.n; ++v) {
                if (comp >> v & 1) comp |= g.adj[v] & s;
            }
        }
        if (comp == s) return false;
    }
    return true;
}

// Maximum independent set size by subset sweep.
inline int brute_mis(const Graph& g) {
    int n = g.n(), best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!(s >> v & 1)) continue;
            for (int u = v + 1; u < n && ok; ++u) {
                if ((s >> u & 1) && g.has_edge(u, v)) ok = false;
            }
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

// Largest induced subgraph with no cycle at all (a forest), by subset sweep:
// acyclic iff every nonempty sub-subset has a vertex of degree <= 1.
inline bool induces_forest(const Graph& g, uint32_t s) {
    int edges = 0, verts = 0;
    // A graph is a forest iff, peeling degree<=1 vertices repeatedly, nothing
    // remains.
    uint32_t cur = s;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < g.n(); ++v) {
            if (!(cur >> v & 1)) continue;
            int d = 0;
            for (int u : g.adj(v)) {
                if (cur >> u & 1) ++d;
            }
            if (d <= 1) {
                cur &= ~(1u << v);
                progress = true;
            }
        }
    }
    (void)edges;
    (void)verts;
    return cur == 0;
}

inline int brute_max_induced_forest(const Graph& g) {
    int best = 0;
    for (uint32_t s = 0; s < (1u << g.n()); ++s) {
        if (induces_forest(g, s)) best = std::max(best, std::popcount(s));
    }
    return best;
}

}  // namespace tsup
