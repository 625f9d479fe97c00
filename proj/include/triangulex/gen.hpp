#pragma once

#include <random>

#include "graph.hpp"

namespace triangulex {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    check(n >= 3, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    }
    return Graph(n, es);
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

// Parts are 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    }
    return Graph(a + b, es);
}

// Outer cycle 0..4, inner 5-pointed star 5..9, spokes i -- i+5.
inline Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
        es.emplace_back(i, 5 + i);
    }
    return Graph(10, es);
}

// G(n, p) with a fixed integer threshold so results never depend on the
// platform's floating point or distribution internals.
inline Graph random_gnp(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    uint64_t threshold = (uint64_t)(p * 4294967296.0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((rng() & 0xffffffffull) < threshold) es.emplace_back(i, j);
        }
    }
    return Graph(n, es);
}

// Uniform random tree on n vertices (random attachment), then optionally a
// few extra edges; used by tests to draw low-treewidth patterns.
inline Graph random_tree(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back((int)(rng() % v), v);
    return Graph(n, es);
}

}  // namespace triangulex
