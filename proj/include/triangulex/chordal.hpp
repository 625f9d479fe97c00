#pragma once

#include <vector>

#include "graph.hpp"

namespace triangulex {

// Maximum cardinality search. Returns the visit order; ties broken by lowest
// vertex id so the result is deterministic.
inline std::vector<int> mcs_order(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(n, 0), order;
    order.reserve(n);
    VertexSet left = g.vertices();
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v : left) {
            if (best < 0 || weight[v] > weight[best]) best = v;
        }
        order.push_back(best);
        left.reset(best);
        for (int u : g.adj(best) & left) ++weight[u];
    }
    return order;
}

// Tests whether elim is a perfect elimination order: every vertex's later
// neighbors minus the first of them must be adjacent to that first one.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& elim) {
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        VertexSet later(n);
        int u = -1, upos = n;
        for (int w : g.adj(v)) {
            if (pos[w] > i) {
                later.set(w);
                if (pos[w] < upos) {
                    upos = pos[w];
                    u = w;
                }
            }
        }
        if (u < 0) continue;
        later.reset(u);
        if (!later.is_subset_of(g.adj(u))) return false;
    }
    return true;
}

// A graph is chordal iff the reverse of an MCS visit order is a perfect
// elimination order.
inline bool is_chordal(const Graph& g) {
    std::vector<int> elim = mcs_order(g);
    std::reverse(elim.begin(), elim.end());
    return is_perfect_elimination_order(g, elim);
}

// Maximal cliques of a chordal graph, extracted from a perfect elimination
// order: v plus its later neighbors, filtered for maximality.
inline std::vector<VertexSet> maximal_cliques_of_chordal(const Graph& g) {
    int n = g.n();
    std::vector<int> elim = mcs_order(g);
    std::reverse(elim.begin(), elim.end());
    check(is_perfect_elimination_order(g, elim), "maximal_cliques_of_chordal: graph not chordal");
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;
    std::vector<VertexSet> cands;
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        VertexSet c = VertexSet::single(n, v);
        for (int w : g.adj(v)) {
            if (pos[w] > i) c.set(w);
        }
        cands.push_back(c);
    }
    std::vector<VertexSet> out;
    for (size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cands.size() && maximal; ++j) {
            if (i != j && cands[i].is_subset_of(cands[j]) && !(cands[i] == cands[j] && i < j)) {
                maximal = false;
            }
        }
        if (maximal) out.push_back(cands[i]);
    }
    sort_sets(out);
    return out;
}

// Fill-in along an elimination order: eliminating a vertex completes its
// not-yet-eliminated neighborhood. The result is a triangulation of g.
inline Graph fill_in(const Graph& g, const std::vector<int>& elim) {
    int n = g.n();
    std::vector<VertexSet> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.adj(v));
    VertexSet left = g.vertices();
    for (int v : elim) {
        left.reset(v);
        VertexSet nb = adj[v] & left;
        for (int u : nb) {
            adj[u] |= nb;
            adj[u].reset(u);
        }
    }
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u) {
        for (int v : adj[u]) {
            if (v > u) es.emplace_back(u, v);
        }
    }
    return Graph(n, es);
}

// Connects a family of cliques into a junction tree: a maximum-overlap
// spanning tree (Prim), which has the running-intersection property whenever
// the input is the set of maximal cliques of a chordal graph. Returns
// size()-1 edges as index pairs; an empty or singleton family yields none.
inline std::vector<std::pair<int, int>> junction_tree(const std::vector<VertexSet>& cliques) {
    std::vector<std::pair<int, int>> edges;
    if (cliques.size() <= 1) return edges;
    std::vector<char> in_tree(cliques.size(), 0);
    in_tree[0] = 1;
    for (size_t step = 1; step < cliques.size(); ++step) {
        int best_from = -1, best_to = -1, best_overlap = -1;
        for (size_t a = 0; a < cliques.size(); ++a) {
            if (!in_tree[a]) continue;
            for (size_t b = 0; b < cliques.size(); ++b) {
                if (in_tree[b]) continue;
                int overlap = (cliques[a] & cliques[b]).count();
                if (overlap > best_overlap) {
                    best_overlap = overlap;
                    best_from = (int)a;
                    best_to = (int)b;
                }
            }
        }
        in_tree[best_to] = 1;
        edges.emplace_back(best_from, best_to);
    }
    return edges;
}

// Shrinks a triangulation to a minimal one by discarding fill edges whose
// removal keeps the graph chordal, until none can be removed.
inline Graph minimize_triangulation(const Graph& g, const Graph& tri) {
    check(g.n() == tri.n(), "minimize_triangulation: size mismatch");
    Graph cur = tri;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : cur.edges()) {
            if (g.has_edge(u, v)) continue;
            std::vector<std::pair<int, int>> es;
            for (auto e : cur.edges()) {
                if (!(e.first == u && e.second == v)) es.push_back(e);
            }
            Graph next(cur.n(), es);
            if (is_chordal(next)) {
                cur = next;
                changed = true;
                break;
            }
        }
    }
    return cur;
}

}  // namespace triangulex
