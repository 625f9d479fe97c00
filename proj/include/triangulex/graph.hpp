#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace triangulex {

// Simple undirected graph, immutable once constructed. Vertices are
// 0..n-1, adjacency is kept as one VertexSet per vertex.
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        check(n >= 0 && n <= VertexSet::max_width, "graph size out of range");
        adj_.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw std::invalid_argument("edge endpoint out of range");
            }
            if (u == v) throw std::invalid_argument("self-loop");
            if (!adj_[u].test(v)) {
                adj_[u].set(v);
                adj_[v].set(u);
                ++m_;
            }
        }
    }

    int n() const { return n_; }
    int m() const { return m_; }

    const VertexSet& adj(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < n_; ++u) {
            for (int v : adj_[u]) {
                if (v > u) es.emplace_back(u, v);
            }
        }
        return es;
    }

    // Open neighborhood of a set: all vertices outside s adjacent to s.
    VertexSet neighborhood(const VertexSet& s) const {
        VertexSet r(n_);
        for (int v : s) r |= adj_[v];
        return r - s;
    }

    VertexSet closed_neighborhood(const VertexSet& s) const {
        return neighborhood(s) | s;
    }

    VertexSet closed_neighborhood(int v) const {
        VertexSet r = adj_[v];
        r.set(v);
        return r;
    }

    // Connected components of g[domain], ordered by ascending minimum vertex.
    std::vector<VertexSet> connected_components(const VertexSet& domain) const {
        std::vector<VertexSet> comps;
        VertexSet left = domain;
        for (int v = left.first(); v >= 0; v = left.first()) {
            VertexSet comp = VertexSet::single(n_, v);
            VertexSet frontier = comp;
            while (frontier.any()) {
                VertexSet grow(n_);
                for (int u : frontier) grow |= adj_[u];
                grow &= domain;
                grow -= comp;
                comp |= grow;
                frontier = grow;
            }
            comps.push_back(comp);
            left -= comp;
        }
        return comps;
    }

    std::vector<VertexSet> connected_components() const {
        return connected_components(vertices());
    }

    // The component of g[domain] containing v.
    VertexSet component_of(const VertexSet& domain, int v) const {
        check(v >= 0 && v < n_ && domain.test(v), "component_of needs v in domain");
        VertexSet comp = VertexSet::single(n_, v);
        VertexSet frontier = comp;
        while (frontier.any()) {
            VertexSet grow(n_);
            for (int u : frontier) grow |= adj_[u];
            grow &= domain;
            grow -= comp;
            comp |= grow;
            frontier = grow;
        }
        return comp;
    }

    bool is_connected() const {
        return n_ == 0 || connected_components().size() == 1;
    }

    bool is_clique(const VertexSet& s) const {
        for (int v : s) {
            VertexSet rest = s;
            rest.reset(v);
            if (!rest.is_subset_of(adj_[v])) return false;
        }
        return true;
    }

    bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

    // Subgraph induced by s, plus the map from new vertex ids to old ones.
    std::pair<Graph, std::vector<int>> induced_subgraph(const VertexSet& s) const {
        std::vector<int> to_old;
        to_old.reserve(s.count());
        std::vector<int> to_new(n_, -1);
        for (int v : s) {
            to_new[v] = (int)to_old.size();
            to_old.push_back(v);
        }
        std::vector<std::pair<int, int>> es;
        for (int u : s) {
            for (int v : adj_[u] & s) {
                if (v > u) es.emplace_back(to_new[u], to_new[v]);
            }
        }
        return {Graph((int)to_old.size(), es), to_old};
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Canonical order used for all set-valued results: size first, then
// lexicographic set order. Keeps every enumeration deterministic.
inline void sort_sets(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.lex_less(b);
    });
}

}  // namespace triangulex
