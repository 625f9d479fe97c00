#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triangulex/common.hpp"
#include "triangulex/graph.hpp"

// Brute-force reference implementations. Deliberately naive: they exist to
// check the fast algorithms on small instances and to certify witnesses at
// runtime, so they share no code with the fast paths beyond the Graph type.

namespace triangulex {

struct OracleBudget {
    int max_n_subsets = 16;    // cap for 2^n subset sweeps
    int max_n_treewidth = 20;  // cap for the elimination-order DP
};

namespace oracle_detail {

inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
    check(g.n() <= 30, "mask oracle limited to 30 vertices");
    std::vector<uint32_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

inline uint32_t mask_neighborhood(const std::vector<uint32_t>& adj, uint32_t s) {
    uint32_t nb = 0;
    for (uint32_t rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        nb |= adj[v];
    }
    return nb & ~s;
}

// Connected components of the graph induced on dom, as masks.
template <typename Fn>
inline void for_each_component(const std::vector<uint32_t>& adj, uint32_t dom,
                               Fn&& fn) {
    uint32_t rest = dom;
    while (rest) {
        uint32_t comp = 1u << std::countr_zero(rest);
        while (true) {
            uint32_t grow = mask_neighborhood(adj, comp) & dom;
            if (!grow) break;
            comp |= grow;
        }
        rest &= ~comp;
        fn(comp);
    }
}

inline int mask_degeneracy(const std::vector<uint32_t>& adj, uint32_t x) {
    int worst = 0;
    uint32_t rem = x;
    while (rem) {
        int best = -1, best_deg = 99;
        for (uint32_t it = rem; it;) {
            int v = std::countr_zero(it);
            it &= it - 1;
            int d = std::popcount(adj[v] & rem);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        worst = std::max(worst, best_deg);
        rem &= ~(1u << best);
    }
    return worst;
}

// Number of vertices of x outside s∪{v} reachable from v through s: the
// degree v would have when eliminated after the vertices of s.
inline int elimination_degree(const std::vector<uint32_t>& adj, uint32_t x,
                              uint32_t s, int v) {
    uint32_t seen = 1u << v;
    uint32_t nb = adj[v] & x;
    while (true) {
        uint32_t grow = nb & s & ~seen;
        if (!grow) break;
        seen |= grow;
        for (uint32_t it = grow; it;) {
            int u = std::countr_zero(it);
            it &= it - 1;
            nb |= adj[u];
        }
        nb &= x;
    }
    return std::popcount(nb & x & ~s & ~(1u << v));
}

// Feasibility table over subsets of x: entry s is 1 when the vertices of s
// can start an elimination order of g[x] with every elimination degree <= t.
inline std::vector<uint8_t> tw_prefix_table(const std::vector<uint32_t>& adj,
                                            uint32_t x, int t) {
    std::vector<uint8_t> feasible(size_t(x) + 1, 0);
    feasible[0] = 1;
    for (uint32_t s = 1; s <= x; ++s) {
        if (s & ~x) continue;
        for (uint32_t it = s; it;) {
            int v = std::countr_zero(it);
            it &= it - 1;
            uint32_t rest = s & ~(1u << v);
            if (!feasible[rest]) continue;
            if (elimination_degree(adj, x, rest, v) <= t) {
                feasible[s] = 1;
                break;
            }
        }
    }
    return feasible;
}

// Decides tw(g[x]) <= t by the subset DP over elimination prefixes.
inline bool mask_tw_le(const std::vector<uint32_t>& adj, uint32_t x, int t) {
    if (std::popcount(x) <= t + 1) return true;
    if (mask_degeneracy(adj, x) > t) return false;
    return tw_prefix_table(adj, x, t)[x] != 0;
}

}  // namespace oracle_detail

inline bool decide_treewidth_le(const Graph& g, int t,
                                const OracleBudget& budget = {}) {
    if (g.n() > budget.max_n_treewidth)
        throw budget_error("treewidth oracle budget exceeded: n=" +
                           std::to_string(g.n()) + " > " +
                           std::to_string(budget.max_n_treewidth));
    check(t >= 0, "treewidth bound must be nonnegative");
    if (g.n() == 0) return true;
    auto adj = oracle_detail::adjacency_masks(g);
    uint32_t full = (1u << g.n()) - 1;
    return oracle_detail::mask_tw_le(adj, full, t);
}

// Elimination order certifying tw(g) <= t, or nullopt when tw(g) > t. Each
// vertex, at its turn, has at most t later neighbors counted through the
// already eliminated prefix, so the fill-in along this order has clique
// number at most t+1.
inline std::optional<std::vector<int>> tw_elimination_order(
    const Graph& g, int t, const OracleBudget& budget = {}) {
    if (g.n() > budget.max_n_treewidth)
        throw budget_error("treewidth oracle budget exceeded: n=" +
                           std::to_string(g.n()) + " > " +
                           std::to_string(budget.max_n_treewidth));
    check(t >= 0, "treewidth bound must be nonnegative");
    std::vector<int> order(g.n());
    if (g.n() == 0) return order;
    if (g.n() <= t + 1) {
        for (int v = 0; v < g.n(); ++v) order[v] = v;
        return order;
    }
    auto adj = oracle_detail::adjacency_masks(g);
    uint32_t full = (1u << g.n()) - 1;
    if (oracle_detail::mask_degeneracy(adj, full) > t) return std::nullopt;
    auto feasible = oracle_detail::tw_prefix_table(adj, full, t);
    if (!feasible[full]) return std::nullopt;
    uint32_t s = full;
    while (s) {
        int pick = -1;
        for (uint32_t it = s; it;) {
            int v = std::countr_zero(it);
            it &= it - 1;
            uint32_t rest = s & ~(1u << v);
            if (feasible[rest] &&
                oracle_detail::elimination_degree(adj, full, rest, v) <= t) {
                pick = v;
                break;
            }
        }
        check(pick >= 0, "tw_elimination_order: table walk stuck");
        order[std::popcount(s) - 1] = pick;
        s &= ~(1u << pick);
    }
    return order;
}

// Exact treewidth; the empty graph has treewidth 0 by convention.
inline int brute_treewidth(const Graph& g, const OracleBudget& budget = {}) {
    if (g.n() > budget.max_n_treewidth)
        throw budget_error("treewidth oracle budget exceeded: n=" +
                           std::to_string(g.n()) + " > " +
                           std::to_string(budget.max_n_treewidth));
    if (g.n() == 0) return 0;
    auto adj = oracle_detail::adjacency_masks(g);
    uint32_t full = (1u << g.n()) - 1;
    int k = oracle_detail::mask_degeneracy(adj, full);
    while (k < g.n() - 1 && !oracle_detail::mask_tw_le(adj, full, k)) ++k;
    return k;
}

// Largest ell such that some ell-subset induces a subgraph of treewidth <= t,
// together with the first such subset in (descending size, ascending mask)
// order. ell=0 with the empty witness always qualifies.
inline std::pair<int, VertexSet> brute_max_induced_tw(
    const Graph& g, int t, const OracleBudget& budget = {}) {
    if (g.n() > budget.max_n_subsets)
        throw budget_error("subset oracle budget exceeded: n=" +
                           std::to_string(g.n()) + " > " +
                           std::to_string(budget.max_n_subsets));
    check(t >= 0, "treewidth bound must be nonnegative");
    const int n = g.n();
    if (n == 0) return {0, VertexSet(0)};
    auto adj = oracle_detail::adjacency_masks(g);
    uint32_t full = (1u << n) - 1;
    for (int ell = n; ell >= 1; --ell) {
        for (uint32_t x = 0; x <= full; ++x) {
            if (std::popcount(x) != ell) continue;
            if (!oracle_detail::mask_tw_le(adj, x, t)) continue;
            VertexSet witness(n);
            for (uint32_t it = x; it;) {
                int v = std::countr_zero(it);
                it &= it - 1;
                witness.set(v);
            }
            return {ell, witness};
        }
    }
    return {0, VertexSet(n)};
}

// All nonempty K passing the potential-maximal-clique filter: G minus K has
// no component whose neighborhood is all of K, and every nonadjacent pair of
// K lies inside the neighborhood of some component of G minus K.
inline std::vector<VertexSet> brute_pmcs(const Graph& g,
                                         const OracleBudget& budget = {}) {
    if (g.n() > budget.max_n_subsets)
        throw budget_error("subset oracle budget exceeded: n=" +
                           std::to_string(g.n()) + " > " +
                           std::to_string(budget.max_n_subsets));
    const int n = g.n();
    std::vector<VertexSet> out;
    if (n == 0) return out;
    auto adj = oracle_detail::adjacency_masks(g);
    uint32_t full = (1u << n) - 1;
    std::vector<uint32_t> covered_by(n);
    for (uint32_t k = 1; k <= full; ++k) {
        bool has_full = false;
        std::fill(covered_by.begin(), covered_by.end(), 0u);
        oracle_detail::for_each_component(adj, full & ~k, [&](uint32_t comp) {
            uint32_t s = oracle_detail::mask_neighborhood(adj, comp) & k;
            if (s == k) has_full = true;
            for (uint32_t it = s; it;) {
                int v = std::countr_zero(it);
                it &= it - 1;
                covered_by[v] |= s;
            }
        });
        if (has_full) continue;
        bool ok = true;
        for (uint32_t it = k; ok && it;) {
            int u = std::countr_zero(it);
            it &= it - 1;
            // Nonadjacent partners of u inside k must be covered alongside u.
            uint32_t need = k & ~adj[u] & ~(1u << u);
            if ((need & covered_by[u]) != need) ok = false;
        }
        if (!ok) continue;
        VertexSet omega(n);
        for (uint32_t it = k; it;) {
            int v = std::countr_zero(it);
            it &= it - 1;
            omega.set(v);
        }
        out.push_back(omega);
    }
    sort_sets(out);
    return out;
}

inline std::vector<VertexSet> brute_minimal_separators(
    const Graph& g, const OracleBudget& budget = {}) {
    if (g.n() > budget.max_n_subsets)
        throw budget_error("subset oracle budget exceeded: n=" +
                           std::to_string(g.n()) + " > " +
                           std::to_string(budget.max_n_subsets));
    const int n = g.n();
    std::vector<VertexSet> out;
    if (n == 0) return out;
    auto adj = oracle_detail::adjacency_masks(g);
    uint32_t full = (1u << n) - 1;
    for (uint32_t s = 0; s < full; ++s) {
        int full_comps = 0;
        oracle_detail::for_each_component(adj, full & ~s, [&](uint32_t comp) {
            if (oracle_detail::mask_neighborhood(adj, comp) == s) ++full_comps;
        });
        if (full_comps < 2) continue;
        VertexSet sep(n);
        for (uint32_t it = s; it;) {
            int v = std::countr_zero(it);
            it &= it - 1;
            sep.set(v);
        }
        out.push_back(sep);
    }
    sort_sets(out);
    return out;
}

// Exhaustive induced-subgraph-isomorphism: every |V_F|-subset of the host,
// pruned by sorted degree sequence (an optimization that may not change
// results; disable via use_degree_prune to verify), then every bijection.
// Returns a map from pattern vertex to host vertex, or nullopt.
inline std::optional<std::vector<int>> brute_induced_iso(
    const Graph& g, const Graph& f, bool use_degree_prune = true,
    int max_pattern_n = 7, int max_host_n = 12) {
    if (f.n() > max_pattern_n || g.n() > max_host_n)
        throw budget_error("iso oracle budget exceeded: pattern n=" +
                           std::to_string(f.n()) + ", host n=" +
                           std::to_string(g.n()));
    const int k = f.n();
    if (k == 0) return std::vector<int>{};
    if (k > g.n()) return std::nullopt;
    auto adj = oracle_detail::adjacency_masks(g);
    std::vector<int> fdeg(k);
    for (int v = 0; v < k; ++v) fdeg[v] = f.degree(v);
    std::vector<int> fdeg_sorted = fdeg;
    std::sort(fdeg_sorted.begin(), fdeg_sorted.end());

    uint32_t full = (1u << g.n()) - 1;
    std::vector<int> host(k), deg_sorted(k);
    for (uint32_t x = 0; x <= full; ++x) {
        if (std::popcount(x) != k) continue;
        int idx = 0;
        for (uint32_t it = x; it;) {
            host[idx++] = std::countr_zero(it);
            it &= it - 1;
        }
        if (use_degree_prune) {
            for (int i = 0; i < k; ++i)
                deg_sorted[i] = std::popcount(adj[host[i]] & x);
            std::sort(deg_sorted.begin(), deg_sorted.end());
            if (deg_sorted != fdeg_sorted) continue;
        }
        std::sort(host.begin(), host.end());
        do {
            bool ok = true;
            for (int a = 0; ok && a < k; ++a)
                for (int b = a + 1; ok && b < k; ++b)
                    if (f.has_edge(a, b) != g.has_edge(host[a], host[b]))
                        ok = false;
            if (ok) return host;
        } while (std::next_permutation(host.begin(), host.end()));
    }
    return std::nullopt;
}

// Checks that (bags, tree_edges) is a tree decomposition of g of width <= t:
// the edges form a tree over the bags, every vertex and every edge of g is
// inside some bag, and each vertex's bags induce a connected subtree.
inline bool verify_tree_decomposition(const Graph& g,
                                      const std::vector<VertexSet>& bags,
                                      const std::vector<std::pair<int, int>>& tree_edges,
                                      int t, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (bags.empty())
        return g.n() == 0 ? true : fail("no bags for a nonempty graph");
    const int b = (int)bags.size();
    if ((int)tree_edges.size() != b - 1) return fail("edge count is not bags-1");
    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b || x == y)
            return fail("bad tree edge");
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    // Connectivity of the bag tree.
    {
        std::vector<char> seen(b, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tadj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != b) return fail("bag tree is disconnected");
    }
    VertexSet covered(g.n());
    for (const VertexSet& bag : bags) {
        if (bag.width() != g.n()) return fail("bag width mismatch");
        if (bag.count() > t + 1) return fail("bag larger than t+1");
        covered |= bag;
    }
    if (!(covered == g.vertices())) return fail("some vertex is in no bag");
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const VertexSet& bag : bags)
            if (bag.test(u) && bag.test(v)) {
                found = true;
                break;
            }
        if (!found) return fail("some edge is in no bag");
    }
    for (int v = 0; v < g.n(); ++v) {
        int total = 0, start = -1;
        for (int i = 0; i < b; ++i)
            if (bags[i].test(v)) {
                ++total;
                start = i;
            }
        std::vector<char> seen(b, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tadj[x])
                if (!seen[y] && bags[y].test(v)) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != total) return fail("vertex occurrences not connected");
    }
    return true;
}

}  // namespace triangulex
