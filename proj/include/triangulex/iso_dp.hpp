#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triangulex/artifacts.hpp"
#include "triangulex/chordal.hpp"
#include "triangulex/common.hpp"
#include "triangulex/graph.hpp"
#include "triangulex/matching.hpp"
#include "triangulex/oracle.hpp"
#include "triangulex/vertex_set.hpp"

// Induced-subgraph isomorphism for patterns of treewidth <= t. The host is
// explored along its minimal separators and good triples exactly like the
// subgraph program; the pattern rides along as explicit vertex sets. A state
// fixes the pattern vertices mapped into a block separator and defers whole
// components of the remaining pattern into the block, so several components
// may share one host component when no one-to-one split exists.

namespace triangulex {

// Width-t structure of the pattern: a minimal triangulation with clique
// number <= t+1 plus its clique and block landscape.
struct PatternDecomposition {
    Graph tf;
    std::vector<VertexSet> maximal_cliques;
    std::vector<Block> pattern_blocks;
    std::vector<GoodTriple> pattern_triples;
};

// Exact: an elimination-order search certifies tw(f) <= t or rejects.
inline PatternDecomposition triangulate_pattern(const Graph& f, int t) {
    check(t >= 0, "treewidth bound must be nonnegative");
    if (f.n() > 24) throw error("pattern exceeds 24 vertices");
    OracleBudget wide;
    wide.max_n_treewidth = 24;
    auto order = tw_elimination_order(f, t, wide);
    if (!order) throw error("pattern treewidth exceeds t");
    PatternDecomposition pd;
    pd.tf = minimize_triangulation(f, fill_in(f, *order));
    pd.maximal_cliques = maximal_cliques_of_chordal(pd.tf);
    check((int)pd.maximal_cliques.size() <= std::max(f.n(), 1),
          "a chordal graph admits at most max(n,1) maximal cliques");
    for (const VertexSet& q : pd.maximal_cliques)
        check(q.count() <= t + 1, "triangulation clique exceeds the width bound");
    GraphArtifacts ta = build_artifacts(pd.tf);
    pd.pattern_blocks = std::move(ta.blocks);
    pd.pattern_triples = std::move(ta.triples);
    return pd;
}

// Hard postcondition on every returned embedding: injective and induced.
inline void verify_embedding(const Graph& g, const Graph& f,
                             const std::vector<int>& img) {
    check((int)img.size() == f.n(), "embedding size differs from the pattern");
    VertexSet used(g.n());
    for (int v = 0; v < f.n(); ++v) {
        check(img[v] >= 0 && img[v] < g.n(), "embedding image out of range");
        check(!used.test(img[v]), "embedding reuses a host vertex");
        used.set(img[v]);
    }
    for (int u = 0; u < f.n(); ++u)
        for (int v = u + 1; v < f.n(); ++v)
            check(f.has_edge(u, v) == g.has_edge(img[u], img[v]),
                  "embedding is not induced");
}

class IsoSolver {
public:
    IsoSolver(const Graph& g, const Graph& f, int t, const GraphArtifacts& art)
        : g_(g), f_(f), art_(art), cap_(std::min(t + 1, f.n())) {
        check(t >= 0, "treewidth bound must be nonnegative");
    }

    // State: pattern set t_set mapped by images into the block separator,
    // pattern set p_set still to embed strictly inside the block component.
    // Feasible iff an injection extending the interface maps p_set into the
    // component with F[t_set|p_set] isomorphic to the image, induced.
    struct Key {
        int block_id;
        VertexSet t_set;
        VertexSet p_set;
        std::vector<int> images;  // host image per t_set vertex, ascending
        bool operator==(const Key& o) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            size_t h = std::hash<int>()(k.block_id);
            auto mix = [&h](size_t v) {
                h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            };
            mix(k.t_set.hash());
            mix(k.p_set.hash());
            for (int v : k.images) mix(std::hash<int>()(v));
            return h;
        }
    };

    using PairList = std::vector<std::pair<int, int>>;  // pattern -> host

    std::optional<std::vector<int>> solve() {
        if (f_.n() == 0) return std::vector<int>{};
        if (f_.n() > g_.n()) return std::nullopt;
        if (art_.seps.empty()) {
            // a complete host contains exactly the complete patterns
            if (!f_.is_complete()) return std::nullopt;
            std::vector<int> out(f_.n());
            for (int v = 0; v < f_.n(); ++v) out[v] = v;
            verify_embedding(g_, f_, out);
            return out;
        }
        std::vector<int> pool;
        for (int v = 0; v < f_.n(); ++v) pool.push_back(v);
        for (const VertexSet& s : art_.seps) {
            SubBlockList subs = resolve_sub_blocks(g_, art_, g_.vertices(), s);
            std::vector<int> targets = to_list(s);
            std::vector<int> pat, img;
            VertexSet used(g_.n());
            std::optional<PairList> found;
            auto eval = [&]() {
                VertexSet placed(f_.n());
                for (int v : pat) placed.set(v);
                found = place_pieces(subs, pat, img, f_.vertices() - placed);
                return found.has_value();
            };
            grow_placements(pool, 0, targets, cap_, pat, img, used, eval);
            if (found) {
                std::vector<int> out(f_.n(), -1);
                for (auto [pv, hv] : *found) {
                    check(out[pv] < 0, "duplicate pattern vertex in embedding");
                    out[pv] = hv;
                }
                verify_embedding(g_, f_, out);
                return out;
            }
        }
        return std::nullopt;
    }

    size_t state_count() const { return memo_.size(); }

    // Feasibility of one state, memoized; the value is a witness embedding
    // of t_set and p_set, or nullopt.
    const std::optional<PairList>& embed_in_block(const Key& key) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::optional<PairList> r = compute_block(key);
        return memo_.emplace(key, std::move(r)).first->second;
    }

private:
    std::optional<PairList> compute_block(const Key& key) {
        const Block& b = art_.blocks[key.block_id];
        std::vector<int> tverts = to_list(key.t_set);
        check(tverts.size() == key.images.size(), "interface size mismatch");
        for (size_t i = 0; i < tverts.size(); ++i) {
            check(b.separator.test(key.images[i]),
                  "interface image escapes the block separator");
            for (size_t j = i + 1; j < tverts.size(); ++j)
                if (f_.has_edge(tverts[i], tverts[j]) !=
                    g_.has_edge(key.images[i], key.images[j]))
                    return std::nullopt;
        }
        if (key.p_set.empty()) return zip(tverts, key.images);
        for (int t_id : art_.triples_by_block[key.block_id]) {
            auto r = try_triple(key, b,
                                art_.pmcs[art_.triples[t_id].omega_id].omega);
            if (r) return r;
        }
        return std::nullopt;
    }

    // Extends the interface by mapping a subset of p_set onto the triple's
    // PMC, then hands the untouched components down to the sub-blocks. The
    // interface plus extension stays within t+1 vertices; wider traces are
    // reached through a different separator or PMC of the host.
    std::optional<PairList> try_triple(const Key& key, const Block& b,
                                       const VertexSet& omega) {
        SubBlockList subs = resolve_sub_blocks(g_, art_, b.whole(), omega);
        std::vector<int> targets = to_list(omega & b.component);
        std::vector<int> pool = to_list(key.p_set);
        std::vector<int> pat = to_list(key.t_set);
        std::vector<int> img = key.images;
        VertexSet used(g_.n());
        for (int w : img) used.set(w);
        std::optional<PairList> found;
        auto eval = [&]() {
            VertexSet placed(f_.n());
            for (size_t k = key.images.size(); k < pat.size(); ++k)
                placed.set(pat[k]);
            found = place_pieces(subs, pat, img, key.p_set - placed);
            return found.has_value();
        };
        grow_placements(pool, 0, targets, cap_, pat, img, used, eval);
        return found;
    }

    // Enumerates injective, edge-parity-preserving placements of vertices
    // drawn from pool (ascending, each at most once) into targets, on top of
    // the pairs already in pat/img. eval runs at every prefix, the empty
    // extension first; a true return stops the walk at that prefix.
    template <typename Eval>
    bool grow_placements(const std::vector<int>& pool, size_t from,
                         const std::vector<int>& targets, int cap,
                         std::vector<int>& pat, std::vector<int>& img,
                         VertexSet& used, const Eval& eval) {
        if (eval()) return true;
        if ((int)pat.size() >= cap) return false;
        for (size_t i = from; i < pool.size(); ++i) {
            for (int w : targets) {
                if (used.test(w) || !parity_ok(pool[i], w, pat, img)) continue;
                pat.push_back(pool[i]);
                img.push_back(w);
                used.set(w);
                bool hit =
                    grow_placements(pool, i + 1, targets, cap, pat, img, used, eval);
                used.reset(w);
                img.pop_back();
                pat.pop_back();
                if (hit) return true;
            }
        }
        return false;
    }

    bool parity_ok(int x, int w, const std::vector<int>& pat,
                   const std::vector<int>& img) const {
        for (size_t k = 0; k < pat.size(); ++k)
            if (f_.has_edge(x, pat[k]) != g_.has_edge(w, img[k])) return false;
        return true;
    }

    // Distributes the components of F[rest] over the sub-blocks. Each
    // component must land inside a single host component: its pattern edges
    // make the image connected. A saturating one-to-one matching settles the
    // common case; otherwise an exact subset search lets several components
    // share a block.
    std::optional<PairList> place_pieces(const SubBlockList& subs,
                                         const std::vector<int>& pat,
                                         const std::vector<int>& img,
                                         const VertexSet& rest) {
        if (rest.empty()) return zip(pat, img);
        std::vector<VertexSet> pieces = f_.connected_components(rest);
        const int p = (int)pieces.size();
        const int q = (int)subs.ids.size();
        if (q == 0) return std::nullopt;

        // per-block interface: placed vertices whose images lie in that
        // block's separator, ascending by pattern vertex
        std::vector<size_t> order(pat.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t c) { return pat[a] < pat[c]; });
        std::vector<VertexSet> tset(q, VertexSet(f_.n()));
        std::vector<std::vector<int>> timg(q);
        for (int j = 0; j < q; ++j)
            for (size_t k : order)
                if (subs.seps[j].test(img[k])) {
                    tset[j].set(pat[k]);
                    timg[j].push_back(img[k]);
                }

        // a piece fits a block only when every placed attachment sits in the
        // block separator; an image elsewhere could never see the component,
        // while the pattern edge demands adjacency
        std::vector<std::vector<int>> allowed(p);
        for (int r = 0; r < p; ++r) {
            VertexSet nb = f_.neighborhood(pieces[r]);
            for (int j = 0; j < q; ++j) {
                if (!nb.is_subset_of(tset[j])) continue;
                if (embed_in_block(
                        Key{subs.ids[j], tset[j], pieces[r], timg[j]}))
                    allowed[r].push_back(j);
            }
            if (allowed[r].empty()) return std::nullopt;
        }

        {
            std::vector<std::pair<int, int>> edges;
            for (int r = 0; r < p; ++r)
                for (int j : allowed[r]) edges.push_back({r, j});
            BipartiteMatching m = maximum_bipartite_matching(p, q, edges);
            if (m.size == p) {
                std::vector<const PairList*> parts;
                for (int r = 0; r < p; ++r) {
                    int j = m.right_of_left[r];
                    const auto& child = embed_in_block(
                        Key{subs.ids[j], tset[j], pieces[r], timg[j]});
                    check(child.has_value(), "matched piece lost its embedding");
                    parts.push_back(&*child);
                }
                return assemble(pat, img, parts, rest);
            }
        }

        // pieces with a single viable block are forced there; the rest are
        // assigned by a subset DP whose block loads are checked jointly
        std::vector<VertexSet> must(q, VertexSet(f_.n()));
        std::vector<int> free_ids;
        for (int r = 0; r < p; ++r) {
            if (allowed[r].size() == 1)
                must[allowed[r][0]] |= pieces[r];
            else
                free_ids.push_back(r);
        }
        const int nf = (int)free_ids.size();
        if (nf > 16)
            throw budget_error("piece distribution too large: " +
                               std::to_string(nf) + " movable pieces");
        const uint32_t full = (uint32_t(1) << nf) - 1;
        std::vector<uint32_t> amask(q, 0);
        for (int fi = 0; fi < nf; ++fi)
            for (int j : allowed[free_ids[fi]]) amask[j] |= uint32_t(1) << fi;

        std::vector<std::unordered_map<uint32_t, char>> takes(q);
        auto block_takes = [&](int j, uint32_t sub) -> bool {
            if (sub == 0 && must[j].empty()) return true;
            auto [it, fresh] = takes[j].try_emplace(sub, 0);
            if (fresh) {
                VertexSet pj = must[j];
                for (uint32_t s = sub; s;) {
                    int fi = std::countr_zero(s);
                    s &= s - 1;
                    pj |= pieces[free_ids[fi]];
                }
                it->second = embed_in_block(
                                 Key{subs.ids[j], tset[j], pj, timg[j]})
                                 .has_value()
                                 ? 1
                                 : 0;
            }
            return it->second != 0;
        };

        // suffix[j][mask]: blocks j.. can host exactly the free pieces in
        // mask on top of their forced loads
        std::vector<std::vector<char>> suffix(q + 1,
                                              std::vector<char>(full + 1, 0));
        suffix[q][0] = 1;
        for (int j = q - 1; j >= 0; --j)
            for (uint32_t mask = 0; mask <= full; ++mask) {
                uint32_t avail = mask & amask[j];
                for (uint32_t sub = avail;; sub = (sub - 1) & avail) {
                    if (suffix[j + 1][mask & ~sub] && block_takes(j, sub)) {
                        suffix[j][mask] = 1;
                        break;
                    }
                    if (sub == 0) break;
                }
            }
        if (!suffix[0][full]) return std::nullopt;

        std::vector<const PairList*> parts;
        uint32_t remaining = full;
        for (int j = 0; j < q; ++j) {
            uint32_t avail = remaining & amask[j];
            bool stepped = false;
            for (uint32_t sub = avail;; sub = (sub - 1) & avail) {
                if (suffix[j + 1][remaining & ~sub] && block_takes(j, sub)) {
                    VertexSet pj = must[j];
                    for (uint32_t s = sub; s;) {
                        int fi = std::countr_zero(s);
                        s &= s - 1;
                        pj |= pieces[free_ids[fi]];
                    }
                    if (!pj.empty()) {
                        const auto& child = embed_in_block(
                            Key{subs.ids[j], tset[j], pj, timg[j]});
                        check(child.has_value(),
                              "assigned pieces lost their embedding");
                        parts.push_back(&*child);
                    }
                    remaining &= ~sub;
                    stepped = true;
                    break;
                }
                if (sub == 0) break;
            }
            check(stepped, "distribution reconstruction lost a block");
        }
        check(remaining == 0, "free pieces left unplaced");
        return assemble(pat, img, parts, rest);
    }

    // Joins the interface pairs with the children, checking injectivity and
    // agreement on shared vertices, and that nothing was dropped.
    std::optional<PairList> assemble(const std::vector<int>& pat,
                                     const std::vector<int>& img,
                                     const std::vector<const PairList*>& parts,
                                     const VertexSet& rest) const {
        std::vector<int> acc(f_.n(), -1);
        VertexSet taken(g_.n());
        auto add = [&](int pv, int hv) {
            if (acc[pv] < 0) {
                check(!taken.test(hv), "two pattern vertices share a host vertex");
                acc[pv] = hv;
                taken.set(hv);
            } else {
                check(acc[pv] == hv, "conflicting images for a pattern vertex");
            }
        };
        for (size_t k = 0; k < pat.size(); ++k) add(pat[k], img[k]);
        for (const PairList* pl : parts)
            for (auto [pv, hv] : *pl) add(pv, hv);
        PairList out;
        for (int v = 0; v < f_.n(); ++v)
            if (acc[v] >= 0) out.push_back({v, acc[v]});
        check((int)out.size() == (int)pat.size() + rest.count(),
              "assembled embedding misses pattern vertices");
        return out;
    }

    static PairList zip(const std::vector<int>& pat, const std::vector<int>& img) {
        PairList out(pat.size());
        for (size_t k = 0; k < pat.size(); ++k) out[k] = {pat[k], img[k]};
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::vector<int> to_list(const VertexSet& s) {
        std::vector<int> out;
        for (int v : s) out.push_back(v);
        return out;
    }

    const Graph& g_;
    const Graph& f_;
    const GraphArtifacts& art_;
    int cap_;  // interface and trace budget: min(t+1, |V_F|)
    std::unordered_map<Key, std::optional<PairList>, KeyHash> memo_;
};

// Decides whether g contains an induced subgraph isomorphic to f and returns
// the embedding as host image per pattern vertex. Validates tw(f) <= t
// first; a pattern larger than the host is an immediate no.
inline std::optional<std::vector<int>> solve_induced_iso(
    const Graph& g, const Graph& f, int t, const GraphArtifacts& art) {
    (void)triangulate_pattern(f, t);
    return IsoSolver(g, f, t, art).solve();
}

inline std::optional<std::vector<int>> solve_induced_iso(const Graph& g,
                                                         const Graph& f,
                                                         int t) {
    GraphArtifacts art = build_artifacts(g);
    return solve_induced_iso(g, f, t, art);
}

}  // namespace triangulex
