#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triangulex/artifacts.hpp"
#include "triangulex/chordal.hpp"
#include "triangulex/common.hpp"
#include "triangulex/graph.hpp"
#include "triangulex/oracle.hpp"
#include "triangulex/vertex_set.hpp"

// Exact maximum induced subgraph of treewidth <= t. Feasible sizes are
// computed per full block as bit masks over ell, lifted through the good
// triples of each block, and glued across every minimal separator. Complete
// graphs have no minimal separators and are answered directly.

namespace triangulex {

struct MaxSubResult {
    int ell_max = 0;
    VertexSet witness;
    std::vector<char> decision;  // decision[ell] for ell = 0..n
    // Tree decomposition of g[witness] with width <= t, in vertex labels of
    // g. Empty exactly when the witness is empty.
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;
};

struct MaxSubOptions {
    // Answer ell = n directly when the whole graph already has treewidth
    // <= t and is small enough for the oracle to decide.
    bool tw_precheck = true;
    // Re-check the witness and its decomposition before returning.
    bool verify = true;
};

class MaxSubSolver {
public:
    MaxSubSolver(const Graph& g, int t, const GraphArtifacts& art)
        : g_(g), art_(art), n_(g.n()), t_(std::min(t, g.n())) {
        check(t >= 0, "treewidth bound must be nonnegative");
        alpha_.resize(art_.blocks.size());
    }

    using SubBlocks = SubBlockList;

    SubBlocks resolve_subs(const VertexSet& domain, const VertexSet& head) const {
        return resolve_sub_blocks(g_, art_, domain, head);
    }

    // Runs fn on every subset of set with at most cap members, empty set
    // included, in prefix order of the ascending vertex list.
    template <typename Fn>
    static void for_each_subset_up_to(const VertexSet& set, int cap, Fn&& fn) {
        std::vector<int> verts;
        for (int v : set) verts.push_back(v);
        VertexSet cur(set.width());
        auto rec = [&](auto&& self, size_t from, int left) -> void {
            fn(cur);
            if (left <= 0) return;
            for (size_t i = from; i < verts.size(); ++i) {
                cur.set(verts[i]);
                self(self, i + 1, left - 1);
                cur.reset(verts[i]);
            }
        };
        rec(rec, 0, cap);
    }

    // Feasible-size mask of a block at interface w, or null when empty.
    const VertexSet* alpha_lookup(int block_id, const VertexSet& w) const {
        const auto& m = alpha_[block_id];
        auto it = m.find(w);
        return it == m.end() ? nullptr : &it->second;
    }

    // Number of (block, interface) entries the program materialized.
    size_t alpha_state_count() const {
        size_t total = 0;
        for (const auto& m : alpha_) total += m.size();
        return total;
    }

    // Inclusion-minimal blocks admit exactly the subgraphs that equal their
    // interface choice: seed [ell == |w|] for every w inside the separator.
    void compute_alpha_base(int block_id) {
        const Block& b = art_.blocks[block_id];
        if (!b.is_inclusion_minimal) return;
        for_each_subset_up_to(b.separator, t_ + 1, [&](const VertexSet& w) {
            slot(block_id, w).set(w.count());
        });
    }

    // masks[j] holds the feasible sizes using the interface plus the first j
    // components; masks[0] seeds the interface alone. An unreachable alpha
    // entry leaves every later mask empty.
    std::vector<VertexSet> compute_gamma(const SubBlocks& subs,
                                         const VertexSet& w) const {
        std::vector<VertexSet> masks(subs.ids.size() + 1, VertexSet(n_ + 1));
        masks[0].set(w.count());
        for (size_t j = 0; j < subs.ids.size(); ++j) {
            if (masks[j].empty()) break;
            VertexSet wj = w & subs.seps[j];
            const VertexSet* am = alpha_lookup(subs.ids[j], wj);
            if (!am) break;
            masks[j + 1] = convolve(masks[j], *am, wj.count());
        }
        return masks;
    }

    std::vector<VertexSet> compute_gamma(int triple_id, const VertexSet& w) const {
        const GoodTriple& tr = art_.triples[triple_id];
        const Block& b = art_.blocks[tr.block_id];
        const VertexSet& omega = art_.pmcs[tr.omega_id].omega;
        return compute_gamma(resolve_subs(b.whole(), omega), w);
    }

    // Lifts feasibility through the good triples of the block: for each
    // subset w' of the PMC, the combined mask over the components of
    // (S∪C)∖Ω lands at the separator trace w'∩S with ell unchanged. Only
    // that trace is sound: a looser target would count the vertices of
    // w'∖target while the interface claims they are absent.
    void lift_alpha(int block_id) {
        const Block& b = art_.blocks[block_id];
        for (int t_id : art_.triples_by_block[block_id]) {
            const VertexSet& omega = art_.pmcs[art_.triples[t_id].omega_id].omega;
            SubBlocks subs = resolve_subs(b.whole(), omega);
            for_each_subset_up_to(omega, t_ + 1, [&](const VertexSet& wp) {
                VertexSet beta = compute_gamma(subs, wp).back();
                if (beta.empty()) return;
                slot(block_id, wp & b.separator) |= beta;
            });
        }
    }

    // Combines the block masks across every minimal separator: each
    // component of G∖S is a full block read at its trace of w. Records the
    // first (separator, w) reaching each ell for reconstruction. Size 0 is
    // always feasible via the empty subgraph.
    std::vector<char> glue_at_separators() {
        decision_ = VertexSet(n_ + 1);
        decision_.set(0);
        realizer_.assign(n_ + 1, {-1, VertexSet(n_)});
        for (size_t sid = 0; sid < art_.seps.size(); ++sid) {
            SubBlocks subs = resolve_subs(g_.vertices(), art_.seps[sid]);
            for_each_subset_up_to(
                art_.seps[sid], t_ + 1, [&](const VertexSet& w) {
                    VertexSet mask = compute_gamma(subs, w).back();
                    for (int ell = mask.first(); ell >= 0; ell = mask.next(ell)) {
                        if (decision_.test(ell)) continue;
                        decision_.set(ell);
                        realizer_[ell] = {(int)sid, w};
                    }
                });
        }
        std::vector<char> out(n_ + 1, 0);
        for (int ell = 0; ell <= n_; ++ell) out[ell] = decision_.test(ell);
        for (int ell = 1; ell <= n_; ++ell)
            check(!out[ell] || out[ell - 1],
                  "feasible sizes are not downward closed");
        return out;
    }

    // A realized subgraph plus a tree decomposition of it, rooted at a bag
    // that contains the interface the parent composed on.
    struct Extract {
        VertexSet verts;
        std::vector<VertexSet> bags;
        std::vector<std::pair<int, int>> edges;
        int root = 0;
    };

    // Rebuilds a witness of the recorded size from the glue realizer.
    Extract reconstruct_witness(int ell) const {
        check(ell >= 1 && ell <= n_ && decision_.test(ell),
              "no witness recorded for this size");
        const auto& [sid, w] = realizer_[ell];
        check(sid >= 0, "missing realizer for a feasible size");
        SubBlocks subs = resolve_subs(g_.vertices(), art_.seps[sid]);
        auto masks = compute_gamma(subs, w);
        check(masks.back().test(ell), "realizer no longer reaches its size");
        return compose(w, subs, masks, ell);
    }

    MaxSubResult solve(const MaxSubOptions& opt = {}) {
        MaxSubResult r;
        r.decision.assign(n_ + 1, 0);
        r.decision[0] = 1;
        r.witness = VertexSet(n_);
        if (n_ == 0) return r;
        if (art_.seps.empty()) {
            // No minimal separator means the graph is complete: any t+1
            // vertices form the largest feasible clique.
            r.ell_max = std::min(n_, t_ + 1);
            for (int v = 0; v < r.ell_max; ++v) r.witness.set(v);
            for (int ell = 1; ell <= r.ell_max; ++ell) r.decision[ell] = 1;
            r.bags.push_back(r.witness);
            if (opt.verify) verify_result(r);
            return r;
        }
        if (opt.tw_precheck && n_ <= OracleBudget{}.max_n_treewidth) {
            if (auto order = tw_elimination_order(g_, t_)) {
                r.ell_max = n_;
                r.witness = g_.vertices();
                r.decision.assign(n_ + 1, 1);
                r.bags = maximal_cliques_of_chordal(fill_in(g_, *order));
                r.tree_edges = junction_tree(r.bags);
                if (opt.verify) verify_result(r);
                return r;
            }
        }
        for (size_t b = 0; b < art_.blocks.size(); ++b) {
            compute_alpha_base((int)b);
            lift_alpha((int)b);
        }
        auto dec = glue_at_separators();
        r.decision = dec;
        for (int ell = 0; ell <= n_; ++ell)
            if (dec[ell]) r.ell_max = ell;
        if (r.ell_max > 0) {
            Extract e = reconstruct_witness(r.ell_max);
            check(e.verts.count() == r.ell_max, "witness has the wrong size");
            r.witness = e.verts;
            r.bags = std::move(e.bags);
            r.tree_edges = std::move(e.edges);
        }
        if (opt.verify) verify_result(r);
        return r;
    }

    // Independent re-check of a finished result: the decomposition must
    // certify width <= t on the witness subgraph, and on small witnesses the
    // oracle must agree outright.
    void verify_result(const MaxSubResult& r) const {
        auto [wg, to_old] = g_.induced_subgraph(r.witness);
        std::vector<int> to_new(n_, -1);
        for (size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = (int)i;
        std::vector<VertexSet> bags;
        for (const VertexSet& bag : r.bags) {
            VertexSet nb(wg.n());
            for (int v : bag) {
                check(to_new[v] >= 0, "bag contains a vertex outside the witness");
                nb.set(to_new[v]);
            }
            bags.push_back(std::move(nb));
        }
        std::string why;
        check(verify_tree_decomposition(wg, bags, r.tree_edges, t_, &why),
              ("witness decomposition rejected: " + why).c_str());
        if (wg.n() <= OracleBudget{}.max_n_treewidth)
            check(decide_treewidth_le(wg, t_), "witness fails the treewidth oracle");
    }

private:
    VertexSet& slot(int block_id, const VertexSet& w) {
        return alpha_[block_id].try_emplace(w, VertexSet(n_ + 1)).first->second;
    }

    // OR-convolution step: acc carries sizes already placed, am carries the
    // sizes a component offers, of which overlap vertices are shared with
    // the interface and already counted.
    VertexSet convolve(const VertexSet& acc, const VertexSet& am, int overlap) const {
        VertexSet out(n_ + 1);
        for (int s = am.first(); s >= 0; s = am.next(s)) {
            check(s >= overlap, "component mask below its interface size");
            out |= acc.shifted(s - overlap);
        }
        return out;
    }

    // Walks one gamma chain backwards: splits[j] is the alpha size consumed
    // from component j when the chain realizes ell.
    std::vector<int> split_sizes(const SubBlocks& subs,
                                 const std::vector<VertexSet>& masks,
                                 const VertexSet& w, int ell) const {
        std::vector<int> splits(subs.ids.size(), 0);
        int cur = ell;
        for (size_t j = subs.ids.size(); j-- > 0;) {
            VertexSet wj = w & subs.seps[j];
            const VertexSet* am = alpha_lookup(subs.ids[j], wj);
            check(am != nullptr, "split walk lost an alpha entry");
            int overlap = wj.count();
            int found = -1;
            for (int i = masks[j].first(); i >= 0; i = masks[j].next(i)) {
                int s = cur - i + overlap;
                if (s >= overlap && s <= n_ && am->test(s)) {
                    found = s;
                    cur = i;
                    break;
                }
            }
            check(found >= 0, "split walk found no feasible division");
            splits[j] = found;
        }
        check(cur == w.count(), "split walk does not end at the interface");
        return splits;
    }

    // Assembles a subgraph and decomposition realizing alpha(ell, w) on the
    // block. The realizing triple is re-derived: extensions of w into Ω∖S
    // are exactly the PMC subsets whose separator trace is w.
    Extract extract_alpha(int block_id, const VertexSet& w, int ell) const {
        const Block& b = art_.blocks[block_id];
        for (int t_id : art_.triples_by_block[block_id]) {
            const VertexSet& omega = art_.pmcs[art_.triples[t_id].omega_id].omega;
            if (!w.is_subset_of(omega)) continue;
            SubBlocks subs = resolve_subs(b.whole(), omega);
            Extract out;
            bool done = false;
            for_each_subset_up_to(
                omega - b.separator, t_ + 1 - w.count(),
                [&](const VertexSet& ext) {
                    if (done) return;
                    VertexSet wp = w | ext;
                    auto masks = compute_gamma(subs, wp);
                    if (!masks.back().test(ell)) return;
                    out = compose(wp, subs, masks, ell);
                    done = true;
                });
            if (done) return out;
        }
        check(false, "no triple realizes a recorded alpha value");
        return {};
    }

    // Joins per-component extracts under a fresh root bag. The root covers
    // the interface edges; each component meets the rest only inside the
    // root bag, so gluing child roots to it keeps occurrences connected.
    Extract compose(const VertexSet& root_bag, const SubBlocks& subs,
                    const std::vector<VertexSet>& masks, int ell) const {
        Extract out;
        out.verts = root_bag;
        out.bags.push_back(root_bag);
        out.root = 0;
        std::vector<int> splits = split_sizes(subs, masks, root_bag, ell);
        for (size_t j = 0; j < subs.ids.size(); ++j) {
            VertexSet wj = root_bag & subs.seps[j];
            Extract child = extract_alpha(subs.ids[j], wj, splits[j]);
            int off = (int)out.bags.size();
            out.verts |= child.verts;
            for (VertexSet& bag : child.bags) out.bags.push_back(std::move(bag));
            for (auto [x, y] : child.edges) out.edges.emplace_back(x + off, y + off);
            out.edges.emplace_back(out.root, child.root + off);
        }
        check(out.verts.count() == ell, "composed subgraph has the wrong size");
        return out;
    }

    const Graph& g_;
    const GraphArtifacts& art_;
    int n_;
    int t_;
    std::vector<std::unordered_map<VertexSet, VertexSet>> alpha_;
    VertexSet decision_;
    std::vector<std::pair<int, VertexSet>> realizer_;
};

inline MaxSubResult solve_max_induced_tw(const Graph& g, int t,
                                         const GraphArtifacts& art,
                                         const MaxSubOptions& opt = {}) {
    MaxSubSolver solver(g, t, art);
    return solver.solve(opt);
}

inline MaxSubResult solve_max_induced_tw(const Graph& g, int t,
                                         const MaxSubOptions& opt = {}) {
    return solve_max_induced_tw(g, t, build_artifacts(g), opt);
}

}  // namespace triangulex
