// Command-line front end: enumeration, solving, oracle cross-checks, and a
// micro-benchmark, with deterministic text output and one JSON envelope.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "triangulex/artifacts.hpp"
#include "triangulex/dp_subgraph.hpp"
#include "triangulex/gen.hpp"
#include "triangulex/io.hpp"
#include "triangulex/iso_dp.hpp"
#include "triangulex/oracle.hpp"

using nlohmann::json;
using namespace triangulex;

namespace {

struct RunConfig {
    std::string input;
    std::string pattern;
    std::string task;
    int t = -1;
    bool has_t = false;
    bool count_only = false;
    bool as_json = false;
    bool verify = false;
    bool profile = false;
    bool certify = false;
    bool no_prune = false;
    int budget_n = 0;  // 0 keeps the per-oracle defaults
    int threads = 1;
    int seed = 1;
    int gnp_n = 0;
    double gnp_p = 0.3;
    int cycle_n = 0;
    int empty_n = 0;
};

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

OracleBudget oracle_budget(const RunConfig& cfg) {
    OracleBudget b;
    if (cfg.budget_n > 0) {
        b.max_n_subsets = cfg.budget_n;
        b.max_n_treewidth = std::max(cfg.budget_n, b.max_n_treewidth);
    }
    return b;
}

// Canonical form for set outputs: vertices ascending, sets lexicographic.
std::vector<std::vector<int>> canonical_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const VertexSet& s : sets) {
        std::vector<int> v;
        for (int x : s) v.push_back(x);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void print_lists(const std::vector<std::vector<int>>& lists) {
    for (const auto& l : lists) {
        for (size_t i = 0; i < l.size(); ++i)
            std::cout << (i ? " " : "") << l[i];
        std::cout << "\n";
    }
}

std::vector<int> to_list(const VertexSet& s) {
    std::vector<int> v;
    for (int x : s) v.push_back(x);
    return v;
}

json envelope(const char* command, const Graph& g, json result, json counts,
              double ms) {
    return json{{"command", command}, {"n", g.n()},
                {"m", g.m()},         {"result", std::move(result)},
                {"counts", std::move(counts)}, {"elapsed_ms", ms}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int exact_pattern_tw(const Graph& f) {
    if (f.n() > 24) throw error("pattern exceeds 24 vertices");
    OracleBudget wide;
    wide.max_n_treewidth = 24;
    for (int k = 0; k < std::max(f.n(), 1); ++k)
        if (tw_elimination_order(f, k, wide)) return k;
    return std::max(f.n() - 1, 0);
}

int cmd_seps(const RunConfig& cfg) {
    Timer timer;
    Graph g = load_graph(cfg.input);
    auto lists = canonical_lists(enumerate_minimal_separators(g));
    if (cfg.verify) {
        auto ref = canonical_lists(brute_minimal_separators(g, oracle_budget(cfg)));
        if (lists != ref) {
            std::cerr << "verification mismatch: fast " << lists.size()
                      << " separators, oracle " << ref.size() << "\n";
            return 1;
        }
    }
    if (cfg.as_json)
        emit(envelope("seps", g, json{{"separators", lists}},
                      json{{"separators", lists.size()}}, timer.ms()));
    else if (cfg.count_only)
        std::cout << lists.size() << "\n";
    else
        print_lists(lists);
    return 0;
}

int cmd_pmcs(const RunConfig& cfg) {
    Timer timer;
    Graph g = load_graph(cfg.input);
    std::vector<VertexSet> omegas;
    for (const PmcRecord& r : enumerate_pmcs(g, cfg.threads))
        omegas.push_back(r.omega);
    auto lists = canonical_lists(omegas);
    if (cfg.verify) {
        if (cfg.budget_n == 0 && g.n() > 13)
            throw error("pmcs verification is capped at n = 13; raise --budget-n");
        auto ref = canonical_lists(brute_pmcs(g, oracle_budget(cfg)));
        if (lists != ref) {
            std::cerr << "verification mismatch: fast " << lists.size()
                      << " potential maximal cliques, oracle " << ref.size()
                      << "\n";
            return 1;
        }
    }
    if (cfg.as_json)
        emit(envelope("pmcs", g, json{{"pmcs", lists}},
                      json{{"pmcs", lists.size()}}, timer.ms()));
    else if (cfg.count_only)
        std::cout << lists.size() << "\n";
    else
        print_lists(lists);
    return 0;
}

// Oracle certification of the witness: the subset DP covers n <= 20 outright
// and stretches to 24 when t <= 3; anything larger is refused.
void certify_witness(const Graph& g, const MaxSubResult& r, int t) {
    int wn = r.witness.count();
    OracleBudget wb;
    if (wn > wb.max_n_treewidth) {
        if (t <= 3 && wn <= 24)
            wb.max_n_treewidth = wn;
        else
            throw error("cannot certify a witness of " + std::to_string(wn) +
                        " vertices with t = " + std::to_string(t));
    }
    Graph wg = g.induced_subgraph(r.witness).first;
    if (!decide_treewidth_le(wg, t, wb))
        throw internal_error("witness treewidth exceeds the bound");
}

int run_maxsub_once(const Graph& g, const GraphArtifacts& art,
                    const RunConfig& cfg, int t, const Timer& timer) {
    MaxSubResult r = solve_max_induced_tw(g, t, art);
    if (cfg.certify) certify_witness(g, r, t);
    if (cfg.verify) {
        auto [ref_ell, ref_set] = brute_max_induced_tw(g, t, oracle_budget(cfg));
        if (ref_ell != r.ell_max) {
            std::cerr << "verification mismatch: fast ell_max " << r.ell_max
                      << ", oracle " << ref_ell << "\n";
            return 1;
        }
    }
    std::vector<int> profile(r.decision.begin(), r.decision.end());
    if (cfg.as_json) {
        std::vector<std::vector<int>> bags;
        for (const VertexSet& b : r.bags) bags.push_back(to_list(b));
        json result{{"t", t},
                    {"ell_max", r.ell_max},
                    {"witness", to_list(r.witness)},
                    {"profile", profile},
                    {"bags", bags},
                    {"tree_edges", r.tree_edges}};
        emit(envelope("maxsub", g, result,
                      json{{"separators", art.seps.size()},
                           {"pmcs", art.pmcs.size()},
                           {"triples", art.triples.size()}},
                      timer.ms()));
    } else {
        std::cout << r.ell_max << "\n";
        auto w = to_list(r.witness);
        for (size_t i = 0; i < w.size(); ++i)
            std::cout << (i ? " " : "") << w[i];
        std::cout << "\n";
        if (cfg.profile) {
            for (size_t i = 0; i < profile.size(); ++i)
                std::cout << (i ? " " : "") << profile[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_maxsub(const RunConfig& cfg) {
    Timer timer;
    Graph g = load_graph(cfg.input);
    GraphArtifacts art = build_artifacts(g, cfg.threads);
    if (cfg.has_t) return run_maxsub_once(g, art, cfg, cfg.t, timer);
    if (!cfg.profile)
        throw error("maxsub requires --treewidth (or --profile for the 0..2 sweep)");
    for (int t = 0; t <= 2; ++t) {
        if (!cfg.as_json) std::cout << "t=" << t << "\n";
        int rc = run_maxsub_once(g, art, cfg, t, timer);
        if (rc != 0) return rc;
    }
    return 0;
}

int cmd_iso(const RunConfig& cfg) {
    Timer timer;
    Graph g = load_graph(cfg.input);
    Graph f = load_graph(cfg.pattern);
    int t = cfg.has_t ? cfg.t : exact_pattern_tw(f);
    GraphArtifacts art = build_artifacts(g, cfg.threads);
    auto emb = solve_induced_iso(g, f, t, art);
    if (cfg.verify) {
        int pat_cap = cfg.budget_n > 0 ? cfg.budget_n : 7;
        int host_cap = cfg.budget_n > 0 ? cfg.budget_n : 12;
        auto ref = brute_induced_iso(g, f, true, pat_cap, host_cap);
        if (ref.has_value() != emb.has_value()) {
            std::cerr << "verification mismatch: fast says "
                      << (emb ? "yes" : "no") << ", oracle says "
                      << (ref ? "yes" : "no") << "\n";
            return 1;
        }
    }
    if (cfg.as_json) {
        json result{{"treewidth", t}, {"embedding", nullptr}};
        if (emb) {
            std::vector<std::vector<int>> pairs;
            for (int v = 0; v < f.n(); ++v)
                pairs.push_back({v, (*emb)[v]});
            result["embedding"] = pairs;
        }
        emit(envelope("iso", g, result,
                      json{{"separators", art.seps.size()},
                           {"pmcs", art.pmcs.size()},
                           {"pattern_n", f.n()}},
                      timer.ms()));
    } else if (emb) {
        for (int v = 0; v < f.n(); ++v)
            std::cout << v << " -> " << (*emb)[v] << "\n";
    } else {
        std::cout << "none\n";
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    Timer timer;
    Graph g = load_graph(cfg.input);
    OracleBudget budget = oracle_budget(cfg);
    if (cfg.task == "seps") {
        auto lists = canonical_lists(brute_minimal_separators(g, budget));
        if (cfg.as_json)
            emit(envelope("oracle", g,
                          json{{"task", "seps"}, {"separators", lists}},
                          json{{"separators", lists.size()}}, timer.ms()));
        else if (cfg.count_only)
            std::cout << lists.size() << "\n";
        else
            print_lists(lists);
        return 0;
    }
    if (cfg.task == "pmcs") {
        auto lists = canonical_lists(brute_pmcs(g, budget));
        if (cfg.as_json)
            emit(envelope("oracle", g, json{{"task", "pmcs"}, {"pmcs", lists}},
                          json{{"pmcs", lists.size()}}, timer.ms()));
        else if (cfg.count_only)
            std::cout << lists.size() << "\n";
        else
            print_lists(lists);
        return 0;
    }
    if (cfg.task == "maxsub") {
        if (!cfg.has_t) throw error("oracle maxsub requires --treewidth");
        auto [ell, set] = brute_max_induced_tw(g, cfg.t, budget);
        if (cfg.as_json) {
            emit(envelope("oracle", g,
                          json{{"task", "maxsub"},
                               {"t", cfg.t},
                               {"ell_max", ell},
                               {"witness", to_list(set)}},
                          json{}, timer.ms()));
        } else {
            std::cout << ell << "\n";
            auto w = to_list(set);
            for (size_t i = 0; i < w.size(); ++i)
                std::cout << (i ? " " : "") << w[i];
            std::cout << "\n";
        }
        return 0;
    }
    if (cfg.task == "iso") {
        if (cfg.pattern.empty()) throw error("oracle iso requires --pattern");
        Graph f = load_graph(cfg.pattern);
        int pat_cap = cfg.budget_n > 0 ? cfg.budget_n : 7;
        int host_cap = cfg.budget_n > 0 ? cfg.budget_n : 12;
        auto emb = brute_induced_iso(g, f, !cfg.no_prune, pat_cap, host_cap);
        if (cfg.as_json) {
            json result{{"task", "iso"}, {"embedding", nullptr}};
            if (emb) {
                std::vector<std::vector<int>> pairs;
                for (int v = 0; v < f.n(); ++v) pairs.push_back({v, (*emb)[v]});
                result["embedding"] = pairs;
            }
            emit(envelope("oracle", g, result, json{{"pattern_n", f.n()}},
                          timer.ms()));
        } else if (emb) {
            for (int v = 0; v < f.n(); ++v)
                std::cout << v << " -> " << (*emb)[v] << "\n";
        } else {
            std::cout << "none\n";
        }
        return 0;
    }
    throw error("unknown oracle task: " + cfg.task +
                " (expected seps, pmcs, maxsub, or iso)");
}

int cmd_bench(const RunConfig& cfg) {
    Graph g(0, {});
    int sources = (!cfg.input.empty()) + (cfg.gnp_n > 0) + (cfg.cycle_n > 0) +
                  (cfg.empty_n > 0);
    if (sources != 1)
        throw error("bench needs exactly one of: <file>, --gnp-n, --cycle-n, --empty-n");
    Timer tload;
    if (!cfg.input.empty())
        g = load_graph(cfg.input);
    else if (cfg.gnp_n > 0)
        g = random_gnp(cfg.gnp_n, cfg.gnp_p, cfg.seed);
    else if (cfg.cycle_n > 0)
        g = cycle_graph(cfg.cycle_n);
    else
        g = empty_graph(cfg.empty_n);
    emit(json{{"phase", "load"}, {"n", g.n()}, {"m", g.m()},
              {"elapsed_ms", tload.ms()}});

    GraphArtifacts art;
    Timer ts;
    art.seps = enumerate_minimal_separators(g);
    emit(json{{"phase", "separators"}, {"count", art.seps.size()},
              {"elapsed_ms", ts.ms()}});

    Timer tb;
    art.blocks = all_full_blocks(g, art.seps);
    emit(json{{"phase", "blocks"}, {"count", art.blocks.size()},
              {"elapsed_ms", tb.ms()}});

    Timer tp;
    art.pmcs = enumerate_pmcs(g, cfg.threads);
    emit(json{{"phase", "pmcs"}, {"count", art.pmcs.size()},
              {"elapsed_ms", tp.ms()}});

    Timer tt;
    art.triples = good_triples(g, art.blocks, art.pmcs);
    for (size_t i = 0; i < art.blocks.size(); ++i) {
        art.block_by_union.emplace(art.blocks[i].whole(), (int)i);
        art.blocks_by_separator[art.blocks[i].separator].push_back((int)i);
    }
    art.triples_by_block.resize(art.blocks.size());
    for (size_t i = 0; i < art.triples.size(); ++i)
        art.triples_by_block[art.triples[i].block_id].push_back((int)i);
    emit(json{{"phase", "triples"}, {"count", art.triples.size()},
              {"elapsed_ms", tt.ms()}});

    int t = cfg.has_t ? cfg.t : 1;
    Timer td;
    MaxSubSolver solver(g, t, art);
    MaxSubResult r = solver.solve();
    emit(json{{"phase", "maxsub"}, {"t", t}, {"ell_max", r.ell_max},
              {"states", solver.alpha_state_count()}, {"elapsed_ms", td.ms()}});

    // sanity budget on the separator count, not a performance claim
    double bound = std::ceil(std::pow(1.6181, g.n()));
    bool ok = (double)art.seps.size() <= bound;
    emit(json{{"phase", "budget"}, {"separator_bound", bound},
              {"separators", art.seps.size()}, {"ok", ok}});
    return ok ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_flag("--json", cfg.as_json, "emit one JSON envelope");
    sub->add_option("--budget-n", cfg.budget_n,
                    "override oracle size caps")
        ->envname("TRIANGULEX_BUDGET_N");
    sub->add_option("--threads", cfg.threads, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"exact triangulation-based graph algorithms"};
    app.require_subcommand(1);

    CLI::App* seps = app.add_subcommand("seps", "enumerate minimal separators");
    seps->add_option("file", cfg.input, "graph file")->required();
    seps->add_flag("--count", cfg.count_only, "print only the cardinality");
    seps->add_flag("--verify", cfg.verify, "cross-check against the oracle");
    add_common(seps, cfg);

    CLI::App* pmcs =
        app.add_subcommand("pmcs", "enumerate potential maximal cliques");
    pmcs->add_option("file", cfg.input, "graph file")->required();
    pmcs->add_flag("--count", cfg.count_only, "print only the cardinality");
    pmcs->add_flag("--verify", cfg.verify, "cross-check against the oracle");
    add_common(pmcs, cfg);

    CLI::App* maxsub = app.add_subcommand(
        "maxsub", "largest induced subgraph of treewidth at most t");
    maxsub->add_option("file", cfg.input, "graph file")->required();
    CLI::Option* maxsub_t =
        maxsub->add_option("-t,--treewidth", cfg.t, "treewidth bound");
    maxsub->add_flag("--profile", cfg.profile,
                     "also print the feasibility vector over sizes");
    maxsub->add_flag("--certify", cfg.certify,
                     "force oracle certification of the witness");
    maxsub->add_flag("--verify", cfg.verify, "cross-check against the oracle");
    add_common(maxsub, cfg);

    CLI::App* iso =
        app.add_subcommand("iso", "induced subgraph isomorphism");
    iso->add_option("file", cfg.input, "host graph file")->required();
    iso->add_option("--pattern", cfg.pattern, "pattern graph file")->required();
    CLI::Option* iso_t = iso->add_option(
        "-t,--treewidth", cfg.t,
        "pattern treewidth bound (default: computed exactly)");
    iso->add_flag("--verify", cfg.verify, "cross-check against the oracle");
    add_common(iso, cfg);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "brute-force reference versions of the main commands");
    oracle->add_option("task", cfg.task, "seps | pmcs | maxsub | iso")
        ->required();
    oracle->add_option("file", cfg.input, "graph file")->required();
    oracle->add_option("--pattern", cfg.pattern, "pattern graph file");
    CLI::Option* oracle_t =
        oracle->add_option("-t,--treewidth", cfg.t, "treewidth bound");
    oracle->add_flag("--count", cfg.count_only, "print only the cardinality");
    oracle->add_flag("--no-prune", cfg.no_prune,
                     "disable degree-sequence pruning in the iso oracle");
    add_common(oracle, cfg);

    CLI::App* bench = app.add_subcommand(
        "bench", "per-phase timing and counts as JSON lines");
    bench->add_option("file", cfg.input, "graph file");
    bench->add_option("--gnp-n", cfg.gnp_n, "random graph size");
    bench->add_option("--gnp-p", cfg.gnp_p, "random graph edge probability");
    bench->add_option("--cycle-n", cfg.cycle_n, "cycle size");
    bench->add_option("--empty-n", cfg.empty_n, "edgeless graph size");
    bench->add_option("--seed", cfg.seed, "random seed");
    CLI::Option* bench_t =
        bench->add_option("-t,--treewidth", cfg.t, "bound for the solve phase");
    add_common(bench, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.has_t = maxsub_t->count() > 0 || iso_t->count() > 0 ||
                oracle_t->count() > 0 || bench_t->count() > 0;

    try {
        if (app.got_subcommand(seps)) return cmd_seps(cfg);
        if (app.got_subcommand(pmcs)) return cmd_pmcs(cfg);
        if (app.got_subcommand(maxsub)) return cmd_maxsub(cfg);
        if (app.got_subcommand(iso)) return cmd_iso(cfg);
        if (app.got_subcommand(oracle)) return cmd_oracle(cfg);
        if (app.got_subcommand(bench)) return cmd_bench(cfg);
        throw error("no command selected");
    } catch (const internal_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
