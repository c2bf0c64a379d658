// Acceptance suite: runs every advertised guarantee end to end and prints one
// pass/fail line per criterion. Exit status 0 iff everything holds.

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "test_support.hpp"
#include "twoclub/cograph.hpp"
#include "twoclub/exact.hpp"
#include "twoclub/graph.hpp"
#include "twoclub/hindex.hpp"
#include "twoclub/modsolve.hpp"
#include "twoclub/reductions.hpp"
#include "twoclub/structparams.hpp"

using namespace twoclub;
using namespace twoclub::testing;

namespace {

std::vector<Graph> g_touched;  // every graph any criterion ran on, for criterion 10

void touch(const Graph& g) { g_touched.push_back(g); }

struct Failure {
    std::ostringstream message;
    bool failed = false;
};

#define EXPECT(cond, ...)                                   \
    do {                                                    \
        if (!(cond)) {                                      \
            if (!fail.failed) fail.message << __VA_ARGS__;  \
            fail.failed = true;                             \
        }                                                   \
    } while (0)

// ---------------------------------------------------------------- corpus ---

struct CorpusEntry {
    Graph graph;
    int n, oracle_size;
    std::int64_t dual_nodes;
};

std::vector<CorpusEntry>& criterion1_corpus() {
    static std::vector<CorpusEntry> corpus;
    return corpus;
}

// criteria 1 and 9: oracle vs dual vs turing(dual), branch-node bound
std::string run_oracle_concordance() {
    Failure fail;
    const double densities[] = {0.2, 0.5, 0.8};
    int made = 0;
    for (int i = 0; made < 200; ++i) {
        int n = 6 + i % 7;
        double p = densities[(i / 7) % 3];
        std::mt19937 rng(9000 + i);
        Graph g = erdos_renyi(n, p, rng);
        ++made;
        touch(g);

        auto oracle = oracle_max_2club(g);
        auto lower = heuristic_ball(g, 2);
        auto dual = dual_branching(g, 2, lower.size);
        auto inner = [](const Graph& sub) {
            return dual_branching(sub, 2, heuristic_ball(sub, 2).size);
        };
        auto turing = turing_kernel_solve(g, inner);

        EXPECT(oracle.size == dual.size && dual.size == turing.size,
               "sizes diverge on instance " << i << ": oracle " << oracle.size << ", dual "
                                            << dual.size << ", turing " << turing.size);
        EXPECT(verify_s_club(g, 2, oracle.best), "oracle witness invalid on instance " << i);
        EXPECT(verify_s_club(g, 2, dual.best), "dual witness invalid on instance " << i);
        EXPECT(verify_s_club(g, 2, turing.best), "turing witness invalid on instance " << i);
        EXPECT(lower.size <= oracle.size, "heuristic exceeds the optimum on instance " << i);

        criterion1_corpus().push_back({g, n, oracle.size, dual.stats.branch_nodes});
    }
    return fail.failed ? fail.message.str() : "";
}

// criterion 2: the alpha <= 2 algorithm against dual branching
std::string run_alpha2() {
    Failure fail;
    for (int i = 0; i < 100; ++i) {
        std::mt19937 rng(20000 + i);
        int n = 6 + i % 25;  // up to 30
        Graph tf = random_triangle_free(n, 0.35, rng);
        Graph g = complement(tf);
        touch(g);
        auto fast = independence2_solve(g, 2);
        auto slow = dual_branching(g, 2, heuristic_ball(g, 2).size);
        EXPECT(fast.size == slow.size, "instance " << i << ": alpha2 " << fast.size << " vs dual "
                                                   << slow.size);
        EXPECT(verify_s_club(g, 2, fast.best), "alpha2 witness invalid on instance " << i);
    }
    return fail.failed ? fail.message.str() : "";
}

// criterion 3: cluster-modulator DP vs the oracle
std::string run_cluster_dp() {
    Failure fail;
    for (int i = 0; i < 100; ++i) {
        std::mt19937 rng(30000 + i);
        std::uniform_int_distribution<int> cliques(1, 5), size(1, 3), apexes(0, 3);
        std::vector<int> sizes;
        for (int c = cliques(rng); c > 0; --c) sizes.push_back(size(rng));
        int apex_count = apexes(rng);
        Graph g = add_random_apexes(cluster_graph(sizes), apex_count, 0.5, rng);
        touch(g);
        VertexSet mod;
        for (int a = 0; a < apex_count; ++a) mod.push_back(g.num_vertices() - apex_count + a);

        auto dp = solve_cluster_modulator(g, mod);
        auto oracle = oracle_max_2club(g);
        EXPECT(dp.size == oracle.size,
               "instance " << i << ": dp " << dp.size << " vs oracle " << oracle.size);
        EXPECT(verify_s_club(g, 2, dp.best), "dp witness invalid on instance " << i);
    }
    return fail.failed ? fail.message.str() : "";
}

// criterion 4: cograph DP vs the oracle, plus cotree round trips
std::string run_cograph_dp() {
    Failure fail;
    for (int i = 0; i < 100; ++i) {
        std::mt19937 rng(40000 + i);
        std::uniform_int_distribution<int> size(3, 12), apexes(0, 3);
        Graph cograph = random_cograph(size(rng), rng);

        auto tree = build_cotree(cograph);
        Graph back = cotree_to_graph(tree, cograph.num_vertices());
        EXPECT(back.edge_list() == cograph.edge_list(), "cotree round trip differs on " << i);

        int apex_count = apexes(rng);
        Graph g = add_random_apexes(cograph, apex_count, 0.5, rng);
        touch(g);
        VertexSet mod;
        for (int a = 0; a < apex_count; ++a) mod.push_back(g.num_vertices() - apex_count + a);

        auto dp = solve_cograph_modulator(g, mod);
        auto oracle = oracle_max_2club(g);
        EXPECT(dp.size == oracle.size,
               "instance " << i << ": dp " << dp.size << " vs oracle " << oracle.size);
        EXPECT(verify_s_club(g, 2, dp.best), "dp witness invalid on instance " << i);
    }
    return fail.failed ? fail.message.str() : "";
}

// criterion 5: co-cluster decision for every ell
std::string run_cocluster() {
    Failure fail;
    for (int i = 0; i < 100; ++i) {
        std::mt19937 rng(50000 + i);
        std::uniform_int_distribution<int> cliques(1, 4), size(1, 3), apexes(0, 3);
        std::vector<int> sizes;
        for (int c = cliques(rng); c > 0; --c) sizes.push_back(size(rng));
        Graph core = complement(cluster_graph(sizes));
        int apex_count = apexes(rng);
        Graph g = add_random_apexes(core, apex_count, 0.4, rng);
        touch(g);
        VertexSet mod;
        for (int a = 0; a < apex_count; ++a) mod.push_back(g.num_vertices() - apex_count + a);

        auto oracle = oracle_max_2club(g);
        for (int ell = 1; ell <= g.num_vertices(); ++ell) {
            auto decision = solve_cocluster_modulator(g, mod, ell);
            EXPECT(decision.yes == (oracle.size >= ell),
                   "instance " << i << " ell " << ell << ": decision " << decision.yes
                               << " vs oracle size " << oracle.size);
            if (decision.yes) {
                EXPECT(static_cast<int>(decision.witness.size()) >= ell,
                       "instance " << i << ": witness smaller than ell");
                EXPECT(verify_s_club(g, 2, decision.witness),
                       "instance " << i << ": witness invalid");
            }
        }
    }
    return fail.failed ? fail.message.str() : "";
}

// criterion 6: h-index XP on the h <= 2 part of the criterion-1 corpus
std::string run_hindex_xp() {
    Failure fail;
    int solved = 0;
    for (std::size_t i = 0; i < criterion1_corpus().size(); ++i) {
        const auto& entry = criterion1_corpus()[i];
        if (degree_stats(entry.graph).h_index > 2) continue;
        ++solved;
        auto xp = solve_hindex_xp(entry.graph);
        EXPECT(xp.size == entry.oracle_size, "corpus graph " << i << ": xp " << xp.size
                                                             << " vs oracle " << entry.oracle_size);
        EXPECT(verify_s_club(entry.graph, 2, xp.best), "xp witness invalid on corpus graph " << i);
    }
    EXPECT(solved > 0, "corpus contained no graphs of h-index <= 2");
    if (!fail.failed) {
        std::ostringstream note;
        note << "";
        (void)solved;
    }
    return fail.failed ? fail.message.str() : "";
}

// criterion 7: structural assertions of every generator
std::string run_reduction_structure() {
    Failure fail;

    // clique cover three
    for (const Graph& src : {complete_graph(3), path_graph(3), cycle_graph(4)}) {
        for (int k = 2; k <= 2; ++k) {
            auto inst = gen_clique_cover3(src, k);
            touch(inst.graph);
            const long long n = src.num_vertices(), m = src.num_edges();
            EXPECT(inst.graph.num_vertices() == 2 * n * n * n * n * n + 2 * n + 2 * m + n * n * n * n,
                   "clique_cover3 vertex count off");
            EXPECT(diameter_at_most(inst.graph, 3), "clique_cover3 diameter > 3");
            VertexSet v1, v2, ve;
            for (int v = 0; v < inst.graph.num_vertices(); ++v) {
                const std::string& label = inst.labels[v];
                if (label.rfind("v1(", 0) == 0 || label == "Big1")
                    v1.push_back(v);
                else if (label.rfind("v2(", 0) == 0 || label == "Big2")
                    v2.push_back(v);
                else
                    ve.push_back(v);
            }
            auto is_clique = [&](const VertexSet& vs) {
                for (std::size_t a = 0; a < vs.size(); ++a)
                    for (std::size_t b = a + 1; b < vs.size(); ++b)
                        if (!inst.graph.adjacent(vs[a], vs[b])) return false;
                return true;
            };
            EXPECT(is_clique(v1) && is_clique(v2) && is_clique(ve),
                   "clique_cover3 cover {V1, V2, VE} is not three cliques");
            EXPECT(v1.size() + v2.size() + ve.size() ==
                       static_cast<std::size_t>(inst.graph.num_vertices()),
                   "clique_cover3 cover misses vertices");
        }
    }

    // domination two
    for (const Graph& src : {complete_graph(3), cycle_graph(5), complete_graph(4)}) {
        auto inst = gen_domination2(src, 2);
        touch(inst.graph);
        EXPECT(diameter_at_most(inst.graph, 3) && !diameter_at_most(inst.graph, 2),
               "domination2 diameter != 3");
        auto dom = small_dominating_set(inst.graph, 2);
        EXPECT(dom.has_value() && dom->size() == 2, "domination2 needs a size-2 dominating set");
    }

    // distance one to bipartite
    {
        Max2SatFormula f;
        f.num_vars = 2;
        f.clauses = {{1, 2}, {-1, 2}, {1, -2}};
        f.k = 2;
        auto inst = gen_bipartite_plus_one(f);
        touch(inst.graph);
        const int vstar = inst.graph.num_vertices() - 1;
        EXPECT(inst.labels[vstar] == "v*", "bipartite v* must be the last vertex");
        VertexSet rest;
        for (int v = 0; v < vstar; ++v) rest.push_back(v);
        auto sub = induce(inst.graph, rest);
        std::vector<int> side(sub.graph.num_vertices(), -1);
        bool bipartite = true;
        for (int v = 0; v < sub.graph.num_vertices() && bipartite; ++v) {
            if (side[v] >= 0) continue;
            side[v] = 0;
            std::vector<int> queue{v};
            for (std::size_t head = 0; head < queue.size() && bipartite; ++head)
                for (int w : sub.graph.neighbors(queue[head])) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[queue[head]];
                        queue.push_back(w);
                    } else if (side[w] == side[queue[head]]) {
                        bipartite = false;
                    }
                }
        }
        EXPECT(bipartite, "bipartite_plus_one minus v* must be bipartite");
    }

    // multicolored clique, both variants; Eq. (1) exactly
    {
        Graph k3 = complete_graph(3);
        ColoredGraph cg{k3, {1, 2, 2}};
        for (auto variant : {MccVariant::hindex, MccVariant::degeneracy}) {
            auto inst = gen_mcc(cg, 2, variant, {});
            touch(inst.graph);
            const long long n = 3, m = 3;
            long long vc = variant == MccVariant::hindex ? 2 : 4;
            EXPECT(inst.graph.num_vertices() == n * (3 * n + 3) + 4 * n * n * n + 7 + m + vc,
                   "mcc vertex count differs from the closed form");
            EXPECT(diameter_at_most(inst.graph, 3), "mcc diameter > 3");
            if (variant == MccVariant::hindex) {
                EXPECT(degree_stats(inst.graph).h_index <= 2 + 7, "mcc h-index above k+7");
            } else {
                auto degen = degeneracy(inst.graph);
                EXPECT(degen.value <= 5, "mcc degeneracy above five");
                // re-run the elimination order as an independent witness
                std::vector<char> removed(inst.graph.num_vertices(), 0);
                int worst = 0;
                for (int v : degen.elimination_order) {
                    int deg = 0;
                    for (int w : inst.graph.neighbors(v))
                        if (!removed[w]) ++deg;
                    worst = std::max(worst, deg);
                    removed[v] = 1;
                }
                EXPECT(worst <= 5, "mcc elimination order exceeds degree five");
            }
        }
    }

    // average degree padding
    {
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
        Graph g(6, edges);
        auto inst = pad_average_degree(g, 6, {5, 2});
        touch(inst.graph);
        EXPECT(2.0 * inst.graph.num_edges() / inst.graph.num_vertices() <= 2.5 + 1e-12,
               "padded average degree above alpha");
    }

    return fail.failed ? fail.message.str() : "";
}

// criterion 8: reduction equivalences at tiny scale
std::string run_reduction_equivalence() {
    Failure fail;

    // domination2: all graphs with up to 6 vertices and no isolated vertex
    for (int n = 2; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << bits); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++idx)
                    if ((mask >> idx) & 1) edges.emplace_back(i, j);
            Graph g(n, edges);
            bool isolated = false;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 0) isolated = true;
            if (isolated) continue;

            // brute-force clique number
            int omega = 0;
            for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << n); ++sub) {
                int size = std::popcount(sub);
                if (size <= omega) continue;
                bool clique = true;
                for (int i = 0; i < n && clique; ++i)
                    if ((sub >> i) & 1)
                        for (int j = i + 1; j < n && clique; ++j)
                            if (((sub >> j) & 1) && !g.adjacent(i, j)) clique = false;
                if (clique) omega = size;
            }

            auto inst = gen_domination2(g, 1);
            auto solved = dual_branching(inst.graph, 2, heuristic_ball(inst.graph, 2).size);
            for (int k = 1; k <= n; ++k) {
                long long ell = (n + 2) + g.num_edges() + k;
                EXPECT((solved.size >= ell) == (omega >= k),
                       "domination2 equivalence fails: n=" << n << " mask=" << mask << " k=" << k);
                if (fail.failed) return fail.message.str();
            }
        }
    }

    // bipartite+1: every formula over two variables with distinct-variable
    // clauses, every k
    {
        const std::vector<std::pair<int, int>> universe = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
        for (std::uint32_t mask = 1; mask < 16; ++mask) {
            Max2SatFormula f;
            f.num_vars = 2;
            for (int c = 0; c < 4; ++c)
                if ((mask >> c) & 1) f.clauses.push_back(universe[c]);

            int opt = 0;
            for (std::uint32_t assign = 0; assign < 4; ++assign) {
                std::vector<bool> a = {(assign & 1) != 0, (assign & 2) != 0};
                opt = std::max(opt, count_satisfied(f, a));
            }

            for (int k = 1; k <= static_cast<int>(f.clauses.size()); ++k) {
                f.k = k;
                auto inst = gen_bipartite_plus_one(f);
                auto solved =
                    dual_branching(inst.graph, 2, static_cast<int>(inst.ell) - 1);
                bool yes = solved.size >= inst.ell;
                EXPECT(yes == (opt >= k), "bipartite equivalence fails: mask=" << mask
                                                                               << " k=" << k);
                if (yes) {
                    // cross-check with the named forward witness
                    for (std::uint32_t assign = 0; assign < 4; ++assign) {
                        std::vector<bool> a = {(assign & 1) != 0, (assign & 2) != 0};
                        if (count_satisfied(f, a) >= k) {
                            auto witness = forward_witness(inst, {{}, a});
                            EXPECT(verify_s_club(inst.graph, 2, witness),
                                   "bipartite forward witness invalid");
                            break;
                        }
                    }
                }
                if (fail.failed) return fail.message.str();
            }
        }
    }

    // mcc: witnesses for n <= 4, full equivalence at n = 3 / k = 2
    {
        // forward witnesses on complete colored graphs up to n = 4
        for (int n = 2; n <= 4; ++n) {
            Graph g = complete_graph(n);
            std::vector<int> colors(n);
            for (int v = 0; v < n; ++v) colors[v] = 1 + v % 2;
            ColoredGraph cg{g, colors};
            for (auto variant : {MccVariant::hindex, MccVariant::degeneracy}) {
                auto inst = gen_mcc(cg, 2, variant, {});
                VertexSet planted = {0, 1};  // colors 1 and 2, adjacent
                auto witness = forward_witness(inst, {planted, {}});
                EXPECT(static_cast<long long>(witness.size()) == inst.ell,
                       "mcc witness size != ell");
                EXPECT(verify_s_club(inst.graph, 2, witness), "mcc witness invalid");
            }
        }

        // full equivalence over all edge subsets of K3 and two colorings
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
            std::vector<std::pair<int, int>> all = {{0, 1}, {0, 2}, {1, 2}};
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < 3; ++e)
                if ((mask >> e) & 1) edges.push_back(all[e]);
            Graph g(3, edges);
            for (const auto& colors : {std::vector<int>{1, 2, 2}, std::vector<int>{1, 2, 1}}) {
                ColoredGraph cg{g, colors};
                bool has_mcc = false;
                for (int u = 0; u < 3 && !has_mcc; ++u)
                    for (int v = u + 1; v < 3 && !has_mcc; ++v)
                        if (g.adjacent(u, v) && colors[u] != colors[v]) has_mcc = true;

                for (auto variant : {MccVariant::hindex, MccVariant::degeneracy}) {
                    auto inst = gen_mcc(cg, 2, variant, {});
                    auto solved =
                        dual_branching(inst.graph, 2, static_cast<int>(inst.ell) - 1);
                    EXPECT((solved.size >= inst.ell) == has_mcc,
                           "mcc equivalence fails: mask=" << mask << " variant "
                                                          << (variant == MccVariant::hindex ? "i"
                                                                                            : "ii"));
                    if (fail.failed) return fail.message.str();
                }
            }
        }
    }

    return fail.failed ? fail.message.str() : "";
}

// criterion 9: branch-node bound over the criterion-1 corpus
std::string run_branch_bound() {
    Failure fail;
    EXPECT(!criterion1_corpus().empty(), "criterion 1 must run first");
    for (std::size_t i = 0; i < criterion1_corpus().size(); ++i) {
        const auto& entry = criterion1_corpus()[i];
        std::int64_t bound = std::int64_t(1) << (entry.n - entry.oracle_size + 1);
        EXPECT(entry.dual_nodes <= bound, "corpus graph " << i << ": " << entry.dual_nodes
                                                          << " branch nodes, bound " << bound);
    }
    return fail.failed ? fail.message.str() : "";
}

// criterion 10: parameter inequalities on every graph any criterion touched
std::string run_parameter_inequalities() {
    Failure fail;
    EXPECT(!g_touched.empty(), "no graphs were touched");
    for (std::size_t i = 0; i < g_touched.size(); ++i) {
        const Graph& g = g_touched[i];
        auto stats = degree_stats(g);
        int degen = degeneracy(g).value;
        EXPECT(stats.average_degree <= 2.0 * degen + 1e-9,
               "graph " << i << ": avg degree above twice the degeneracy");
        EXPECT(degen <= stats.h_index, "graph " << i << ": degeneracy above h-index");
        EXPECT(stats.h_index <= stats.max_degree, "graph " << i << ": h-index above max degree");
    }
    return fail.failed ? fail.message.str() : "";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle concordance (oracle = dual = turing, 200 graphs)", run_oracle_concordance},
        {2, "alpha <= 2 algorithm matches dual branching (100 graphs)", run_alpha2},
        {3, "cluster-modulator DP matches the oracle (100 instances)", run_cluster_dp},
        {4, "cograph DP matches the oracle; cotree round trips (100 each)", run_cograph_dp},
        {5, "co-cluster decision matches the oracle for every ell (100 instances)", run_cocluster},
        {6, "h-index XP matches the oracle on the h <= 2 corpus", run_hindex_xp},
        {7, "generated reductions pass their structural assertions", run_reduction_structure},
        {8, "reduction equivalences at tiny scale", run_reduction_equivalence},
        {9, "dual branching node count within 2^(n - opt + 1)", run_branch_bound},
        {10, "avg degree <= 2 degeneracy <= 2 h-index <= 2 max degree everywhere",
         run_parameter_inequalities},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        try {
            message = criterion.run();
        } catch (const std::exception& e) {
            message = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (message.empty()) {
            std::cout << "criterion " << criterion.id << ": PASS (" << ms << " ms) - "
                      << criterion.name << '\n';
        } else {
            ++failures;
            std::cout << "criterion " << criterion.id << ": FAIL (" << ms << " ms) - "
                      << criterion.name << ": " << message << '\n';
        }
        std::cout.flush();
    }
    if (failures == 0) {
        std::cout << "all 10 acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
