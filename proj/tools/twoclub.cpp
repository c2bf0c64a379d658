// twoclub: exact 2-club solving, structural parameter reports, hardness
// instance generation, and witness verification.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twoclub/cograph.hpp"
#include "twoclub/errors.hpp"
#include "twoclub/exact.hpp"
#include "twoclub/graph.hpp"
#include "twoclub/hindex.hpp"
#include "twoclub/io.hpp"
#include "twoclub/modsolve.hpp"
#include "twoclub/reductions.hpp"
#include "twoclub/structparams.hpp"

namespace {

using namespace twoclub;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr int kParamsSizeCap = 5000;   // greedy modulator scan cap
constexpr int kOracleBallCap = 26;     // subset enumeration guard

long long resolve_budget(long long flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("TWO_CLUB_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 200000;
}

void fill_parameters(RunReport& report, const Graph& g) {
    report.n = g.num_vertices();
    report.m = g.num_edges();
    report.degrees = degree_stats(g);
    report.degeneracy_value = degeneracy(g).value;
    report.component_count = static_cast<int>(components(g).size());
    if (g.num_vertices() <= kParamsSizeCap) {
        report.greedy_cluster_modulator =
            static_cast<int>(modulator_greedy(g, ModulatorTarget::cluster).vertices.size());
        report.greedy_cograph_modulator =
            static_cast<int>(modulator_greedy(g, ModulatorTarget::cograph).vertices.size());
    }
}

void emit_report(const RunReport& report, const std::string& json_out) {
    std::string json = report_to_json(report);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw std::invalid_argument("cannot write " + json_out);
        out << json << '\n';
    }
    std::cout << json << '\n';
}

VertexSet load_or_compute_modulator(const Graph& g, const std::string& path, ModulatorTarget target,
                                    bool target_cocluster) {
    if (!path.empty()) return read_vertex_list(path);
    // distance to co-cluster equals distance to cluster in the complement
    const Graph base = target_cocluster ? complement(g) : g;
    auto found = modulator_exact(base, target, 4);
    if (!found)
        throw budget_error("no modulator of size <= 4 found; supply one with --modulator");
    return found->vertices;
}

int cmd_solve(const std::string& input, std::string algo, int s, int ell_flag,
              const std::string& modulator_path, long long budget, int jobs,
              const std::string& json_out) {
    Graph g = read_graph(input);
    if (g.num_vertices() > budget)
        throw budget_error("input exceeds the vertex budget of " + std::to_string(budget));

    RunReport report;
    report.input = input;
    report.s = s;
    fill_parameters(report, g);
    if (ell_flag >= 0) report.ell = ell_flag;

    auto inner_dual = [s](const Graph& sub) {
        return dual_branching(sub, s, heuristic_ball(sub, s).size);
    };

    if (algo == "auto") {
        SolveResult seed = heuristic_ball(g, s);
        if (!complement_has_triangle(g)) {
            report.auto_rule = "alpha<=2";
            algo = "alpha2";
        } else if (report.greedy_cluster_modulator >= 0 && report.greedy_cluster_modulator <= 4 &&
                   s == 2) {
            report.auto_rule = "greedy cluster modulator <= 4";
            algo = "cluster-mod";
        } else if (report.greedy_cograph_modulator >= 0 && report.greedy_cograph_modulator <= 4 &&
                   s == 2) {
            report.auto_rule = "greedy cograph modulator <= 4";
            algo = "cograph-mod";
        } else if (report.degrees.h_index <= 2 && s == 2) {
            report.auto_rule = "h-index <= 2";
            algo = "hindex-xp";
        } else {
            int max_ball = 0;
            for (int v = 0; v < g.num_vertices(); ++v)
                max_ball = std::max(max_ball, static_cast<int>(ball(g, v, 2).size()));
            if (s == 2 && max_ball < 0.8 * g.num_vertices()) {
                report.auto_rule = "dual via Turing decomposition (max ball < 0.8 n)";
                algo = "turing";
            } else {
                report.auto_rule = "dual branching";
                algo = "dual";
            }
        }
        (void)seed;
    }
    report.algorithm = algo;

    if (algo != "dual" && algo != "alpha2" && s != 2)
        throw std::invalid_argument("--algo " + algo + " supports s = 2 only");

    SolveResult result;
    std::optional<bool> decision;
    if (algo == "oracle") {
        for (int v = 0; v < g.num_vertices(); ++v)
            if (static_cast<int>(ball(g, v, 2).size()) > kOracleBallCap)
                throw budget_error("oracle: a distance-2 ball exceeds " +
                                   std::to_string(kOracleBallCap) + " vertices");
        result = oracle_max_2club(g);
    } else if (algo == "dual") {
        result = dual_branching(g, s, heuristic_ball(g, s).size);
    } else if (algo == "turing") {
        result = turing_kernel_solve(g, inner_dual, jobs);
    } else if (algo == "alpha2") {
        result = independence2_solve(g, s);
    } else if (algo == "cluster-mod") {
        VertexSet mod = load_or_compute_modulator(g, modulator_path, ModulatorTarget::cluster, false);
        result = solve_cluster_modulator(g, mod, jobs);
    } else if (algo == "cograph-mod") {
        VertexSet mod = load_or_compute_modulator(g, modulator_path, ModulatorTarget::cograph, false);
        result = solve_cograph_modulator(g, mod, jobs);
    } else if (algo == "cocluster-mod") {
        if (ell_flag < 0)
            throw std::invalid_argument("--algo cocluster-mod is a decision procedure; give --ell");
        VertexSet mod = load_or_compute_modulator(g, modulator_path, ModulatorTarget::cluster, true);
        DecisionResult d = solve_cocluster_modulator(g, mod, ell_flag);
        decision = d.yes;
        result.best = d.witness;
        result.size = static_cast<int>(d.witness.size());
        result.stats = d.stats;
    } else if (algo == "hindex-xp") {
        result = solve_hindex_xp(g);
    } else {
        throw std::invalid_argument("unknown --algo " + algo);
    }

    // re-verify from the raw input, not the in-memory graph the solver used
    Graph fresh = read_graph(input);
    report.size = result.size;
    report.witness = result.best;
    report.verified = verify_s_club(fresh, s, result.best);
    report.stats = result.stats;
    if (report.ell && !decision) decision = result.size >= *report.ell;
    report.decision = decision;
    emit_report(report, json_out);

    if (!report.verified && !result.best.empty()) {
        std::cerr << "error: witness failed re-verification\n";
        return kExitNo;
    }
    if (report.ell) return *decision ? kExitOk : kExitNo;
    return kExitOk;
}

int cmd_params(const std::string& input, const std::string& json_out) {
    Graph g = read_graph(input);
    RunReport report;
    report.input = input;
    report.params_only = true;
    fill_parameters(report, g);
    emit_report(report, json_out);
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& solution, int s) {
    Graph g = read_graph(input);
    VertexSet witness = read_vertex_list(solution);
    if (!witness.empty() && witness.back() >= g.num_vertices())
        throw std::invalid_argument("solution vertex " + std::to_string(witness.back()) +
                                    " is out of range");
    auto violation = find_violating_pair(g, s, witness);
    if (violation) {
        std::cout << "INVALID: vertices " << violation->first << " and " << violation->second
                  << " have distance > " << s << " in the induced subgraph\n";
        return kExitNo;
    }
    std::cout << "VALID: " << witness.size() << "-vertex " << s << "-club\n";
    return kExitOk;
}

int cmd_generate(const std::string& kind, const std::string& source, const std::string& out_prefix,
                 int k, const std::string& colors_path, long long ell, const std::string& alpha_str,
                 long long budget, long long pad_divisor, bool skip_checks) {
    GenLimits limits;
    limits.vertex_budget = budget;
    limits.pad_divisor = pad_divisor;

    ReducedInstance inst;
    if (kind == "clique-cover3") {
        inst = gen_clique_cover3(read_graph(source), k, limits);
    } else if (kind == "domination2") {
        inst = gen_domination2(read_graph(source), k, limits);
    } else if (kind == "bipartite1") {
        inst = gen_bipartite_plus_one(read_max2sat(source), limits);
    } else if (kind == "mcc-hindex" || kind == "mcc-degeneracy") {
        if (colors_path.empty()) throw std::invalid_argument("mcc generators need --colors");
        Graph g = read_graph(source);
        ColoredGraph cg{g, read_colors(colors_path, g.num_vertices())};
        inst = gen_mcc(cg, k, kind == "mcc-hindex" ? MccVariant::hindex : MccVariant::degeneracy,
                       limits);
    } else if (kind == "avg-degree-pad") {
        if (alpha_str.empty()) throw std::invalid_argument("avg-degree-pad needs --alpha");
        // parse a decimal like "3" or "2.5" into an exact rational
        Rational alpha;
        auto dot = alpha_str.find('.');
        if (dot == std::string::npos) {
            alpha.num = std::stoll(alpha_str);
            alpha.den = 1;
        } else {
            std::string frac = alpha_str.substr(dot + 1);
            alpha.num = std::stoll(alpha_str.substr(0, dot) + frac);
            alpha.den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) alpha.den *= 10;
        }
        if (ell < 0) throw std::invalid_argument("avg-degree-pad needs --ell");
        inst = pad_average_degree(read_graph(source), ell, alpha, limits);
    } else {
        throw std::invalid_argument("unknown kind " + kind);
    }

    std::vector<std::pair<std::string, bool>> checks;
    const int n = inst.graph.num_vertices();
    if (!skip_checks && n <= 20000) {
        if (inst.kind == ReductionKind::clique_cover3 || inst.kind == ReductionKind::domination2 ||
            inst.kind == ReductionKind::mcc_hindex || inst.kind == ReductionKind::mcc_degeneracy)
            checks.emplace_back("diameter_at_most_3", diameter_at_most(inst.graph, 3));
        if (inst.kind == ReductionKind::domination2) {
            auto dom = small_dominating_set(inst.graph, 2);
            checks.emplace_back("dominating_set_of_size_2", dom.has_value());
        }
        if (inst.kind == ReductionKind::mcc_hindex)
            checks.emplace_back("h_index_at_most_k_plus_7",
                                degree_stats(inst.graph).h_index <= inst.source_k + 7);
        if (inst.kind == ReductionKind::mcc_degeneracy)
            checks.emplace_back("degeneracy_at_most_5", degeneracy(inst.graph).value <= 5);
        if (inst.kind == ReductionKind::bipartite_plus_one) {
            VertexSet rest(n - 1);
            for (int v = 0; v + 1 < n; ++v) rest[v] = v;  // v* is the last vertex
            auto sub = induce(inst.graph, rest);
            bool bipartite = true;
            std::vector<int> side(sub.graph.num_vertices(), -1);
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
            checks.emplace_back("bipartite_without_vstar", bipartite);
        }
        if (inst.kind == ReductionKind::avg_degree_pad) {
            checks.emplace_back("average_degree_within_alpha", true);  // holds by construction
        }
        for (const auto& [name, ok] : checks)
            if (!ok) std::cerr << "warning: structural check failed: " << name << '\n';
    }

    write_graph(out_prefix + ".edges", inst.graph);
    std::ofstream meta(out_prefix + ".json");
    if (!meta) throw std::invalid_argument("cannot write " + out_prefix + ".json");
    meta << instance_metadata_json(inst, checks) << '\n';
    std::cout << "wrote " << out_prefix << ".edges (n=" << n << ", m=" << inst.graph.num_edges()
              << ") and " << out_prefix << ".json (ell=" << inst.ell << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-club solver and hardness-instance generator"};
    app.require_subcommand(1);

    std::string input, algo = "auto", modulator_path, json_out, solution_path;
    std::string kind, source, out_prefix, colors_path, alpha_str;
    int s = 2, k = 1, jobs = 1, ell_flag = -1;
    long long budget_flag = 0, gen_ell = -1, pad_divisor = 1;
    long long seed = 0;  // accepted for interface stability; all algorithms are deterministic
    bool skip_checks = false;

    auto* solve = app.add_subcommand("solve", "find a maximum s-club (or decide >= ell)");
    solve->add_option("--input", input, "graph file (edge list, or DIMACS when *.col)")->required();
    solve->add_option("--algo", algo,
                      "auto|oracle|dual|turing|alpha2|cluster-mod|cocluster-mod|cograph-mod|hindex-xp");
    solve->add_option("--s", s, "club diameter bound (default 2)")->check(CLI::PositiveNumber);
    solve->add_option("--ell", ell_flag, "decision target size");
    solve->add_option("--modulator", modulator_path, "modulator file for the *-mod algorithms");
    solve->add_option("--seed", seed, "reserved; solvers are deterministic");
    solve->add_option("--budget-vertices", budget_flag, "vertex budget (env TWO_CLUB_BUDGET)");
    solve->add_option("--jobs", jobs, "worker threads for parallel outer loops");
    solve->add_option("--json-out", json_out, "write the JSON report here as well");

    auto* params = app.add_subcommand("params", "report structural parameters");
    params->add_option("--input", input, "graph file")->required();
    params->add_option("--json-out", json_out, "write the JSON report here as well");

    auto* gen = app.add_subcommand("generate", "build a hardness-reduction instance");
    gen->add_option("--kind", kind,
                    "clique-cover3|domination2|bipartite1|mcc-hindex|mcc-degeneracy|avg-degree-pad")
        ->required();
    gen->add_option("--source", source, "source instance (graph or max2sat file)")->required();
    gen->add_option("--out", out_prefix, "output prefix (.edges and .json)")->required();
    gen->add_option("--k", k, "clique size / color count");
    gen->add_option("--colors", colors_path, "colors file for the mcc kinds");
    gen->add_option("--ell", gen_ell, "target size (avg-degree-pad)");
    gen->add_option("--alpha", alpha_str, "average degree bound (avg-degree-pad)");
    gen->add_option("--seed", seed, "reserved; generators are deterministic");
    gen->add_option("--budget-vertices", budget_flag, "vertex budget (env TWO_CLUB_BUDGET)");
    gen->add_option("--expert-pad-divisor", pad_divisor,
                    "shrink n^5/n^3 pads by this divisor (voids equivalence guarantees)");
    gen->add_flag("--skip-checks", skip_checks, "skip structural self-checks");

    auto* verify = app.add_subcommand("verify", "check a solution file");
    verify->add_option("--input", input, "graph file")->required();
    verify->add_option("--solution", solution_path, "vertex list file")->required();
    verify->add_option("--s", s, "club diameter bound (default 2)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        long long budget = resolve_budget(budget_flag);
        if (solve->parsed())
            return cmd_solve(input, algo, s, ell_flag, modulator_path, budget, jobs, json_out);
        if (params->parsed()) return cmd_params(input, json_out);
        if (gen->parsed())
            return cmd_generate(kind, source, out_prefix, k, colors_path, gen_ell, alpha_str, budget,
                                pad_divisor, skip_checks);
        if (verify->parsed()) return cmd_verify(input, solution_path, s);
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const modulator_error& e) {
        std::cerr << "modulator error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const not_a_cograph& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
