#include "twoclub/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twoclub/errors.hpp"

namespace twoclub {

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// pad block size: n^exp, optionally shrunk by the expert divisor (never below 1)
long long pad_block(long long n, int exp, const GenLimits& limits) {
    long long literal = ipow(n, exp);
    if (limits.pad_divisor <= 1) return literal;
    return std::max<long long>(1, literal / limits.pad_divisor);
}

void check_budget(long long vertices, const GenLimits& limits, const char* what) {
    if (vertices > limits.vertex_budget)
        throw budget_error(std::string(what) + ": construction needs " + std::to_string(vertices) +
                           " vertices, budget is " + std::to_string(limits.vertex_budget));
}

void add_clique(std::vector<std::pair<int, int>>& edges, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
}

std::string num(long long v) { return std::to_string(v); }

}  // namespace

std::string to_string(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::clique_cover3: return "clique-cover3";
        case ReductionKind::domination2: return "domination2";
        case ReductionKind::bipartite_plus_one: return "bipartite-plus-one";
        case ReductionKind::mcc_hindex: return "mcc-hindex";
        case ReductionKind::mcc_degeneracy: return "mcc-degeneracy";
        case ReductionKind::avg_degree_pad: return "avg-degree-pad";
    }
    return "unknown";
}

void validate_formula(const Max2SatFormula& f) {
    if (f.num_vars < 1) throw std::invalid_argument("formula: needs at least one variable");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : f.clauses) {
        if (a == 0 || b == 0) throw std::invalid_argument("formula: literal 0 is invalid");
        if (std::abs(a) > f.num_vars || std::abs(b) > f.num_vars)
            throw std::invalid_argument("formula: literal out of range");
        if (a == b) throw std::invalid_argument("formula: clause repeats a literal");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second)
            throw std::invalid_argument("formula: duplicate clause");
    }
    if (f.k < 0 || f.k > static_cast<int>(f.clauses.size()))
        throw std::invalid_argument("formula: target k out of range");
}

int count_satisfied(const Max2SatFormula& f, const std::vector<bool>& assignment) {
    int count = 0;
    for (auto [a, b] : f.clauses) {
        bool sa = a > 0 ? assignment[a - 1] : !assignment[-a - 1];
        bool sb = b > 0 ? assignment[b - 1] : !assignment[-b - 1];
        if (sa || sb) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Clique cover number three (Thm on clique cover)

namespace cc3 {

struct Layout {
    long long n, m, big, fan;
    int v1(int v) const { return v; }
    int v2(int v) const { return static_cast<int>(n) + v; }
    int big1(long long j) const { return static_cast<int>(2 * n + j); }
    int big2(long long j) const { return static_cast<int>(2 * n + big + j); }
    // edge index e in 0..m-1; dir 0 = e_{uv}, dir 1 = e_{vu} for u < v
    int edge_vertex(long long e, int dir) const { return static_cast<int>(2 * n + 2 * big + 2 * e + dir); }
    int fan_vertex(int v, long long j) const {
        return static_cast<int>(2 * n + 2 * big + 2 * m + v * fan + j);
    }
    long long total() const { return 2 * n + 2 * big + 2 * m + n * fan; }
};

}  // namespace cc3

ReducedInstance gen_clique_cover3(const Graph& g, int k, const GenLimits& limits) {
    const long long n = g.num_vertices(), m = g.num_edges();
    if (n < 2) throw std::invalid_argument("gen_clique_cover3: source graph needs >= 2 vertices");
    if (k < 1 || k > n) throw std::invalid_argument("gen_clique_cover3: k out of range");

    cc3::Layout ly{n, m, pad_block(n, 5, limits), pad_block(n, 3, limits)};
    check_budget(ly.total(), limits, "gen_clique_cover3");

    auto source_edges = g.edge_list();
    std::vector<std::pair<int, int>> edges;
    std::vector<int> clique_v1, clique_v2, clique_ve;
    for (int v = 0; v < n; ++v) {
        clique_v1.push_back(ly.v1(v));
        clique_v2.push_back(ly.v2(v));
    }
    for (long long j = 0; j < ly.big; ++j) {
        clique_v1.push_back(ly.big1(j));
        clique_v2.push_back(ly.big2(j));
    }
    for (long long e = 0; e < m; ++e) {
        clique_ve.push_back(ly.edge_vertex(e, 0));
        clique_ve.push_back(ly.edge_vertex(e, 1));
    }
    for (int v = 0; v < n; ++v)
        for (long long j = 0; j < ly.fan; ++j) clique_ve.push_back(ly.fan_vertex(v, j));

    add_clique(edges, clique_v1);
    add_clique(edges, clique_v2);
    add_clique(edges, clique_ve);
    for (long long i = 0; i < ly.big; ++i)
        for (long long j = 0; j < ly.big; ++j) edges.emplace_back(ly.big1(i), ly.big2(j));

    // connectors: e_{uv} joins u's copy in V1 with v's copy in V2, e_{vu} the reverse
    for (long long e = 0; e < m; ++e) {
        auto [u, v] = source_edges[e];
        edges.emplace_back(ly.v1(u), ly.edge_vertex(e, 0));
        edges.emplace_back(ly.edge_vertex(e, 0), ly.v2(v));
        edges.emplace_back(ly.v1(v), ly.edge_vertex(e, 1));
        edges.emplace_back(ly.edge_vertex(e, 1), ly.v2(u));
    }
    for (int v = 0; v < n; ++v)
        for (long long j = 0; j < ly.fan; ++j) {
            edges.emplace_back(ly.v1(v), ly.fan_vertex(v, j));
            edges.emplace_back(ly.v2(v), ly.fan_vertex(v, j));
        }

    ReducedInstance inst;
    inst.kind = ReductionKind::clique_cover3;
    inst.graph = Graph(static_cast<int>(ly.total()), edges);
    inst.ell = 2 * ly.big + k * ly.fan + 2 * k + static_cast<long long>(k) * (k - 1);
    inst.pads_shrunk = limits.pad_divisor > 1;
    inst.source_graph = g;
    inst.source_k = k;
    inst.source_summary = "clique instance n=" + num(n) + " m=" + num(m) + " k=" + num(k);

    inst.labels.assign(ly.total(), "");
    for (int v = 0; v < n; ++v) {
        inst.labels[ly.v1(v)] = "v1(" + num(v) + ")";
        inst.labels[ly.v2(v)] = "v2(" + num(v) + ")";
    }
    for (long long j = 0; j < ly.big; ++j) {
        inst.labels[ly.big1(j)] = "Big1";
        inst.labels[ly.big2(j)] = "Big2";
    }
    for (long long e = 0; e < m; ++e) {
        auto [u, v] = source_edges[e];
        inst.labels[ly.edge_vertex(e, 0)] = "e(" + num(u) + "," + num(v) + ")";
        inst.labels[ly.edge_vertex(e, 1)] = "e(" + num(v) + "," + num(u) + ")";
    }
    for (int v = 0; v < n; ++v)
        for (long long j = 0; j < ly.fan; ++j)
            inst.labels[ly.fan_vertex(v, j)] = "fan(" + num(v) + ")";
    return inst;
}

// ---------------------------------------------------------------------------
// Domination number two (Thm on domination)

ReducedInstance gen_domination2(const Graph& g, int k, const GenLimits& limits) {
    const long long n = g.num_vertices(), m = g.num_edges();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("gen_domination2: source graph has an isolated vertex");
    if (k < 1 || k > n) throw std::invalid_argument("gen_domination2: k out of range");

    const long long total = n + m + (n + 2) + 1;
    check_budget(total, limits, "gen_domination2");

    auto source_edges = g.edge_list();
    auto copy_of = [&](int v) { return v; };
    auto edge_vertex = [&](long long e) { return static_cast<int>(n + e); };
    auto c_vertex = [&](long long j) { return static_cast<int>(n + m + j); };
    const int vstar = static_cast<int>(total - 1);

    std::vector<std::pair<int, int>> edges;
    std::vector<int> big_clique;
    for (long long e = 0; e < m; ++e) {
        auto [u, v] = source_edges[e];
        edges.emplace_back(edge_vertex(e), copy_of(u));
        edges.emplace_back(edge_vertex(e), copy_of(v));
        big_clique.push_back(edge_vertex(e));
    }
    for (long long j = 0; j < n + 2; ++j) big_clique.push_back(c_vertex(j));
    add_clique(edges, big_clique);
    for (int v = 0; v < n; ++v) edges.emplace_back(vstar, copy_of(v));

    ReducedInstance inst;
    inst.kind = ReductionKind::domination2;
    inst.graph = Graph(static_cast<int>(total), edges);
    inst.ell = (n + 2) + m + k;
    inst.source_graph = g;
    inst.source_k = k;
    inst.source_summary = "clique instance n=" + num(n) + " m=" + num(m) + " k=" + num(k);

    inst.labels.assign(total, "");
    for (int v = 0; v < n; ++v) inst.labels[copy_of(v)] = "v(" + num(v) + ")";
    for (long long e = 0; e < m; ++e) {
        auto [u, v] = source_edges[e];
        inst.labels[edge_vertex(e)] = "e(" + num(u) + "," + num(v) + ")";
    }
    for (long long j = 0; j < n + 2; ++j) inst.labels[c_vertex(j)] = "C";
    inst.labels[vstar] = "v*";
    return inst;
}

// ---------------------------------------------------------------------------
// Distance one to bipartite (Thm on Max 2-SAT)

namespace bip {

struct Layout {
    long long n, m, block_f, block_x2;
    int clause(long long i) const { return static_cast<int>(i); }
    int f_vertex(int var, long long j) const {  // var is 0-based
        return static_cast<int>(m + var * block_f + j);
    }
    int x_true(int var) const { return static_cast<int>(m + n * block_f + 2 * var); }
    int x_false(int var) const { return static_cast<int>(m + n * block_f + 2 * var + 1); }
    int x2_vertex(int var, bool positive, long long j) const {
        return static_cast<int>(m + n * block_f + 2 * n + var * 2 * block_x2 +
                                (positive ? 0 : block_x2) + j);
    }
    long long total() const { return m + n * block_f + 2 * n + 2 * n * block_x2 + 1; }
    int vstar() const { return static_cast<int>(total() - 1); }
};

}  // namespace bip

ReducedInstance gen_bipartite_plus_one(const Max2SatFormula& f, const GenLimits& limits) {
    validate_formula(f);
    if (f.num_vars < 2) throw std::invalid_argument("gen_bipartite_plus_one: needs >= 2 variables");

    bip::Layout ly{f.num_vars, static_cast<long long>(f.clauses.size()), pad_block(f.num_vars, 5, limits),
                   pad_block(f.num_vars, 3, limits)};
    check_budget(ly.total(), limits, "gen_bipartite_plus_one");

    auto literal_vertex = [&](int lit) {
        return lit > 0 ? ly.x_true(lit - 1) : ly.x_false(-lit - 1);
    };

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < ly.m; ++i) {
        edges.emplace_back(ly.vstar(), ly.clause(i));
        edges.emplace_back(ly.clause(i), literal_vertex(f.clauses[i].first));
        edges.emplace_back(ly.clause(i), literal_vertex(f.clauses[i].second));
    }
    for (int var = 0; var < ly.n; ++var) {
        edges.emplace_back(ly.vstar(), ly.x_true(var));
        edges.emplace_back(ly.vstar(), ly.x_false(var));
        for (long long j = 0; j < ly.block_f; ++j) {
            edges.emplace_back(ly.vstar(), ly.f_vertex(var, j));
            edges.emplace_back(ly.f_vertex(var, j), ly.x_true(var));
            edges.emplace_back(ly.f_vertex(var, j), ly.x_false(var));
        }
        for (long long j = 0; j < ly.block_x2; ++j) {
            // true copies see all of V_X^1 except their own x_f, false copies
            // all except their own x_t
            for (int other = 0; other < ly.n; ++other) {
                edges.emplace_back(ly.x2_vertex(var, true, j), ly.x_true(other));
                if (other != var) edges.emplace_back(ly.x2_vertex(var, true, j), ly.x_false(other));
                edges.emplace_back(ly.x2_vertex(var, false, j), ly.x_false(other));
                if (other != var) edges.emplace_back(ly.x2_vertex(var, false, j), ly.x_true(other));
            }
        }
    }

    ReducedInstance inst;
    inst.kind = ReductionKind::bipartite_plus_one;
    inst.graph = Graph(static_cast<int>(ly.total()), edges);
    inst.ell = ly.n * ly.block_f + ly.n * ly.block_x2 + ly.n + f.k + 1;
    inst.pads_shrunk = limits.pad_divisor > 1;
    inst.source_formula = f;
    inst.source_k = f.k;
    inst.source_summary =
        "max2sat instance vars=" + num(ly.n) + " clauses=" + num(ly.m) + " k=" + num(f.k);

    inst.labels.assign(ly.total(), "");
    for (long long i = 0; i < ly.m; ++i) inst.labels[ly.clause(i)] = "clause(" + num(i) + ")";
    for (int var = 0; var < ly.n; ++var) {
        inst.labels[ly.x_true(var)] = "x" + num(var + 1) + "_t";
        inst.labels[ly.x_false(var)] = "x" + num(var + 1) + "_f";
        for (long long j = 0; j < ly.block_f; ++j) inst.labels[ly.f_vertex(var, j)] = "F(x" + num(var + 1) + ")";
        for (long long j = 0; j < ly.block_x2; ++j) {
            inst.labels[ly.x2_vertex(var, true, j)] = "X2(x" + num(var + 1) + "_t)";
            inst.labels[ly.x2_vertex(var, false, j)] = "X2(x" + num(var + 1) + "_f)";
        }
    }
    inst.labels[ly.vstar()] = "v*";
    return inst;
}

// ---------------------------------------------------------------------------
// Multicolored Clique (Lemma on h-index / degeneracy)

namespace mcc {

struct Layout {
    long long n, m, pad;
    long long gadget = 0;  // 3n+3
    // cycle position within a gadget: alpha_i at 3(i-1), beta_i at 3(i-1)+1,
    // gamma_i at 3(i-1)+2 (1-based i), then omega_alpha, beta_{n+1}, omega_gamma
    int gadget_vertex(int v, long long pos) const { return static_cast<int>(v * gadget + pos); }
    int alpha(int v, int i) const { return gadget_vertex(v, 3 * (i - 1)); }
    int beta(int v, int i) const { return gadget_vertex(v, 3 * (i - 1) + 1); }
    int gamma(int v, int i) const { return gadget_vertex(v, 3 * (i - 1) + 2); }
    int omega_alpha(int v) const { return gadget_vertex(v, 3 * n); }
    int beta_last(int v) const { return gadget_vertex(v, 3 * n + 1); }
    int omega_gamma(int v) const { return gadget_vertex(v, 3 * n + 2); }

    long long anchor_base = 0;  // n * gadget
    int u_alpha() const { return static_cast<int>(anchor_base); }
    int u_beta() const { return static_cast<int>(anchor_base + 1); }
    int u_gamma() const { return static_cast<int>(anchor_base + 2); }
    int l_u() const { return static_cast<int>(anchor_base + 3); }
    int l() const { return static_cast<int>(anchor_base + 4); }
    int r1() const { return static_cast<int>(anchor_base + 5); }
    int r2() const { return static_cast<int>(anchor_base + 6); }
    int v_alpha(long long j) const { return static_cast<int>(anchor_base + 7 + j); }
    int v_beta(long long j) const { return static_cast<int>(anchor_base + 7 + pad + j); }
    int v_gamma(long long j) const { return static_cast<int>(anchor_base + 7 + 2 * pad + j); }
    int v_abc(long long j) const { return static_cast<int>(anchor_base + 7 + 3 * pad + j); }

    long long edge_base = 0;  // anchor_base + 4*pad + 7
    int edge_vertex(long long e) const { return static_cast<int>(edge_base + e); }
    long long color_base = 0;  // edge_base + m
};

}  // namespace mcc

ReducedInstance gen_mcc(const ColoredGraph& cg, int k, MccVariant variant, const GenLimits& limits) {
    const Graph& g = cg.graph;
    const long long n = g.num_vertices(), m = g.num_edges();
    if (n < 1) throw std::invalid_argument("gen_mcc: empty source graph");
    if (k < 1) throw std::invalid_argument("gen_mcc: k must be positive");
    if (static_cast<long long>(cg.colors.size()) != n)
        throw std::invalid_argument("gen_mcc: one color per vertex required");
    std::vector<char> color_used(k + 1, 0);
    for (int c : cg.colors) {
        if (c < 1 || c > k) throw std::invalid_argument("gen_mcc: color out of range 1..k");
        color_used[c] = 1;
    }
    for (int c = 1; c <= k; ++c)
        if (!color_used[c]) throw std::invalid_argument("gen_mcc: color class " + num(c) + " is empty");

    mcc::Layout ly;
    ly.n = n;
    ly.m = m;
    ly.pad = pad_block(n, 3, limits);
    ly.gadget = 3 * n + 3;
    ly.anchor_base = n * ly.gadget;
    ly.edge_base = ly.anchor_base + 4 * ly.pad + 7;
    ly.color_base = ly.edge_base + m;

    // coloring gadget: one vertex per color (variant i) or one per ordered
    // bichromatic pair (omega_alpha(v), omega_gamma(v')) (variant ii)
    std::vector<std::pair<int, int>> color_pairs;
    long long num_color = 0;
    if (variant == MccVariant::hindex) {
        num_color = k;
    } else {
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (v != w && cg.colors[v] != cg.colors[w]) color_pairs.emplace_back(v, w);
        num_color = static_cast<long long>(color_pairs.size());
    }
    const long long total = ly.color_base + num_color;
    check_budget(total, limits, "gen_mcc");

    std::vector<std::pair<int, int>> edges;
    auto source_edges = g.edge_list();

    for (int v = 0; v < n; ++v) {
        for (long long pos = 0; pos < ly.gadget; ++pos)
            edges.emplace_back(ly.gadget_vertex(v, pos),
                               ly.gadget_vertex(v, (pos + 1) % ly.gadget));  // the gadget cycle
        for (int i = 1; i <= n; ++i) {
            edges.emplace_back(ly.alpha(v, i), ly.u_alpha());
            edges.emplace_back(ly.beta(v, i), ly.u_beta());
            edges.emplace_back(ly.gamma(v, i), ly.u_gamma());
            // all cycle alphas/betas/gammas reach both r1 and r2
            edges.emplace_back(ly.alpha(v, i), ly.r1());
            edges.emplace_back(ly.alpha(v, i), ly.r2());
            edges.emplace_back(ly.beta(v, i), ly.r1());
            edges.emplace_back(ly.beta(v, i), ly.r2());
            edges.emplace_back(ly.gamma(v, i), ly.r1());
            edges.emplace_back(ly.gamma(v, i), ly.r2());
        }
        edges.emplace_back(ly.beta_last(v), ly.u_beta());
        edges.emplace_back(ly.beta_last(v), ly.r1());
        edges.emplace_back(ly.beta_last(v), ly.r2());
        // the omegas attach to one u and one r each
        edges.emplace_back(ly.omega_alpha(v), ly.u_alpha());
        edges.emplace_back(ly.omega_alpha(v), ly.r1());
        edges.emplace_back(ly.omega_gamma(v), ly.u_gamma());
        edges.emplace_back(ly.omega_gamma(v), ly.r2());
    }

    // edge vertices: alpha/beta in the lower endpoint's gadget, gamma in the
    // higher one's, indices crossed
    for (long long e = 0; e < m; ++e) {
        auto [u, w] = source_edges[e];  // u < w
        edges.emplace_back(ly.edge_vertex(e), ly.alpha(u, w + 1));
        edges.emplace_back(ly.edge_vertex(e), ly.beta(u, w + 1));
        edges.emplace_back(ly.edge_vertex(e), ly.gamma(w, u + 1));
        edges.emplace_back(ly.edge_vertex(e), ly.r1());
        edges.emplace_back(ly.edge_vertex(e), ly.r2());
        edges.emplace_back(ly.edge_vertex(e), ly.l());
    }

    // anchor gadget
    add_clique(edges, {ly.l_u(), ly.l(), ly.r1(), ly.r2()});
    edges.emplace_back(ly.l_u(), ly.u_alpha());
    edges.emplace_back(ly.l_u(), ly.u_beta());
    edges.emplace_back(ly.l_u(), ly.u_gamma());
    for (long long j = 0; j < ly.pad; ++j) {
        edges.emplace_back(ly.v_abc(j), ly.u_alpha());
        edges.emplace_back(ly.v_abc(j), ly.u_beta());
        edges.emplace_back(ly.v_abc(j), ly.u_gamma());
        edges.emplace_back(ly.v_abc(j), ly.l());
        edges.emplace_back(ly.v_abc(j), ly.l_u());
        edges.emplace_back(ly.v_alpha(j), ly.u_alpha());
        edges.emplace_back(ly.v_alpha(j), ly.r1());
        edges.emplace_back(ly.v_alpha(j), ly.r2());
        edges.emplace_back(ly.v_beta(j), ly.u_beta());
        edges.emplace_back(ly.v_beta(j), ly.r1());
        edges.emplace_back(ly.v_beta(j), ly.r2());
        edges.emplace_back(ly.v_gamma(j), ly.u_gamma());
        edges.emplace_back(ly.v_gamma(j), ly.r1());
        edges.emplace_back(ly.v_gamma(j), ly.r2());
        // index matchings between the three degree-five sets; these give each
        // u_x a distance-two route to the other two sets
        edges.emplace_back(ly.v_alpha(j), ly.v_beta(j));
        edges.emplace_back(ly.v_beta(j), ly.v_gamma(j));
        edges.emplace_back(ly.v_gamma(j), ly.v_alpha(j));
    }

    // coloring gadget
    if (variant == MccVariant::hindex) {
        for (int c = 0; c < k; ++c) {
            int cv = static_cast<int>(ly.color_base + c);
            edges.emplace_back(cv, ly.l_u());
            edges.emplace_back(cv, ly.r1());
            edges.emplace_back(cv, ly.r2());
            for (int v = 0; v < n; ++v) {
                if (cg.colors[v] == c + 1)
                    edges.emplace_back(cv, ly.omega_alpha(v));
                else
                    edges.emplace_back(cv, ly.omega_gamma(v));
            }
        }
    } else {
        for (long long i = 0; i < num_color; ++i) {
            int cv = static_cast<int>(ly.color_base + i);
            edges.emplace_back(cv, ly.omega_alpha(color_pairs[i].first));
            edges.emplace_back(cv, ly.omega_gamma(color_pairs[i].second));
            edges.emplace_back(cv, ly.l_u());
            edges.emplace_back(cv, ly.r1());
            edges.emplace_back(cv, ly.r2());
        }
    }

    ReducedInstance inst;
    inst.kind = variant == MccVariant::hindex ? ReductionKind::mcc_hindex : ReductionKind::mcc_degeneracy;
    inst.graph = Graph(static_cast<int>(total), edges);
    inst.ell = static_cast<long long>(k) * ly.gadget + (4 * ly.pad + 7) +
               static_cast<long long>(k) * (k - 1) / 2 + num_color;
    inst.pads_shrunk = limits.pad_divisor > 1;
    inst.source_colored = cg;
    inst.source_k = k;
    inst.source_summary =
        "multicolored clique instance n=" + num(n) + " m=" + num(m) + " k=" + num(k);

    inst.labels.assign(total, "");
    for (int v = 0; v < n; ++v) {
        for (int i = 1; i <= n; ++i) {
            inst.labels[ly.alpha(v, i)] = "alpha(" + num(v) + "," + num(i) + ")";
            inst.labels[ly.beta(v, i)] = "beta(" + num(v) + "," + num(i) + ")";
            inst.labels[ly.gamma(v, i)] = "gamma(" + num(v) + "," + num(i) + ")";
        }
        inst.labels[ly.omega_alpha(v)] = "omega_alpha(" + num(v) + ")";
        inst.labels[ly.beta_last(v)] = "beta(" + num(v) + "," + num(n + 1) + ")";
        inst.labels[ly.omega_gamma(v)] = "omega_gamma(" + num(v) + ")";
    }
    inst.labels[ly.u_alpha()] = "u_alpha";
    inst.labels[ly.u_beta()] = "u_beta";
    inst.labels[ly.u_gamma()] = "u_gamma";
    inst.labels[ly.l_u()] = "l_U";
    inst.labels[ly.l()] = "l";
    inst.labels[ly.r1()] = "r1";
    inst.labels[ly.r2()] = "r2";
    for (long long j = 0; j < ly.pad; ++j) {
        inst.labels[ly.v_alpha(j)] = "V_alpha";
        inst.labels[ly.v_beta(j)] = "V_beta";
        inst.labels[ly.v_gamma(j)] = "V_gamma";
        inst.labels[ly.v_abc(j)] = "V_abc";
    }
    for (long long e = 0; e < m; ++e) {
        auto [u, w] = source_edges[e];
        inst.labels[ly.edge_vertex(e)] = "e(" + num(u) + "," + num(w) + ")";
    }
    if (variant == MccVariant::hindex) {
        for (int c = 0; c < k; ++c) inst.labels[ly.color_base + c] = "color(" + num(c + 1) + ")";
    } else {
        for (long long i = 0; i < num_color; ++i)
            inst.labels[ly.color_base + i] =
                "c(" + num(color_pairs[i].first) + "," + num(color_pairs[i].second) + ")";
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Average degree padding (Prop)

ReducedInstance pad_average_degree(const Graph& g, long long ell, Rational alpha,
                                   const GenLimits& limits) {
    const long long n = g.num_vertices(), m = g.num_edges();
    if (n < 1) throw std::invalid_argument("pad_average_degree: empty source graph");
    if (alpha.den <= 0) throw std::invalid_argument("pad_average_degree: alpha denominator must be positive");
    if (alpha.num <= 2 * alpha.den) throw std::invalid_argument("pad_average_degree: alpha must exceed 2");
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    if (ell <= max_deg + 2)
        throw std::invalid_argument("pad_average_degree: ell must exceed max degree + 2");

    // ceil(2m / (alpha - 2) - n) with alpha = num/den, never negative
    const long long denom = alpha.num - 2 * alpha.den;  // > 0
    long long path_len = (2 * m * alpha.den - n * denom + denom - 1) / denom;
    path_len = std::max<long long>(0, path_len);

    const long long total = n + path_len;
    check_budget(total, limits, "pad_average_degree");

    std::vector<std::pair<int, int>> edges = g.edge_list();
    for (long long j = 0; j + 1 < path_len; ++j)
        edges.emplace_back(static_cast<int>(n + j), static_cast<int>(n + j + 1));
    if (path_len > 0) edges.emplace_back(static_cast<int>(n), 0);  // endpoint attaches to vertex 0

    ReducedInstance inst;
    inst.kind = ReductionKind::avg_degree_pad;
    inst.graph = Graph(static_cast<int>(total), edges);
    inst.ell = ell;
    inst.source_graph = g;
    inst.source_summary = "2-club instance n=" + num(n) + " m=" + num(m) + " ell=" + num(ell) +
                          " alpha=" + num(alpha.num) + "/" + num(alpha.den);

    inst.labels.assign(total, "");
    for (int v = 0; v < n; ++v) inst.labels[v] = "v(" + num(v) + ")";
    for (long long j = 0; j < path_len; ++j) inst.labels[n + j] = "p(" + num(j + 1) + ")";
    return inst;
}

// ---------------------------------------------------------------------------
// Forward witness mapping

namespace {

void require_clique(const Graph& g, const VertexSet& cand, int k, const char* what) {
    if (static_cast<int>(cand.size()) != k)
        throw std::invalid_argument(std::string(what) + ": witness must have exactly k vertices");
    if (!is_sorted_set(cand) || (!cand.empty() && (cand.front() < 0 || cand.back() >= g.num_vertices())))
        throw std::invalid_argument(std::string(what) + ": witness is not a vertex set of the source");
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (!g.adjacent(cand[i], cand[j]))
                throw std::invalid_argument(std::string(what) + ": witness is not a clique");
}

}  // namespace

VertexSet forward_witness(const ReducedInstance& inst, const SourceWitness& witness) {
    VertexSet out;
    switch (inst.kind) {
        case ReductionKind::clique_cover3: {
            const Graph& g = inst.source_graph;
            require_clique(g, witness.vertices, inst.source_k, "forward_witness(clique_cover3)");
            const long long n = g.num_vertices(), m = g.num_edges();
            cc3::Layout ly{n, m, 0, 0};
            if (!inst.pads_shrunk) {
                ly.big = ipow(n, 5);
                ly.fan = ipow(n, 3);
            } else {  // labels are authoritative for shrunk instances
                for (const auto& label : inst.labels) {
                    if (label == "Big1") ++ly.big;
                    if (label == "fan(0)") ++ly.fan;
                }
            }
            auto source_edges = g.edge_list();
            for (int v : witness.vertices) {
                out.push_back(ly.v1(v));
                out.push_back(ly.v2(v));
                for (long long j = 0; j < ly.fan; ++j) out.push_back(ly.fan_vertex(v, j));
            }
            for (long long e = 0; e < m; ++e) {
                auto [u, v] = source_edges[e];
                if (set_contains(witness.vertices, u) && set_contains(witness.vertices, v)) {
                    out.push_back(ly.edge_vertex(e, 0));
                    out.push_back(ly.edge_vertex(e, 1));
                }
            }
            for (long long j = 0; j < ly.big; ++j) {
                out.push_back(ly.big1(j));
                out.push_back(ly.big2(j));
            }
            break;
        }
        case ReductionKind::domination2: {
            const Graph& g = inst.source_graph;
            require_clique(g, witness.vertices, inst.source_k, "forward_witness(domination2)");
            const long long n = g.num_vertices(), m = g.num_edges();
            for (int v : witness.vertices) out.push_back(v);
            for (long long e = 0; e < m; ++e) out.push_back(static_cast<int>(n + e));
            for (long long j = 0; j < n + 2; ++j) out.push_back(static_cast<int>(n + m + j));
            break;
        }
        case ReductionKind::bipartite_plus_one: {
            const Max2SatFormula& f = inst.source_formula;
            if (static_cast<int>(witness.assignment.size()) != f.num_vars)
                throw std::invalid_argument("forward_witness(bipartite): assignment size mismatch");
            int satisfied = count_satisfied(f, witness.assignment);
            if (satisfied < f.k)
                throw std::invalid_argument("forward_witness(bipartite): assignment satisfies only " +
                                            num(satisfied) + " clauses, needs " + num(f.k));
            bip::Layout ly{f.num_vars, static_cast<long long>(f.clauses.size()), 0, 0};
            if (!inst.pads_shrunk) {
                ly.block_f = ipow(f.num_vars, 5);
                ly.block_x2 = ipow(f.num_vars, 3);
            } else {
                for (const auto& label : inst.labels) {
                    if (label == "F(x1)") ++ly.block_f;
                    if (label == "X2(x1_t)") ++ly.block_x2;
                }
            }
            int taken = 0;
            for (long long i = 0; i < ly.m; ++i) {
                auto [a, b] = f.clauses[i];
                bool sa = a > 0 ? witness.assignment[a - 1] : !witness.assignment[-a - 1];
                bool sb = b > 0 ? witness.assignment[b - 1] : !witness.assignment[-b - 1];
                if ((sa || sb) && taken < f.k) {
                    out.push_back(ly.clause(i));
                    ++taken;
                }
            }
            for (int var = 0; var < ly.n; ++var) {
                for (long long j = 0; j < ly.block_f; ++j) out.push_back(ly.f_vertex(var, j));
                bool val = witness.assignment[var];
                out.push_back(val ? ly.x_true(var) : ly.x_false(var));
                for (long long j = 0; j < ly.block_x2; ++j) out.push_back(ly.x2_vertex(var, val, j));
            }
            out.push_back(ly.vstar());
            break;
        }
        case ReductionKind::mcc_hindex:
        case ReductionKind::mcc_degeneracy: {
            const ColoredGraph& cg = inst.source_colored;
            require_clique(cg.graph, witness.vertices, inst.source_k, "forward_witness(mcc)");
            std::set<int> colors_seen;
            for (int v : witness.vertices)
                if (!colors_seen.insert(cg.colors[v]).second)
                    throw std::invalid_argument("forward_witness(mcc): witness repeats a color");
            const long long n = cg.graph.num_vertices();
            mcc::Layout ly;
            ly.n = n;
            ly.m = cg.graph.num_edges();
            ly.gadget = 3 * n + 3;
            ly.anchor_base = n * ly.gadget;
            ly.pad = 0;  // recoverable from the labels: the anchor holds 4*pad + 7 vertices
            for (const auto& label : inst.labels)
                if (label == "V_alpha") ++ly.pad;
            ly.edge_base = ly.anchor_base + 4 * ly.pad + 7;
            ly.color_base = ly.edge_base + ly.m;

            for (int v : witness.vertices)
                for (long long pos = 0; pos < ly.gadget; ++pos) out.push_back(ly.gadget_vertex(v, pos));
            for (long long a = ly.anchor_base; a < ly.edge_base; ++a) out.push_back(static_cast<int>(a));
            auto source_edges = cg.graph.edge_list();
            for (long long e = 0; e < ly.m; ++e) {
                auto [u, w] = source_edges[e];
                if (set_contains(witness.vertices, u) && set_contains(witness.vertices, w))
                    out.push_back(ly.edge_vertex(e));
            }
            for (long long c = ly.color_base; c < inst.graph.num_vertices(); ++c)
                out.push_back(static_cast<int>(c));
            break;
        }
        case ReductionKind::avg_degree_pad: {
            const Graph& g = inst.source_graph;
            if (!is_sorted_set(witness.vertices) ||
                (!witness.vertices.empty() && witness.vertices.back() >= g.num_vertices()))
                throw std::invalid_argument("forward_witness(pad): witness not a source vertex set");
            if (static_cast<long long>(witness.vertices.size()) != inst.ell)
                throw std::invalid_argument("forward_witness(pad): witness must have size exactly ell");
            if (!verify_s_club(g, 2, witness.vertices))
                throw std::invalid_argument("forward_witness(pad): witness is not a 2-club of the source");
            out = witness.vertices;  // vertex ids are preserved by the padding
            break;
        }
    }
    std::sort(out.begin(), out.end());
    if (static_cast<long long>(out.size()) != inst.ell)
        throw std::logic_error("forward_witness: mapped witness size " + num(out.size()) +
                               " differs from ell " + num(inst.ell));
    if (!verify_s_club(inst.graph, 2, out))
        throw std::logic_error("forward_witness: mapped witness failed the 2-club check");
    return out;
}

}  // namespace twoclub
