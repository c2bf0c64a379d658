#pragma once

#include <cstdint>
#include <functional>

#include "twoclub/graph.hpp"

namespace twoclub {

struct SolveStats {
    std::int64_t branch_nodes = 0;   // nodes at which a solver actually branched
    std::int64_t table_entries = 0;  // DP entries filled (modulator solvers)
    std::int64_t elapsed_ms = 0;
};

struct SolveResult {
    VertexSet best;
    int size = 0;  // == best.size()
    SolveStats stats;
};

using InnerSolver = std::function<SolveResult(const Graph&)>;

// Brute-force ground truth: enumerates, for each vertex v, all subsets of
// N_2[v] containing v. Exact since every 2-club containing v lies in N_2[v].
// Intended for small graphs; throws budget_error when some ball exceeds 64
// vertices.
SolveResult oracle_max_2club(const Graph& g);

// Exact maximum s-club via branching on a vertex pair at distance > s
// (including unreachable pairs): delete one endpoint or the other, deepening
// the deletion budget until some branch reaches diameter <= s. Budgets that
// cannot reach lower_bound vertices are never explored, so if no s-club of
// size >= lower_bound exists the returned set is empty. The branch-node count
// stays below 2^(n - opt + 1).
SolveResult dual_branching(const Graph& g, int s, int lower_bound = 0);

// Maximum over v of inner applied to g[N_2[v]]; exact for any exact inner
// maximum-2-club solver. jobs > 1 solves balls concurrently.
SolveResult turing_kernel_solve(const Graph& g, const InnerSolver& inner, int jobs = 1);

// Largest ball of radius floor(s/2); always a valid s-club.
SolveResult heuristic_ball(const Graph& g, int s);

// True iff some vertex triple is pairwise non-adjacent, i.e. alpha(g) > 2.
bool complement_has_triangle(const Graph& g);

// Polynomial algorithm for graphs whose maximum independent set has size at
// most two: for every ordered pair (v,u), delete N(v) & N[u] and take
// N[v] | (N(u) & N_s(v)) in the remainder. Throws std::invalid_argument when
// alpha(g) > 2.
SolveResult independence2_solve(const Graph& g, int s);

}  // namespace twoclub
