#pragma once

#include "twoclub/exact.hpp"
#include "twoclub/graph.hpp"

namespace twoclub {

struct DecisionResult {
    bool yes = false;
    VertexSet witness;  // a 2-club of size >= ell when yes
    SolveStats stats;
};

// Exact maximum 2-club when g - x is a cluster graph. Dynamic program over
// clusters with twin-class subsets as states, run for every guess X' of the
// modulator part inside the solution. Practical cap |x| <= 4.
SolveResult solve_cluster_modulator(const Graph& g, const VertexSet& x, int jobs = 1);

// Decision "is there a 2-club of size >= ell" when g - x is a co-cluster
// graph. Edgeless remainder delegates to vertex_cover_routine; a connected
// remainder has diameter <= 2, so either V \ x is already large enough or
// n - ell < |x| and dual branching finishes quickly.
DecisionResult solve_cocluster_modulator(const Graph& g, const VertexSet& x, int ell);

// Exact maximum 2-club when g - x is edgeless (x is a vertex cover).
// Enumerates, per guess X', the twin-class subsets that can join X'.
SolveResult vertex_cover_routine(const Graph& g, const VertexSet& x);

}  // namespace twoclub
