#pragma once

#include "twoclub/exact.hpp"
#include "twoclub/graph.hpp"

namespace twoclub {

// Exact maximum 2-club in |V|^f(k) time for h-index k. Guesses the solution's
// high-degree vertices, one center per twin class, and the distance-4
// neighborhood of every conflicted class; cleaning keeps all alive vertices
// within distance two of each committed vertex. Rejects graphs with
// h-index > cap (default 2; k = 3 is documented as out of reach).
SolveResult solve_hindex_xp(const Graph& g, int cap = 2);

}  // namespace twoclub
