#pragma once

#include "twoclub/errors.hpp"
#include "twoclub/exact.hpp"
#include "twoclub/graph.hpp"

namespace twoclub {

// Rooted binary decomposition tree of a cograph: series nodes join their two
// children, parallel nodes take the disjoint union, leaves are vertices.
// Wider compositions are binarized left-deep; children are ordered by
// smallest contained vertex id.
struct Cotree {
    enum class Kind { leaf, series, parallel };
    struct Node {
        Kind kind = Kind::leaf;
        int child[2] = {-1, -1};
        int vertex = -1;       // leaves only
        VertexSet vertices;    // V(P), sorted
    };
    std::vector<Node> nodes;
    int root = -1;
};

// Recursive decomposition; throws not_a_cograph carrying an induced P4 when
// the graph has one.
Cotree build_cotree(const Graph& g);

// Re-evaluates the tree (series = join, parallel = disjoint union) back into
// a graph on the same vertex ids.
Graph cotree_to_graph(const Cotree& tree, int num_vertices);

// Exact maximum 2-club when g - x is a cograph: bottom-up table over cotree
// nodes and twin-class subsets for every guess of the modulator part inside
// the solution. Practical cap |x| <= 4.
SolveResult solve_cograph_modulator(const Graph& g, const VertexSet& x, int jobs = 1);

}  // namespace twoclub
