#pragma once

#include <cstdint>
#include <string>

#include "twoclub/graph.hpp"

namespace twoclub {

enum class ReductionKind {
    clique_cover3,
    domination2,
    bipartite_plus_one,
    mcc_hindex,
    mcc_degeneracy,
    avg_degree_pad,
};

std::string to_string(ReductionKind kind);

// Two literals per clause; literal +i / -i refers to variable i (1-based).
struct Max2SatFormula {
    int num_vars = 0;
    std::vector<std::pair<int, int>> clauses;
    int k = 0;  // target number of satisfied clauses
};

// Throws std::invalid_argument on out-of-range literals, repeated literals
// inside a clause, or duplicate clauses.
void validate_formula(const Max2SatFormula& f);
int count_satisfied(const Max2SatFormula& f, const std::vector<bool>& assignment);

struct ColoredGraph {
    Graph graph;
    std::vector<int> colors;  // values in 1..k
};

struct GenLimits {
    long long vertex_budget = 200000;
    // Expert setting: divides the n^5/n^3 pad block sizes. Anything > 1 voids
    // the reductions' counting arguments; instances are marked accordingly.
    long long pad_divisor = 1;
};

struct ReducedInstance {
    Graph graph;
    long long ell = 0;
    ReductionKind kind = ReductionKind::domination2;
    std::vector<std::string> labels;  // role of every vertex
    std::string source_summary;
    bool pads_shrunk = false;

    // retained source instance, used by forward_witness
    Graph source_graph;            // clique_cover3, domination2, avg_degree_pad
    Max2SatFormula source_formula; // bipartite_plus_one
    ColoredGraph source_colored;   // mcc variants
    int source_k = 0;
};

// Clique -> 2-Club on graphs with clique cover number three and diameter
// at most three.
ReducedInstance gen_clique_cover3(const Graph& g, int k, const GenLimits& limits = {});

// Clique -> 2-Club on graphs with domination number two and diameter three.
// The source graph must have no isolated vertices.
ReducedInstance gen_domination2(const Graph& g, int k, const GenLimits& limits = {});

// Maximum 2-SAT -> 2-Club on graphs at distance one to bipartite.
ReducedInstance gen_bipartite_plus_one(const Max2SatFormula& f, const GenLimits& limits = {});

// Multicolored Clique -> 2-Club; variant hindex bounds the h-index by k+7,
// variant degeneracy bounds the degeneracy by five.
enum class MccVariant { hindex, degeneracy };
ReducedInstance gen_mcc(const ColoredGraph& cg, int k, MccVariant variant, const GenLimits& limits = {});

struct Rational {
    long long num = 0;
    long long den = 1;
};

// Appends a path so that the average degree drops to alpha while the
// existence of a 2-club of size >= ell is unchanged; needs alpha > 2 and
// ell > max_degree + 2.
ReducedInstance pad_average_degree(const Graph& g, long long ell, Rational alpha,
                                   const GenLimits& limits = {});

// Source-side witness: a clique / colored clique / 2-club for graph-based
// reductions, a truth assignment (indexed by variable - 1) for Max 2-SAT.
struct SourceWitness {
    VertexSet vertices;
    std::vector<bool> assignment;
};

// Maps a valid source witness to the 2-club named in the forward direction of
// the corresponding proof; the result has size exactly inst.ell and passes
// verify_s_club. Throws std::invalid_argument when the source witness fails
// its own check.
VertexSet forward_witness(const ReducedInstance& inst, const SourceWitness& witness);

}  // namespace twoclub
