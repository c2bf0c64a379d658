#pragma once

#include <optional>
#include <string>

#include "twoclub/exact.hpp"
#include "twoclub/graph.hpp"
#include "twoclub/reductions.hpp"
#include "twoclub/structparams.hpp"

namespace twoclub {

// Plain edge list with optional "n m" header, '#' comments, 0-based ids.
// Files ending in ".col" are parsed as DIMACS ("p edge n m" / "e u v",
// 1-based). Parse problems raise std::invalid_argument.
Graph read_graph(const std::string& path);
Graph parse_edge_list(const std::string& text);
Graph parse_dimacs(const std::string& text);
void write_graph(const std::string& path, const Graph& g);
std::string format_edge_list(const Graph& g);

// Solution / modulator files: one vertex id per line, blank lines and '#'
// comments ignored.
VertexSet read_vertex_list(const std::string& path);
void write_vertex_list(const std::string& path, const VertexSet& s);

// Max 2-SAT: header "p vars clauses k", then one clause per line as two
// nonzero signed integers.
Max2SatFormula read_max2sat(const std::string& path);
std::string format_max2sat(const Max2SatFormula& f);

// Colors: one "vertex color" pair per line.
std::vector<int> read_colors(const std::string& path, int num_vertices);

struct RunReport {
    std::string input;
    int n = 0;
    int m = 0;
    std::string algorithm;
    std::string auto_rule;  // auto mode: which policy rule fired
    int s = 2;
    bool params_only = false;

    int size = 0;
    VertexSet witness;
    bool verified = false;
    std::optional<int> ell;
    std::optional<bool> decision;
    SolveStats stats;

    DegreeStats degrees;
    int degeneracy_value = 0;
    int component_count = 0;
    int greedy_cluster_modulator = -1;  // -1 = not computed
    int greedy_cograph_modulator = -1;
};

std::string report_to_json(const RunReport& report);

std::string instance_metadata_json(const ReducedInstance& inst,
                                   const std::vector<std::pair<std::string, bool>>& checks);

}  // namespace twoclub
