#pragma once

#include <array>
#include <optional>

#include "twoclub/graph.hpp"

namespace twoclub {

struct DegreeStats {
    int max_degree = 0;
    double average_degree = 0.0;
    int h_index = 0;  // largest k with >= k vertices of degree >= k
};

struct DegeneracyResult {
    int value = 0;
    std::vector<int> elimination_order;  // min-degree peeling, smallest id first on ties
};

enum class ModulatorTarget { cluster, cograph };

struct Modulator {
    ModulatorTarget target = ModulatorTarget::cluster;
    VertexSet vertices;
    bool exact = false;
};

DegreeStats degree_stats(const Graph& g);
DegeneracyResult degeneracy(const Graph& g);

// First induced P3 (a-b-c, ac a non-edge) / P4 in scan order, or nullopt.
// `alive` restricts the search to a subset of vertices; empty = all.
std::optional<std::array<int, 3>> find_induced_p3(const Graph& g, const std::vector<char>& alive = {});
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g, const std::vector<char>& alive = {});

// Deletes all vertices of some induced P3/P4 until none remains; the result
// is a modulator of size at most t times the optimum (t = 3 resp. 4).
Modulator modulator_greedy(const Graph& g, ModulatorTarget target);

// Smallest modulator of size <= budget via branching on the vertices of one
// obstruction, or nullopt. Memo-free depth-first search.
std::optional<Modulator> modulator_exact(const Graph& g, ModulatorTarget target, int budget);

bool is_valid_modulator(const Graph& g, ModulatorTarget target, const VertexSet& vertices);

// Minimum dominating set of size <= limit by brute force, or nullopt.
// limit must be <= 3.
std::optional<VertexSet> small_dominating_set(const Graph& g, int limit);

}  // namespace twoclub
