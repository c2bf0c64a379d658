#pragma once

// Shared instance generators for the unit and acceptance suites. Everything
// is seeded std::mt19937 so runs are reproducible.

#include <random>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub::testing {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// star K_{1,leaves} with the center at vertex 0
inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);              // spokes
    }
    return Graph(10, edges);
}

inline Graph erdos_renyi(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// random triangle-free graph by edge insertion with rejection
inline Graph random_triangle_free(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!coin(rng)) continue;
            bool closes_triangle = false;
            for (int w = 0; w < n && !closes_triangle; ++w)
                if (adj[i][w] && adj[j][w]) closes_triangle = true;
            if (!closes_triangle) {
                adj[i][j] = adj[j][i] = 1;
                edges.emplace_back(i, j);
            }
        }
    return Graph(n, edges);
}

// disjoint cliques with the given sizes
inline Graph cluster_graph(const std::vector<int>& sizes) {
    std::vector<std::pair<int, int>> edges;
    int base = 0, total = 0;
    for (int s : sizes) total += s;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
        base += s;
    }
    return Graph(total, edges);
}

// appends `apexes` fresh vertices, each adjacent to a random vertex subset
inline Graph add_random_apexes(const Graph& g, int apexes, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    auto edges = g.edge_list();
    const int n = g.num_vertices();
    for (int a = 0; a < apexes; ++a)
        for (int v = 0; v < n + a; ++v)
            if (coin(rng)) edges.emplace_back(n + a, v);
    return Graph(n + apexes, edges);
}

// random cograph built from a random cotree shape over n leaves
inline Graph random_cograph(int n, std::mt19937& rng) {
    std::vector<std::vector<int>> groups(n);
    for (int v = 0; v < n; ++v) groups[v] = {v};
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution series(0.5);
    std::uniform_int_distribution<int> pick(0, 1 << 20);
    while (groups.size() > 1) {
        int a = pick(rng) % static_cast<int>(groups.size());
        int b = pick(rng) % static_cast<int>(groups.size());
        if (a == b) continue;
        if (series(rng))
            for (int u : groups[a])
                for (int v : groups[b]) edges.emplace_back(u, v);
        groups[a].insert(groups[a].end(), groups[b].begin(), groups[b].end());
        groups.erase(groups.begin() + b);
    }
    return Graph(n, edges);
}

}  // namespace twoclub::testing
