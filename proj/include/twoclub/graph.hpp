#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace twoclub {

// Vertices are dense integer ids 0..n-1. External labels, when any, are kept
// by the CLI in a side map.
using VertexSet = std::vector<int>;  // sorted, duplicate-free

// Sentinel for "no path". BFS never adds to it, so overflow is not a concern.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/**
   Immutable simple undirected graph with sorted adjacency lists.

   Self-loops and out-of-range endpoints are rejected; parallel edges in the
   input are merged.
 */
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    std::vector<std::pair<int, int>> edge_list() const;

  private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// induce() relabels kept vertices to 0..|s|-1; id_map[new] = old.
struct InducedGraph {
    Graph graph;
    VertexSet id_map;
};

// Partition of V \ modulator into twin classes w.r.t. the modulator. Each
// class carries its signature N(v) & modulator, identical for all members.
struct TwinClass {
    VertexSet signature;
    VertexSet members;
};

struct TwinPartition {
    VertexSet modulator;
    std::vector<TwinClass> classes;  // ordered by smallest member
};

// Single-source shortest path lengths; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, int source);

// Closed ball N_t[v] = { u : dist(u,v) <= t }, always including v.
VertexSet ball(const Graph& g, int v, int radius);

TwinPartition twin_classes(const Graph& g, const VertexSet& modulator);

// True iff every pair of cand has distance <= s in g[cand]. Empty and
// singleton sets qualify. Unreachable pairs count as violations.
bool verify_s_club(const Graph& g, int s, const VertexSet& cand);

// First pair (u, v) of cand with induced distance > s, or nullopt.
std::optional<std::pair<int, int>> find_violating_pair(const Graph& g, int s, const VertexSet& cand);

// Bitset-parallel eccentricity scan; connected-and-small-diameter test.
bool diameter_at_most(const Graph& g, int bound);

InducedGraph induce(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// Set helpers used throughout; all arguments sorted.
bool is_sorted_set(const VertexSet& s);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);

// Adjacency as 64-bit row masks; row(v) includes v itself (closed rows).
// Built on demand by solvers that grind over many induced subgraphs.
struct BitRows {
    explicit BitRows(const Graph& g);
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;  // n * words, closed neighborhoods
    const std::uint64_t* row(int v) const { return rows.data() + static_cast<std::size_t>(v) * words; }
};

}  // namespace twoclub
