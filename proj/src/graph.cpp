#include "twoclub/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace twoclub {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range [0," + std::to_string(n) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += static_cast<int>(nbrs.size());
    }
    m_ /= 2;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.num_vertices();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs: invalid source vertex");
    std::vector<int> dist(n, kUnreachable);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

VertexSet ball(const Graph& g, int v, int radius) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("ball: invalid center vertex");
    if (radius < 0) throw std::invalid_argument("ball: negative radius");
    auto dist = bfs_distances(g, v);
    VertexSet result;
    for (int u = 0; u < g.num_vertices(); ++u)
        if (dist[u] <= radius) result.push_back(u);
    return result;
}

TwinPartition twin_classes(const Graph& g, const VertexSet& modulator) {
    const int n = g.num_vertices();
    if (!is_sorted_set(modulator)) throw std::invalid_argument("twin_classes: modulator not a sorted set");
    if (!modulator.empty() && (modulator.front() < 0 || modulator.back() >= n))
        throw std::invalid_argument("twin_classes: modulator vertex out of range");

    TwinPartition part;
    part.modulator = modulator;
    std::map<VertexSet, std::vector<int>> by_signature;
    for (int v = 0; v < n; ++v) {
        if (set_contains(modulator, v)) continue;
        VertexSet sig = set_intersection(g.neighbors(v), modulator);
        by_signature[std::move(sig)].push_back(v);
    }
    for (auto& [sig, members] : by_signature) part.classes.push_back({sig, members});
    std::sort(part.classes.begin(), part.classes.end(),
              [](const TwinClass& a, const TwinClass& b) { return a.members.front() < b.members.front(); });
    return part;
}

bool verify_s_club(const Graph& g, int s, const VertexSet& cand) {
    if (s < 1) throw std::invalid_argument("verify_s_club: s must be >= 1");
    if (!is_sorted_set(cand)) throw std::invalid_argument("verify_s_club: candidate not a sorted set");
    const int k = static_cast<int>(cand.size());
    if (k <= 1) return true;
    if (!cand.empty() && (cand.front() < 0 || cand.back() >= g.num_vertices()))
        throw std::invalid_argument("verify_s_club: candidate vertex out of range");

    // position of each candidate vertex, -1 elsewhere
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < k; ++i) pos[cand[i]] = i;

    std::vector<int> dist(k);
    std::vector<int> queue(k);
    for (int i = 0; i < k; ++i) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[i] = 0;
        int head = 0, tail = 0;
        queue[tail++] = i;
        int reached = 1;
        while (head < tail) {
            int u = queue[head++];
            if (dist[u] >= s) break;
            for (int w : g.neighbors(cand[u])) {
                int j = pos[w];
                if (j >= 0 && dist[j] == kUnreachable) {
                    dist[j] = dist[u] + 1;
                    queue[tail++] = j;
                    ++reached;
                }
            }
        }
        if (reached < k) return false;
    }
    return true;
}

std::optional<std::pair<int, int>> find_violating_pair(const Graph& g, int s, const VertexSet& cand) {
    if (cand.size() <= 1) return std::nullopt;
    auto sub = induce(g, cand);
    for (int i = 0; i < sub.graph.num_vertices(); ++i) {
        auto dist = bfs_distances(sub.graph, i);
        for (int j = 0; j < sub.graph.num_vertices(); ++j)
            if (dist[j] > s) return std::make_pair(sub.id_map[i], sub.id_map[j]);
    }
    return std::nullopt;
}

InducedGraph induce(const Graph& g, const VertexSet& s) {
    if (!is_sorted_set(s)) throw std::invalid_argument("induce: vertex set not sorted");
    if (!s.empty() && (s.front() < 0 || s.back() >= g.num_vertices()))
        throw std::invalid_argument("induce: vertex out of range");
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) pos[s[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        for (int w : g.neighbors(s[i]))
            if (pos[w] > i) edges.emplace_back(i, pos[w]);
    return {Graph(static_cast<int>(s.size()), edges), s};
}

Graph complement(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        std::size_t idx = 0;
        for (int v = u + 1; v < n; ++v) {
            while (idx < nbrs.size() && nbrs[idx] < v) ++idx;
            if (idx == nbrs.size() || nbrs[idx] != v) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<VertexSet> result;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        VertexSet comp;
        stack.push_back(v);
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool is_sorted_set(const VertexSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool set_contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

bool diameter_at_most(const Graph& g, int bound) {
    const int n = g.num_vertices();
    if (n <= 1) return true;
    BitRows rows(g);
    const int words = rows.words;
    std::vector<std::uint64_t> full(words, 0);
    for (int v = 0; v < n; ++v) full[v >> 6] |= std::uint64_t(1) << (v & 63);

    std::vector<std::uint64_t> reach(words), frontier(words), next(words);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < words; ++w) reach[w] = frontier[w] = rows.row(v)[w];
        for (int step = 1; step < bound; ++step) {
            bool complete = true;
            for (int w = 0; w < words; ++w) {
                next[w] = 0;
                if (reach[w] != full[w]) complete = false;
            }
            if (complete) break;
            for (int base = 0; base < words; ++base) {
                std::uint64_t bits = frontier[base];
                while (bits) {
                    int u = base * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::uint64_t* row = rows.row(u);
                    for (int w = 0; w < words; ++w) next[w] |= row[w];
                }
            }
            for (int w = 0; w < words; ++w) {
                frontier[w] = next[w] & ~reach[w];
                reach[w] |= next[w];
            }
        }
        for (int w = 0; w < words; ++w)
            if (reach[w] != full[w]) return false;
    }
    return true;
}

BitRows::BitRows(const Graph& g) : n(g.num_vertices()), words((g.num_vertices() + 63) / 64) {
    rows.assign(static_cast<std::size_t>(n) * words, 0);
    for (int v = 0; v < n; ++v) {
        auto* r = rows.data() + static_cast<std::size_t>(v) * words;
        r[v >> 6] |= std::uint64_t(1) << (v & 63);
        for (int w : g.neighbors(v)) r[w >> 6] |= std::uint64_t(1) << (w & 63);
    }
}

}  // namespace twoclub
