#include "twoclub/structparams.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoclub {

DegreeStats degree_stats(const Graph& g) {
    const int n = g.num_vertices();
    DegreeStats stats;
    if (n == 0) return stats;
    std::vector<int> degrees(n);
    for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
    stats.max_degree = *std::max_element(degrees.begin(), degrees.end());
    stats.average_degree = 2.0 * g.num_edges() / n;
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    for (int k = 1; k <= n; ++k)
        if (degrees[k - 1] >= k) stats.h_index = k;
    return stats;
}

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.num_vertices();
    DegeneracyResult result;
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        result.value = std::max(result.value, deg[best]);
        result.elimination_order.push_back(best);
        removed[best] = 1;
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    return result;
}

namespace {

bool is_alive(const std::vector<char>& alive, int v) { return alive.empty() || alive[v]; }

}  // namespace

std::optional<std::array<int, 3>> find_induced_p3(const Graph& g, const std::vector<char>& alive) {
    const int n = g.num_vertices();
    for (int b = 0; b < n; ++b) {
        if (!is_alive(alive, b)) continue;
        const auto& nbrs = g.neighbors(b);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (!is_alive(alive, nbrs[i])) continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!is_alive(alive, nbrs[j])) continue;
                if (!g.adjacent(nbrs[i], nbrs[j])) return std::array<int, 3>{nbrs[i], b, nbrs[j]};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g, const std::vector<char>& alive) {
    const int n = g.num_vertices();
    // middle edge b-c, a in N(b)\N[c], d in N(c)\N[b], ad a non-edge
    for (int b = 0; b < n; ++b) {
        if (!is_alive(alive, b)) continue;
        for (int c : g.neighbors(b)) {
            if (!is_alive(alive, c)) continue;
            for (int a : g.neighbors(b)) {
                if (!is_alive(alive, a) || a == c || g.adjacent(a, c)) continue;
                for (int d : g.neighbors(c)) {
                    if (!is_alive(alive, d) || d == b || d == a || g.adjacent(d, b)) continue;
                    if (!g.adjacent(a, d)) return std::array<int, 4>{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

Modulator modulator_greedy(const Graph& g, ModulatorTarget target) {
    Modulator mod;
    mod.target = target;
    mod.exact = false;
    std::vector<char> alive(g.num_vertices(), 1);
    for (;;) {
        if (target == ModulatorTarget::cluster) {
            auto p3 = find_induced_p3(g, alive);
            if (!p3) break;
            for (int v : *p3) {
                alive[v] = 0;
                mod.vertices.push_back(v);
            }
        } else {
            auto p4 = find_induced_p4(g, alive);
            if (!p4) break;
            for (int v : *p4) {
                alive[v] = 0;
                mod.vertices.push_back(v);
            }
        }
    }
    std::sort(mod.vertices.begin(), mod.vertices.end());
    return mod;
}

namespace {

bool exact_branch(const Graph& g, ModulatorTarget target, std::vector<char>& alive, int budget,
                  VertexSet& chosen) {
    std::vector<int> obstruction;
    if (target == ModulatorTarget::cluster) {
        auto p3 = find_induced_p3(g, alive);
        if (!p3) return true;
        obstruction.assign(p3->begin(), p3->end());
    } else {
        auto p4 = find_induced_p4(g, alive);
        if (!p4) return true;
        obstruction.assign(p4->begin(), p4->end());
    }
    if (budget == 0) return false;
    for (int v : obstruction) {
        alive[v] = 0;
        chosen.push_back(v);
        if (exact_branch(g, target, alive, budget - 1, chosen)) return true;
        chosen.pop_back();
        alive[v] = 1;
    }
    return false;
}

}  // namespace

std::optional<Modulator> modulator_exact(const Graph& g, ModulatorTarget target, int budget) {
    if (budget < 0) throw std::invalid_argument("modulator_exact: negative budget");
    std::vector<char> alive(g.num_vertices(), 1);
    // iterative deepening yields the smallest modulator within budget
    for (int b = 0; b <= budget; ++b) {
        VertexSet chosen;
        if (exact_branch(g, target, alive, b, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return Modulator{target, std::move(chosen), true};
        }
    }
    return std::nullopt;
}

bool is_valid_modulator(const Graph& g, ModulatorTarget target, const VertexSet& vertices) {
    std::vector<char> alive(g.num_vertices(), 1);
    for (int v : vertices) {
        if (v < 0 || v >= g.num_vertices()) return false;
        alive[v] = 0;
    }
    if (target == ModulatorTarget::cluster) return !find_induced_p3(g, alive).has_value();
    return !find_induced_p4(g, alive).has_value();
}

std::optional<VertexSet> small_dominating_set(const Graph& g, int limit) {
    if (limit < 0 || limit > 3) throw std::invalid_argument("small_dominating_set: limit must be in [0,3]");
    const int n = g.num_vertices();
    if (n == 0) return VertexSet{};

    BitRows rows(g);
    const int words = rows.words;
    std::vector<std::uint64_t> full(words, 0);
    for (int v = 0; v < n; ++v) full[v >> 6] |= std::uint64_t(1) << (v & 63);

    auto covers_all = [&](const std::vector<int>& picks) {
        for (int w = 0; w < words; ++w) {
            std::uint64_t acc = 0;
            for (int v : picks) acc |= rows.row(v)[w];
            if ((acc & full[w]) != full[w]) return false;
        }
        return true;
    };

    for (int size = 1; size <= limit; ++size) {
        std::vector<int> picks(size);
        // lexicographically first combination of the given size
        auto rec = [&](auto&& self, int idx, int start) -> bool {
            if (idx == size) return covers_all(picks);
            for (int v = start; v < n; ++v) {
                picks[idx] = v;
                if (self(self, idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return VertexSet(picks.begin(), picks.end());
    }
    return std::nullopt;
}

}  // namespace twoclub
