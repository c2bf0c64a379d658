#include "twoclub/cograph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "twoclub/structparams.hpp"

namespace twoclub {

namespace {

using Clock = std::chrono::steady_clock;
constexpr int kMinusInf = std::numeric_limits<int>::min() / 2;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& sub, bool in_complement) {
    std::vector<char> member(g.num_vertices(), 0);
    for (int v : sub) member[v] = 1;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<VertexSet> comps;
    for (int v : sub) {
        if (seen[v]) continue;
        VertexSet comp;
        std::vector<int> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            if (!in_complement) {
                for (int w : g.neighbors(u))
                    if (member[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            } else {
                for (int w : sub)
                    if (!seen[w] && w != u && !g.adjacent(u, w)) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return comps;
}

int build_rec(const Graph& g, const VertexSet& sub, Cotree& tree) {
    if (sub.size() == 1) {
        tree.nodes.push_back({Cotree::Kind::leaf, {-1, -1}, sub.front(), sub});
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    auto comps = components_within(g, sub, false);
    Cotree::Kind kind = Cotree::Kind::parallel;
    if (comps.size() == 1) {
        comps = components_within(g, sub, true);
        kind = Cotree::Kind::series;
        if (comps.size() == 1) {
            std::vector<char> alive(g.num_vertices(), 0);
            for (int v : sub) alive[v] = 1;
            auto p4 = find_induced_p4(g, alive);
            if (!p4) throw std::logic_error("build_cotree: connected co-connected graph without P4");
            throw not_a_cograph(std::vector<int>(p4->begin(), p4->end()));
        }
    }

    // left-deep binarization over children ordered by smallest vertex
    int acc = build_rec(g, comps[0], tree);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        int rhs = build_rec(g, comps[i], tree);
        Cotree::Node node;
        node.kind = kind;
        node.child[0] = acc;
        node.child[1] = rhs;
        node.vertices = set_union(tree.nodes[acc].vertices, tree.nodes[rhs].vertices);
        tree.nodes.push_back(std::move(node));
        acc = static_cast<int>(tree.nodes.size()) - 1;
    }
    return acc;
}

}  // namespace

Cotree build_cotree(const Graph& g) {
    Cotree tree;
    const int n = g.num_vertices();
    if (n == 0) return tree;
    VertexSet all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    tree.root = build_rec(g, all, tree);
    return tree;
}

Graph cotree_to_graph(const Cotree& tree, int num_vertices) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& node : tree.nodes) {
        if (node.kind != Cotree::Kind::series) continue;
        for (int u : tree.nodes[node.child[0]].vertices)
            for (int v : tree.nodes[node.child[1]].vertices) edges.emplace_back(u, v);
    }
    return Graph(num_vertices, edges);
}

namespace {

// One modulator guess of the cograph DP. Works on original vertex ids; the
// graphs induced on L | X never touch the removed part of the modulator.
struct CographGuess {
    const Graph& g;
    const Cotree& tree;
    VertexSet X;

    int p = 0;
    std::vector<int> class_of;          // cograph vertices -> class index
    std::vector<std::uint32_t> sig;     // class signature over X positions
    std::vector<std::uint32_t> xnbr;    // X-internal adjacency masks
    std::vector<std::uint32_t> consistent;  // classes sharing an X neighbor

    enum class How : std::uint8_t { none, leaf_empty, leaf_take, shortcut, series_left, series_right, parallel };
    std::vector<int> value;             // node * 2^p + mask
    std::vector<How> how;
    std::vector<std::uint32_t> split1, split2;

    std::size_t idx(int node, std::uint32_t mask) const {
        return (static_cast<std::size_t>(node) << p) | mask;
    }

    std::vector<int> restricted_dist(int source, const std::vector<char>& alive) const {
        std::vector<int> dist(g.num_vertices(), kUnreachable);
        std::vector<int> queue{source};
        dist[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u))
                if (alive[w] && dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    // Exhaustively remove vertices of L at distance > 2 from some X member in
    // g[L | X]; X itself is never removed.
    VertexSet clean(VertexSet l) const {
        if (X.empty()) return l;
        for (;;) {
            std::vector<char> alive(g.num_vertices(), 0);
            for (int v : l) alive[v] = 1;
            for (int v : X) alive[v] = 1;
            std::vector<char> drop(g.num_vertices(), 0);
            for (int xv : X) {
                auto dist = restricted_dist(xv, alive);
                for (int v : l)
                    if (dist[v] > 2) drop[v] = 1;
            }
            VertexSet kept;
            for (int v : l)
                if (!drop[v]) kept.push_back(v);
            if (kept.size() == l.size()) return l;
            l = std::move(kept);
        }
    }

    bool pairwise_ok(const VertexSet& l) const {
        std::vector<char> alive(g.num_vertices(), 0);
        for (int v : l) alive[v] = 1;
        for (int v : X) alive[v] = 1;
        for (int u : l) {
            auto dist = restricted_dist(u, alive);
            for (int v : l)
                if (dist[v] > 2) return false;
            for (int v : X)
                if (dist[v] > 2) return false;
        }
        return true;
    }

    VertexSet node_subset(int node, std::uint32_t mask) const {
        VertexSet subset;
        for (int v : tree.nodes[node].vertices) {
            int c = class_of[v];
            if ((mask >> c) & 1) subset.push_back(v);
        }
        return subset;
    }

    void compute_node(int node) {
        const auto& nd = tree.nodes[node];
        const std::uint32_t nmasks = std::uint32_t(1) << p;

        if (nd.kind == Cotree::Kind::leaf) {
            int c = class_of[nd.vertex];
            bool ok = true;
            for (int xi = 0; xi < static_cast<int>(X.size()); ++xi)
                if (!((sig[c] >> xi) & 1) && (sig[c] & xnbr[xi]) == 0) ok = false;
            for (std::uint32_t t = 0; t < nmasks; ++t) {
                if (t == 0) {
                    value[idx(node, t)] = 0;
                    how[idx(node, t)] = How::leaf_empty;
                } else if (t == (std::uint32_t(1) << c) && ok) {
                    value[idx(node, t)] = 1;
                    how[idx(node, t)] = How::leaf_take;
                }
            }
            return;
        }

        for (std::uint32_t t = 0; t < nmasks; ++t) {
            VertexSet cleaned = clean(node_subset(node, t));
            std::uint32_t realized = 0;
            for (int v : cleaned) realized |= std::uint32_t(1) << class_of[v];
            if ((t & ~realized) != 0) continue;  // some class unrealizable: -inf

            if (pairwise_ok(cleaned)) {
                value[idx(node, t)] = static_cast<int>(cleaned.size());
                how[idx(node, t)] = How::shortcut;
                continue;
            }

            if (nd.kind == Cotree::Kind::series) {
                int left = value[idx(nd.child[0], t)];
                int right = value[idx(nd.child[1], t)];
                if (left >= right && left > kMinusInf) {
                    value[idx(node, t)] = left;
                    how[idx(node, t)] = How::series_left;
                } else if (right > kMinusInf) {
                    value[idx(node, t)] = right;
                    how[idx(node, t)] = How::series_right;
                }
            } else {
                // parallel: both parts contribute; cross pairs need a common
                // X neighbor, so the class sets must be pairwise consistent
                int best = kMinusInf;
                std::uint32_t best1 = 0, best2 = 0;
                for (std::uint32_t t1 = t;; t1 = (t1 - 1) & t) {
                    int left = value[idx(nd.child[0], t1)];
                    if (left > kMinusInf) {
                        std::uint32_t need = t & ~t1;
                        for (std::uint32_t extra = t1;; extra = (extra - 1) & t1) {
                            std::uint32_t t2 = need | extra;
                            int right = value[idx(nd.child[1], t2)];
                            if (right > kMinusInf && left + right > best) {
                                bool ok = true;
                                for (std::uint32_t scan = t1; scan && ok;) {
                                    int c = std::countr_zero(scan);
                                    scan &= scan - 1;
                                    if (t2 & ~consistent[c]) ok = false;
                                }
                                if (ok) {
                                    best = left + right;
                                    best1 = t1;
                                    best2 = t2;
                                }
                            }
                            if (extra == 0) break;
                        }
                    }
                    if (t1 == 0) break;
                }
                if (best > kMinusInf) {
                    value[idx(node, t)] = best;
                    how[idx(node, t)] = How::parallel;
                    split1[idx(node, t)] = best1;
                    split2[idx(node, t)] = best2;
                }
            }
        }
    }

    VertexSet reconstruct(int node, std::uint32_t mask) const {
        switch (how[idx(node, mask)]) {
            case How::leaf_empty:
                return {};
            case How::leaf_take:
                return {tree.nodes[node].vertex};
            case How::shortcut:
                return clean(node_subset(node, mask));
            case How::series_left:
                return reconstruct(tree.nodes[node].child[0], mask);
            case How::series_right:
                return reconstruct(tree.nodes[node].child[1], mask);
            case How::parallel: {
                VertexSet l = reconstruct(tree.nodes[node].child[0], split1[idx(node, mask)]);
                VertexSet r = reconstruct(tree.nodes[node].child[1], split2[idx(node, mask)]);
                return set_union(l, r);
            }
            case How::none:
                break;
        }
        throw std::logic_error("solve_cograph_modulator: reconstructing an infeasible entry");
    }
};

std::vector<std::uint32_t> required_pairs_over(const Graph& g, const VertexSet& xset) {
    std::vector<std::uint32_t> pairs;
    for (int i = 0; i < static_cast<int>(xset.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(xset.size()); ++j) {
            if (g.adjacent(xset[i], xset[j])) continue;
            bool common = false;
            for (int z : xset)
                if (z != xset[i] && z != xset[j] && g.adjacent(z, xset[i]) && g.adjacent(z, xset[j])) {
                    common = true;
                    break;
                }
            if (!common) pairs.push_back((std::uint32_t(1) << i) | (std::uint32_t(1) << j));
        }
    return pairs;
}

}  // namespace

SolveResult solve_cograph_modulator(const Graph& g, const VertexSet& x, int jobs) {
    auto start = Clock::now();
    const int n = g.num_vertices();
    if (!is_sorted_set(x) || (!x.empty() && (x.front() < 0 || x.back() >= n)))
        throw std::invalid_argument("solve_cograph_modulator: modulator not a sorted vertex set");
    if (x.size() > 4)
        throw budget_error("solve_cograph_modulator: modulator larger than the supported cap of 4");

    VertexSet all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    VertexSet rest = set_difference(all, x);
    auto sub = induce(g, rest);

    Cotree tree;
    try {
        tree = build_cotree(sub.graph);
    } catch (const not_a_cograph& e) {
        throw modulator_error("solve_cograph_modulator: graph minus modulator contains an induced P4");
    }
    for (auto& node : tree.nodes) {  // back to original ids
        if (node.vertex >= 0) node.vertex = sub.id_map[node.vertex];
        for (int& v : node.vertices) v = sub.id_map[v];
        std::sort(node.vertices.begin(), node.vertices.end());
    }

    std::mutex best_mutex;
    SolveResult result;
    bool found = false;
    std::atomic<std::uint32_t> cursor{0};
    std::atomic<std::int64_t> table_entries{0};
    const std::uint32_t guesses = std::uint32_t(1) << x.size();

    auto worker = [&]() {
        for (;;) {
            std::uint32_t guess = cursor.fetch_add(1);
            if (guess >= guesses) return;

            VertexSet X;
            for (int i = 0; i < static_cast<int>(x.size()); ++i)
                if ((guess >> i) & 1) X.push_back(x[i]);

            // twin classes of the cograph part w.r.t. X
            std::vector<int> xpos(n, -1);
            for (int i = 0; i < static_cast<int>(X.size()); ++i) xpos[X[i]] = i;
            std::map<std::uint32_t, int> index_of;
            std::vector<int> class_of(n, -1);
            std::vector<std::uint32_t> sigs;
            for (int v : rest) {
                std::uint32_t s = 0;
                for (int w : g.neighbors(v))
                    if (xpos[w] >= 0) s |= std::uint32_t(1) << xpos[w];
                auto [it, inserted] = index_of.try_emplace(s, static_cast<int>(sigs.size()));
                if (inserted) sigs.push_back(s);
                class_of[v] = it->second;
            }
            const int p = static_cast<int>(sigs.size());
            if (p > 16) throw budget_error("solve_cograph_modulator: too many twin classes");

            CographGuess dp{g, tree, X};
            dp.p = p;
            dp.class_of = std::move(class_of);
            dp.sig = sigs;
            dp.xnbr.assign(X.size(), 0);
            for (int i = 0; i < static_cast<int>(X.size()); ++i)
                for (int j = 0; j < static_cast<int>(X.size()); ++j)
                    if (i != j && g.adjacent(X[i], X[j])) dp.xnbr[i] |= std::uint32_t(1) << j;
            dp.consistent.assign(p, 0);
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b)
                    if (sigs[a] & sigs[b]) dp.consistent[a] |= std::uint32_t(1) << b;

            const std::size_t states = static_cast<std::size_t>(tree.nodes.size()) << p;
            dp.value.assign(std::max<std::size_t>(states, 1), kMinusInf);
            dp.how.assign(std::max<std::size_t>(states, 1), CographGuess::How::none);
            dp.split1.assign(std::max<std::size_t>(states, 1), 0);
            dp.split2.assign(std::max<std::size_t>(states, 1), 0);
            table_entries += static_cast<std::int64_t>(states);

            for (int node = 0; node < static_cast<int>(tree.nodes.size()); ++node) dp.compute_node(node);

            auto required = required_pairs_over(g, X);
            int best_gamma = kMinusInf;
            std::uint32_t best_mask = 0;
            if (tree.root < 0) {
                if (required.empty()) best_gamma = 0;
            } else {
                for (std::uint32_t t = 0; t < (std::uint32_t(1) << p); ++t) {
                    int val = dp.value[dp.idx(tree.root, t)];
                    if (val == kMinusInf || val <= best_gamma) continue;
                    bool ok = true;
                    for (std::uint32_t pair : required) {
                        bool covered = false;
                        for (std::uint32_t scan = t; scan && !covered;) {
                            int c = std::countr_zero(scan);
                            scan &= scan - 1;
                            covered = (sigs[c] & pair) == pair;
                        }
                        if (!covered) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        best_gamma = val;
                        best_mask = t;
                    }
                }
            }
            if (best_gamma == kMinusInf) continue;

            VertexSet witness(X);
            if (tree.root >= 0 && best_gamma > 0) {
                VertexSet l = dp.reconstruct(tree.root, best_mask);
                witness = set_union(witness, l);
            }
            int total = static_cast<int>(X.size()) + best_gamma;
            if (static_cast<int>(witness.size()) != total)
                throw std::logic_error("solve_cograph_modulator: witness size mismatch");

            std::lock_guard<std::mutex> lock(best_mutex);
            if (!found || total > result.size) {
                found = true;
                result.size = total;
                result.best = std::move(witness);
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (!verify_s_club(g, 2, result.best))
        throw std::logic_error("solve_cograph_modulator: witness failed verification");
    result.stats.table_entries = table_entries;
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

}  // namespace twoclub
