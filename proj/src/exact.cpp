#include "twoclub/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "twoclub/errors.hpp"

namespace twoclub {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Bits {
    static bool get(const std::vector<std::uint64_t>& b, int i) {
        return (b[i >> 6] >> (i & 63)) & 1;
    }
    static void clear(std::vector<std::uint64_t>& b, int i) { b[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    static void set(std::vector<std::uint64_t>& b, int i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }
    static int count(const std::vector<std::uint64_t>& b) {
        int c = 0;
        for (auto w : b) c += std::popcount(w);
        return c;
    }
};

VertexSet bits_to_set(const std::vector<std::uint64_t>& b, int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (Bits::get(b, v)) s.push_back(v);
    return s;
}

// Search state for dual_branching: iterative deepening on the number of
// deleted vertices. The budget-r tree has at most 2^r - 1 branching nodes, so
// the total over budgets 0..(n - opt) stays below 2^(n - opt + 1).
struct DualSearch {
    const BitRows& rows;
    int n;
    int words;
    int s;
    std::vector<std::uint64_t> alive;
    std::vector<std::uint64_t> best_set;
    std::int64_t branch_nodes = 0;

    // s-step closed reach of u inside the alive set
    void reach(int u, std::vector<std::uint64_t>& out, std::vector<std::uint64_t>& frontier,
               std::vector<std::uint64_t>& next) const {
        for (int w = 0; w < words; ++w) out[w] = 0;
        Bits::set(out, u);
        for (int w = 0; w < words; ++w) frontier[w] = out[w];
        for (int step = 0; step < s; ++step) {
            for (int w = 0; w < words; ++w) next[w] = 0;
            bool any = false;
            for (int base = 0; base < words; ++base) {
                std::uint64_t bitsw = frontier[base];
                while (bitsw) {
                    int v = base * 64 + std::countr_zero(bitsw);
                    bitsw &= bitsw - 1;
                    const std::uint64_t* row = rows.row(v);
                    for (int w = 0; w < words; ++w) next[w] |= row[w];
                    any = true;
                }
            }
            if (!any) break;
            for (int w = 0; w < words; ++w) {
                next[w] &= alive[w];
                frontier[w] = next[w] & ~out[w];
                out[w] |= next[w];
            }
        }
    }

    // true once a set with no violating pair is reached within the budget
    bool search(int budget) {
        // the violating pair (distance > s) with maximum combined degree,
        // ties broken by smallest (u, v)
        std::vector<int> deg(n, 0);
        for (int v = 0; v < n; ++v)
            if (Bits::get(alive, v)) {
                const std::uint64_t* row = rows.row(v);
                int d = -1;  // closed row counts v itself
                for (int w = 0; w < words; ++w) d += std::popcount(row[w] & alive[w]);
                deg[v] = d;
            }

        int best_u = -1, best_v = -1, best_deg = -1;
        std::vector<std::uint64_t> r(words), frontier(words), next(words);
        for (int u = 0; u < n; ++u) {
            if (!Bits::get(alive, u)) continue;
            reach(u, r, frontier, next);
            for (int w = 0; w < words; ++w) {
                std::uint64_t missing = alive[w] & ~r[w];
                while (missing) {
                    int v = w * 64 + std::countr_zero(missing);
                    missing &= missing - 1;
                    if (v <= u) continue;  // each pair once
                    int d = deg[u] + deg[v];
                    if (d > best_deg) {
                        best_deg = d;
                        best_u = u;
                        best_v = v;
                    }
                }
            }
        }

        if (best_u == -1) {  // diameter <= s: feasible
            best_set = alive;
            return true;
        }
        if (budget == 0) return false;

        ++branch_nodes;
        for (int del : {best_u, best_v}) {
            Bits::clear(alive, del);
            bool done = search(budget - 1);
            Bits::set(alive, del);
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

SolveResult oracle_max_2club(const Graph& g) {
    auto start = Clock::now();
    const int n = g.num_vertices();
    SolveResult result;
    if (n == 0) {
        result.stats.elapsed_ms = ms_since(start);
        return result;
    }

    std::vector<VertexSet> balls(n);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) {
        balls[v] = ball(g, v, 2);
        if (balls[v].size() > 64)
            throw budget_error("oracle_max_2club: distance-2 ball with " +
                               std::to_string(balls[v].size()) + " vertices exceeds 64");
        order[v] = v;
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return balls[a].size() > balls[b].size(); });

    for (int v : order) {
        const VertexSet& b = balls[v];
        const int bn = static_cast<int>(b.size());
        if (bn <= result.size) break;  // balls are sorted by size

        // local ids: v first so that bit 0 is always set
        VertexSet local(b);
        std::swap(local[0], *std::find(local.begin(), local.end(), v));
        std::vector<std::uint64_t> crow(bn, 0);
        for (int i = 0; i < bn; ++i) {
            crow[i] |= std::uint64_t(1) << i;
            for (int j = 0; j < bn; ++j)
                if (g.adjacent(local[i], local[j])) crow[i] |= std::uint64_t(1) << j;
        }

        const std::uint64_t limit = (bn == 1) ? 1 : (std::uint64_t(1) << (bn - 1));
        for (std::uint64_t h = limit; h-- > 0;) {
            std::uint64_t sub = (h << 1) | 1;  // subsets of the ball containing v
            if (std::popcount(sub) <= result.size) continue;
            bool ok = true;
            for (std::uint64_t scan = sub; scan && ok;) {
                int i = std::countr_zero(scan);
                scan &= scan - 1;
                std::uint64_t r1 = crow[i] & sub;
                std::uint64_t acc = r1;
                for (std::uint64_t inner = r1; inner;) {
                    int j = std::countr_zero(inner);
                    inner &= inner - 1;
                    acc |= crow[j];
                }
                if ((acc & sub) != sub) ok = false;
            }
            if (ok) {
                result.size = std::popcount(sub);
                result.best.clear();
                for (int i = 0; i < bn; ++i)
                    if ((sub >> i) & 1) result.best.push_back(local[i]);
                std::sort(result.best.begin(), result.best.end());
                if (result.size == bn) break;  // whole ball taken, nothing larger here
            }
        }
    }
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

SolveResult dual_branching(const Graph& g, int s, int lower_bound) {
    if (s < 2) throw std::invalid_argument("dual_branching: s must be >= 2");
    auto start = Clock::now();
    const int n = g.num_vertices();
    SolveResult result;
    if (n == 0) {
        result.stats.elapsed_ms = ms_since(start);
        return result;
    }

    BitRows rows(g);
    DualSearch search{rows, n, rows.words, s, std::vector<std::uint64_t>(rows.words, 0), {}};
    for (int v = 0; v < n; ++v) Bits::set(search.alive, v);

    // Deepen the deletion budget until a feasible set appears; the first hit
    // is a maximum s-club. Budgets that cannot beat lower_bound - 1 are not
    // explored, so a dishonest lower bound yields an empty result.
    search.branch_nodes = 1;  // the root is always expanded
    for (int budget = 0; budget < n; ++budget) {
        if (n - budget < lower_bound) break;
        if (search.search(budget)) break;
    }

    if (!search.best_set.empty()) {
        result.best = bits_to_set(search.best_set, n);
        result.size = static_cast<int>(result.best.size());
    }
    result.stats.branch_nodes = search.branch_nodes;
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

SolveResult turing_kernel_solve(const Graph& g, const InnerSolver& inner, int jobs) {
    auto start = Clock::now();
    const int n = g.num_vertices();
    SolveResult result;
    if (n == 0) {
        result.stats.elapsed_ms = ms_since(start);
        return result;
    }

    std::vector<VertexSet> balls(n);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) {
        balls[v] = ball(g, v, 2);
        order[v] = v;
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return balls[a].size() > balls[b].size(); });

    std::mutex best_mutex;
    std::atomic<int> best_size{0};
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::int64_t> branch_nodes{0}, table_entries{0};
    VertexSet best;

    auto worker = [&]() {
        for (;;) {
            std::size_t idx = cursor.fetch_add(1);
            if (idx >= balls.size()) return;
            const VertexSet& b = balls[order[idx]];
            if (static_cast<int>(b.size()) <= best_size.load()) continue;
            auto sub = induce(g, b);
            SolveResult r = inner(sub.graph);
            branch_nodes += r.stats.branch_nodes;
            table_entries += r.stats.table_entries;
            VertexSet mapped;
            mapped.reserve(r.best.size());
            for (int local : r.best) mapped.push_back(sub.id_map[local]);
            std::sort(mapped.begin(), mapped.end());
            std::lock_guard<std::mutex> lock(best_mutex);
            if (static_cast<int>(mapped.size()) > static_cast<int>(best.size())) {
                best = std::move(mapped);
                best_size = static_cast<int>(best.size());
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

    result.best = std::move(best);
    result.size = static_cast<int>(result.best.size());
    result.stats.branch_nodes = branch_nodes;
    result.stats.table_entries = table_entries;
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

SolveResult heuristic_ball(const Graph& g, int s) {
    if (s < 2) throw std::invalid_argument("heuristic_ball: s must be >= 2");
    auto start = Clock::now();
    SolveResult result;
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexSet b = ball(g, v, s / 2);
        if (static_cast<int>(b.size()) > result.size) {
            result.size = static_cast<int>(b.size());
            result.best = std::move(b);
        }
    }
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

bool complement_has_triangle(const Graph& g) {
    const int n = g.num_vertices();
    if (n < 3) return false;
    BitRows rows(g);
    const int words = rows.words;
    std::vector<std::uint64_t> full(words, 0);
    for (int v = 0; v < n; ++v) full[v >> 6] |= std::uint64_t(1) << (v & 63);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            // closed rows contain u and v, so the complement excludes them
            for (int w = 0; w < words; ++w)
                if (~(rows.row(u)[w] | rows.row(v)[w]) & full[w]) return true;
        }
    return false;
}

SolveResult independence2_solve(const Graph& g, int s) {
    if (s < 2) throw std::invalid_argument("independence2_solve: s must be >= 2");
    if (complement_has_triangle(g))
        throw std::invalid_argument("independence2_solve: maximum independent set exceeds two");
    auto start = Clock::now();
    const int n = g.num_vertices();
    SolveResult result;
    if (n == 0) {
        result.stats.elapsed_ms = ms_since(start);
        return result;
    }

    VertexSet all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    if (n == 1 || verify_s_club(g, s, all)) {  // diameter <= s: everything
        result.best = std::move(all);
        result.size = n;
        result.stats.elapsed_ms = ms_since(start);
        return result;
    }

    // BFS restricted to an alive mask
    auto restricted_dist = [&](int source, const std::vector<char>& alive) {
        std::vector<int> dist(n, kUnreachable);
        std::vector<int> queue;
        dist[source] = 0;
        queue.push_back(source);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u))
                if (alive[w] && dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    };

    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            std::vector<char> alive(n, 1);
            for (int w : g.neighbors(v))
                if (w == u || g.adjacent(u, w)) alive[w] = 0;  // N(v) & N[u]
            auto dist_v = restricted_dist(v, alive);
            VertexSet cand;
            for (int w = 0; w < n; ++w) {
                if (!alive[w]) continue;
                bool in_ballv = w == v || g.adjacent(v, w);
                bool in_u_part = alive[u] && g.adjacent(u, w) && dist_v[w] <= s;
                if (in_ballv || in_u_part) cand.push_back(w);
            }
            if (!verify_s_club(g, s, cand))
                throw std::logic_error("independence2_solve: candidate failed verification");
            if (static_cast<int>(cand.size()) > result.size) {
                result.size = static_cast<int>(cand.size());
                result.best = std::move(cand);
            }
        }
    }
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

}  // namespace twoclub
