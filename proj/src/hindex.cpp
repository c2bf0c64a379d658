#include "twoclub/hindex.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "twoclub/errors.hpp"
#include "twoclub/structparams.hpp"

namespace twoclub {

namespace {

using Clock = std::chrono::steady_clock;

struct HIndexSearch {
    const Graph& g;
    int n;
    VertexSet x_guess;  // X = X' & S, fixed per outer branch
    SolveResult best;
    std::int64_t candidates = 0;

    std::vector<int> dist_in(int source, const std::vector<char>& alive) const {
        std::vector<int> dist(n, kUnreachable);
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

    // Exhaustively remove alive vertices at distance > 2 from a committed
    // vertex; false when that would remove a committed vertex.
    bool clean(std::vector<char>& alive, const std::vector<char>& committed) const {
        for (;;) {
            std::vector<char> drop(n, 0);
            for (int p = 0; p < n; ++p) {
                if (!alive[p] || !committed[p]) continue;
                auto dist = dist_in(p, alive);
                for (int v = 0; v < n; ++v)
                    if (alive[v] && dist[v] > 2) drop[v] = 1;
            }
            bool changed = false;
            for (int v = 0; v < n; ++v)
                if (drop[v]) {
                    if (committed[v]) return false;
                    alive[v] = 0;
                    changed = true;
                }
            if (!changed) return true;
        }
    }

    int alive_count(const std::vector<char>& alive) const {
        int c = 0;
        for (int v = 0; v < n; ++v) c += alive[v];
        return c;
    }

    void record(const std::vector<char>& alive) {
        ++candidates;
        VertexSet cand;
        for (int v = 0; v < n; ++v)
            if (alive[v]) cand.push_back(v);
        if (!verify_s_club(g, 2, cand))
            throw std::logic_error("solve_hindex_xp: candidate failed the 2-club check");
        if (static_cast<int>(cand.size()) > best.size) {
            best.size = static_cast<int>(cand.size());
            best.best = std::move(cand);
        }
    }

    // Recursively process the conflicted classes: enumerate each class's
    // surviving vertices within the center's distance-4 ball off X.
    void process_conflicts(std::vector<char> alive, std::vector<char> committed,
                           const std::vector<std::vector<int>>& class_members,
                           const std::vector<int>& centers,
                           const std::vector<int>& conflicted, std::size_t pos) {
        if (alive_count(alive) <= best.size) return;
        if (pos == conflicted.size()) {
            record(alive);
            return;
        }
        int ci = conflicted[pos];
        int center = centers[ci];
        if (!alive[center]) return;  // cannot happen: centers are committed

        std::vector<char> off_x(alive);
        for (int v : x_guess) off_x[v] = 0;
        auto dist = dist_in(center, off_x);

        VertexSet in_ball, outside;
        for (int v : class_members[ci]) {
            if (!alive[v] || v == center) continue;
            if (dist[v] <= 4)
                in_ball.push_back(v);
            else
                outside.push_back(v);
        }

        if (in_ball.size() > 25)
            throw budget_error("solve_hindex_xp: conflicted class has too many ball vertices");

        // every subset of the ball, always keeping the center
        for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << in_ball.size()); ++sub) {
            std::vector<char> next_alive(alive);
            std::vector<char> next_committed(committed);
            for (int v : outside) next_alive[v] = 0;
            for (std::size_t i = 0; i < in_ball.size(); ++i) {
                if ((sub >> i) & 1)
                    next_committed[in_ball[i]] = 1;
                else
                    next_alive[in_ball[i]] = 0;
            }
            if (!clean(next_alive, next_committed)) continue;
            process_conflicts(std::move(next_alive), std::move(next_committed), class_members,
                              centers, conflicted, pos + 1);
        }
    }

    // Enumerate a center (or emptiness) for every twin class.
    void assign_centers(const std::vector<char>& alive, const std::vector<char>& committed,
                        const std::vector<std::uint32_t>& class_sig,
                        const std::vector<std::vector<int>>& class_members) {
        const int p = static_cast<int>(class_sig.size());
        std::vector<int> choice(p, -1);  // -1 = class empty, otherwise member index
        for (;;) {
            // apply the current assignment
            std::vector<char> a(alive);
            std::vector<char> c(committed);
            std::vector<int> centers(p, -1);
            for (int i = 0; i < p; ++i) {
                if (choice[i] < 0) {
                    for (int v : class_members[i]) a[v] = 0;
                } else {
                    centers[i] = class_members[i][choice[i]];
                    c[centers[i]] = 1;
                }
            }
            bool viable = true;
            for (int i = 0; i < p && viable; ++i)
                if (centers[i] >= 0 && !a[centers[i]]) viable = false;
            if (viable && clean(a, c) && alive_count(a) > best.size) {
                std::vector<int> surviving;
                for (int i = 0; i < p; ++i)
                    if (centers[i] >= 0) surviving.push_back(i);
                std::vector<int> conflicted;
                for (int i : surviving) {
                    bool conf = false;
                    for (int j : surviving)
                        if ((class_sig[i] & class_sig[j]) == 0) conf = true;
                    if (conf) conflicted.push_back(i);
                }
                process_conflicts(std::move(a), std::move(c), class_members, centers, conflicted, 0);
            }

            // next assignment: none first, then members by ascending id
            int idx = p - 1;
            while (idx >= 0) {
                if (choice[idx] + 1 < static_cast<int>(class_members[idx].size())) {
                    ++choice[idx];
                    break;
                }
                choice[idx] = -1;
                --idx;
            }
            if (idx < 0) break;
        }
    }
};

}  // namespace

SolveResult solve_hindex_xp(const Graph& g, int cap) {
    auto start = Clock::now();
    const int n = g.num_vertices();
    const int k = degree_stats(g).h_index;
    if (k > cap)
        throw budget_error("solve_hindex_xp: h-index " + std::to_string(k) +
                           " exceeds the cap of " + std::to_string(cap));

    SolveResult result;
    if (n == 0) return result;

    VertexSet high_degree;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > k) high_degree.push_back(v);

    HIndexSearch search{g, n, {}, {}, 0};

    // guesses of X = X' & S by increasing size, then numeric order
    std::vector<std::uint32_t> guesses;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << high_degree.size()); ++m) guesses.push_back(m);
    std::stable_sort(guesses.begin(), guesses.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    for (std::uint32_t guess : guesses) {
        VertexSet X;
        std::vector<char> alive(n, 1);
        std::vector<char> committed(n, 0);
        for (int i = 0; i < static_cast<int>(high_degree.size()); ++i) {
            if ((guess >> i) & 1) {
                X.push_back(high_degree[i]);
                committed[high_degree[i]] = 1;
            } else {
                alive[high_degree[i]] = 0;
            }
        }
        search.x_guess = X;
        if (!search.clean(alive, committed)) continue;

        // twin classes of the remaining non-X vertices w.r.t. X
        std::vector<int> xpos(n, -1);
        for (int i = 0; i < static_cast<int>(X.size()); ++i) xpos[X[i]] = i;
        std::map<std::uint32_t, int> index_of;
        std::vector<std::uint32_t> class_sig;
        std::vector<std::vector<int>> class_members;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || xpos[v] >= 0) continue;
            std::uint32_t sig = 0;
            for (int w : g.neighbors(v))
                if (alive[w] && xpos[w] >= 0) sig |= std::uint32_t(1) << xpos[w];
            auto [it, inserted] = index_of.try_emplace(sig, static_cast<int>(class_sig.size()));
            if (inserted) {
                class_sig.push_back(sig);
                class_members.emplace_back();
            }
            class_members[it->second].push_back(v);
        }
        search.assign_centers(alive, committed, class_sig, class_members);
    }

    result = std::move(search.best);
    result.stats.branch_nodes = search.candidates;
    result.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return result;
}

}  // namespace twoclub
