#include "twoclub/modsolve.hpp"

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

#include "twoclub/errors.hpp"
#include "twoclub/structparams.hpp"

namespace twoclub {

namespace {

using Clock = std::chrono::steady_clock;
constexpr int kMinusInf = std::numeric_limits<int>::min() / 2;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<int> restricted_bfs(const Graph& g, int source, const std::vector<char>& alive) {
    std::vector<int> dist(g.num_vertices(), kUnreachable);
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
}

// Twin classes of alive vertices outside xprime, with signatures expressed as
// bitmasks over the positions of xprime.
struct MaskedClasses {
    std::vector<std::uint32_t> sig;            // per class
    std::vector<std::vector<int>> members;     // per class
    std::vector<int> class_of;                 // per vertex, -1 if not classified
};

MaskedClasses masked_twin_classes(const Graph& g, const std::vector<char>& alive, const VertexSet& xprime) {
    MaskedClasses out;
    out.class_of.assign(g.num_vertices(), -1);
    std::vector<int> xpos(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(xprime.size()); ++i) xpos[xprime[i]] = i;

    std::map<std::uint32_t, int> index_of;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!alive[v] || xpos[v] >= 0) continue;
        std::uint32_t sig = 0;
        for (int w : g.neighbors(v))
            if (xpos[w] >= 0) sig |= std::uint32_t(1) << xpos[w];
        auto [it, inserted] = index_of.try_emplace(sig, static_cast<int>(out.sig.size()));
        if (inserted) {
            out.sig.push_back(sig);
            out.members.emplace_back();
        }
        out.class_of[v] = it->second;
        out.members[it->second].push_back(v);
    }
    return out;
}

// X'-pairs at distance > 2 through X' alone; each needs a selected class
// adjacent to both endpoints.
std::vector<std::uint32_t> required_xprime_pairs(const Graph& g, const VertexSet& xprime) {
    std::vector<std::uint32_t> pairs;
    const int k = static_cast<int>(xprime.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (g.adjacent(xprime[i], xprime[j])) continue;
            bool common = false;
            for (int z : xprime)
                if (z != xprime[i] && z != xprime[j] && g.adjacent(z, xprime[i]) &&
                    g.adjacent(z, xprime[j])) {
                    common = true;
                    break;
                }
            if (!common) pairs.push_back((std::uint32_t(1) << i) | (std::uint32_t(1) << j));
        }
    return pairs;
}

struct ClusterGuessOutcome {
    int value = kMinusInf;  // |X'| + DP value
    VertexSet witness;
    std::int64_t table_entries = 0;
};

ClusterGuessOutcome solve_cluster_guess(const Graph& g, const VertexSet& x, std::uint32_t guess) {
    const int n = g.num_vertices();
    ClusterGuessOutcome out;

    VertexSet xprime;
    for (int i = 0; i < static_cast<int>(x.size()); ++i)
        if ((guess >> i) & 1) xprime.push_back(x[i]);

    std::vector<char> alive(n, 1);
    for (int i = 0; i < static_cast<int>(x.size()); ++i)
        if (!((guess >> i) & 1)) alive[x[i]] = 0;

    // one cleaning pass: outside vertices must be within distance two of every
    // X' member in g - (x \ X')
    std::vector<char> in_xprime(n, 0);
    for (int v : xprime) in_xprime[v] = 1;
    {
        std::vector<char> keep(alive);
        for (int xv : xprime) {
            auto dist = restricted_bfs(g, xv, alive);
            for (int v = 0; v < n; ++v)
                if (alive[v] && !in_xprime[v] && dist[v] > 2) keep[v] = 0;
        }
        alive = std::move(keep);
    }

    MaskedClasses classes = masked_twin_classes(g, alive, xprime);
    const int p = static_cast<int>(classes.sig.size());
    if (p > 20) throw budget_error("solve_cluster_modulator: too many twin classes");

    // clusters of the remaining cluster graph
    std::vector<std::vector<int>> clusters;
    {
        std::vector<char> seen(n, 0);
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || in_xprime[v] || seen[v]) continue;
            std::vector<int> comp, stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (int w : g.neighbors(u))
                    if (alive[w] && !in_xprime[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            clusters.push_back(std::move(comp));
        }
        std::sort(clusters.begin(), clusters.end());
    }
    const int q = static_cast<int>(clusters.size());

    const std::uint32_t nmasks = std::uint32_t(1) << p;
    std::vector<std::uint32_t> conflict_with(p, 0);  // classes with disjoint X'-signature
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if ((classes.sig[i] & classes.sig[j]) == 0) conflict_with[i] |= std::uint32_t(1) << j;

    std::vector<std::uint32_t> xnbr(xprime.size(), 0);  // X'-internal adjacency
    for (int i = 0; i < static_cast<int>(xprime.size()); ++i)
        for (int j = 0; j < static_cast<int>(xprime.size()); ++j)
            if (i != j && g.adjacent(xprime[i], xprime[j])) xnbr[i] |= std::uint32_t(1) << j;

    // s(i, T): size of C_i^T when C_i realizes exactly the classes of T and
    // every non-adjacent (vertex of C_i^T, X' member) pair has a common
    // neighbor in C_i^T or X'; -inf otherwise, 0 for T = empty.
    auto cluster_value = [&](int ci, std::uint32_t tmask) -> int {
        if (tmask == 0) return 0;
        std::uint32_t realized = 0;
        int count = 0;
        for (int v : clusters[ci]) {
            int c = classes.class_of[v];
            if ((tmask >> c) & 1) {
                realized |= std::uint32_t(1) << c;
                ++count;
            }
        }
        if (realized != tmask) return kMinusInf;
        for (int xi = 0; xi < static_cast<int>(xprime.size()); ++xi) {
            bool some_adjacent = false;
            for (std::uint32_t t = tmask; t;) {
                int c = std::countr_zero(t);
                t &= t - 1;
                if ((classes.sig[c] >> xi) & 1) {
                    some_adjacent = true;
                    break;
                }
            }
            if (some_adjacent) continue;  // that member covers all pairs with xprime[xi]
            for (std::uint32_t t = tmask; t;) {
                int c = std::countr_zero(t);
                t &= t - 1;
                if ((classes.sig[c] & xnbr[xi]) == 0) return kMinusInf;
            }
        }
        return count;
    };

    // realizable classes per cluster, to keep the T'' enumeration tight
    std::vector<std::uint32_t> realized_mask(q, 0);
    for (int ci = 0; ci < q; ++ci)
        for (int v : clusters[ci]) realized_mask[ci] |= std::uint32_t(1) << classes.class_of[v];

    std::vector<int> table(static_cast<std::size_t>(q + 1) << p, kMinusInf);
    std::vector<std::uint32_t> back_tpp(static_cast<std::size_t>(q + 1) << p, 0);
    std::vector<std::uint32_t> back_tilde(static_cast<std::size_t>(q + 1) << p, 0);
    out.table_entries = static_cast<std::int64_t>(table.size());
    auto cell = [&](int i, std::uint32_t t) -> int& { return table[(std::size_t(i) << p) | t]; };

    cell(0, 0) = 0;
    for (int i = 1; i <= q; ++i) {
        // T'' ranges over feasible class subsets of cluster i, T-tilde over
        // finite prefix entries without a conflicting pair across the two
        std::uint32_t rm = realized_mask[i - 1];
        for (std::uint32_t tpp = rm;; tpp = (tpp - 1) & rm) {
            int sval = cluster_value(i - 1, tpp);
            if (sval != kMinusInf) {
                std::uint32_t confmask = 0;
                for (std::uint32_t t = tpp; t;) {
                    int c = std::countr_zero(t);
                    t &= t - 1;
                    confmask |= conflict_with[c];
                }
                for (std::uint32_t tilde = 0; tilde < nmasks; ++tilde) {
                    int prev = cell(i - 1, tilde);
                    if (prev == kMinusInf || (tilde & confmask)) continue;
                    std::uint32_t target = tilde | tpp;
                    if (prev + sval > cell(i, target)) {
                        cell(i, target) = prev + sval;
                        back_tpp[(std::size_t(i) << p) | target] = tpp;
                        back_tilde[(std::size_t(i) << p) | target] = tilde;
                    }
                }
            }
            if (tpp == 0) break;
        }
    }

    auto required_pairs = required_xprime_pairs(g, xprime);
    int best_value = kMinusInf;
    std::uint32_t best_mask = 0;
    for (std::uint32_t t = 0; t < nmasks; ++t) {
        if (cell(q, t) == kMinusInf) continue;
        bool ok = true;
        for (std::uint32_t pair : required_pairs) {
            bool covered = false;
            for (std::uint32_t scan = t; scan && !covered;) {
                int c = std::countr_zero(scan);
                scan &= scan - 1;
                covered = (classes.sig[c] & pair) == pair;
            }
            if (!covered) {
                ok = false;
                break;
            }
        }
        if (ok && static_cast<int>(xprime.size()) + cell(q, t) > best_value) {
            best_value = static_cast<int>(xprime.size()) + cell(q, t);
            best_mask = t;
        }
    }
    if (best_value == kMinusInf) return out;

    // walk the back-pointers, collecting each cluster's contribution
    VertexSet witness(xprime);
    std::uint32_t t = best_mask;
    for (int i = q; i >= 1; --i) {
        std::uint32_t tpp = back_tpp[(std::size_t(i) << p) | t];
        for (int v : clusters[i - 1])
            if ((tpp >> classes.class_of[v]) & 1) witness.push_back(v);
        t = back_tilde[(std::size_t(i) << p) | t];
    }
    std::sort(witness.begin(), witness.end());
    if (static_cast<int>(witness.size()) != best_value)
        throw std::logic_error("solve_cluster_modulator: witness size mismatch");

    out.value = best_value;
    out.witness = std::move(witness);
    return out;
}

}  // namespace

SolveResult solve_cluster_modulator(const Graph& g, const VertexSet& x, int jobs) {
    auto start = Clock::now();
    if (!is_valid_modulator(g, ModulatorTarget::cluster, x))
        throw modulator_error("solve_cluster_modulator: graph minus modulator contains an induced P3");
    if (x.size() > 4)
        throw budget_error("solve_cluster_modulator: modulator larger than the supported cap of 4");

    const std::uint32_t guesses = std::uint32_t(1) << x.size();
    std::mutex best_mutex;
    SolveResult result;
    std::atomic<std::uint32_t> cursor{0};
    std::atomic<std::int64_t> table_entries{0};

    auto worker = [&]() {
        for (;;) {
            std::uint32_t guess = cursor.fetch_add(1);
            if (guess >= guesses) return;
            ClusterGuessOutcome outcome = solve_cluster_guess(g, x, guess);
            table_entries += outcome.table_entries;
            if (outcome.value == kMinusInf) continue;
            std::lock_guard<std::mutex> lock(best_mutex);
            if (outcome.value > result.size) {
                result.size = outcome.value;
                result.best = std::move(outcome.witness);
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
        throw std::logic_error("solve_cluster_modulator: reconstructed witness failed verification");
    result.stats.table_entries = table_entries;
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

SolveResult vertex_cover_routine(const Graph& g, const VertexSet& x) {
    auto start = Clock::now();
    const int n = g.num_vertices();
    std::vector<char> in_x(n, 0);
    for (int v : x) in_x[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!in_x[v])
            for (int w : g.neighbors(v))
                if (!in_x[w]) throw std::invalid_argument("vertex_cover_routine: g - x has an edge");

    SolveResult result;
    if (n >= 1) {  // a singleton is always a 2-club; class subsets below never produce one
        result.best = {0};
        result.size = 1;
    }

    for (std::uint32_t guess = 0; guess < (std::uint32_t(1) << x.size()); ++guess) {
        VertexSet xprime;
        for (int i = 0; i < static_cast<int>(x.size()); ++i)
            if ((guess >> i) & 1) xprime.push_back(x[i]);
        std::vector<char> alive(n, 1);
        for (int i = 0; i < static_cast<int>(x.size()); ++i)
            if (!((guess >> i) & 1)) alive[x[i]] = 0;

        MaskedClasses classes = masked_twin_classes(g, alive, xprime);
        const int p = static_cast<int>(classes.sig.size());
        if (p > 20) throw budget_error("vertex_cover_routine: too many twin classes");

        std::vector<std::uint32_t> xnbr(xprime.size(), 0);
        for (int i = 0; i < static_cast<int>(xprime.size()); ++i)
            for (int j = 0; j < static_cast<int>(xprime.size()); ++j)
                if (i != j && g.adjacent(xprime[i], xprime[j])) xnbr[i] |= std::uint32_t(1) << j;

        // class-level feasibility: every X' member outside the signature must
        // share an X' neighbor with the class
        std::vector<char> class_ok(p, 1);
        std::vector<std::uint32_t> compat(p, 0);
        for (int c = 0; c < p; ++c) {
            for (int xi = 0; xi < static_cast<int>(xprime.size()); ++xi)
                if (!((classes.sig[c] >> xi) & 1) && (classes.sig[c] & xnbr[xi]) == 0) class_ok[c] = 0;
            if (classes.members[c].size() >= 2 && classes.sig[c] == 0) class_ok[c] = 0;
            for (int d = 0; d < p; ++d)
                if (classes.sig[c] & classes.sig[d]) compat[c] |= std::uint32_t(1) << d;
        }

        auto required_pairs = required_xprime_pairs(g, xprime);

        for (std::uint32_t sel = 0; sel < (std::uint32_t(1) << p); ++sel) {
            bool ok = true;
            int total = static_cast<int>(xprime.size());
            for (std::uint32_t scan = sel; scan && ok;) {
                int c = std::countr_zero(scan);
                scan &= scan - 1;
                if (!class_ok[c] || (sel & ~compat[c] & ~(std::uint32_t(1) << c))) ok = false;
                total += static_cast<int>(classes.members[c].size());
            }
            if (!ok || total <= result.size) continue;
            for (std::uint32_t pair : required_pairs) {
                bool covered = false;
                for (std::uint32_t scan = sel; scan && !covered;) {
                    int c = std::countr_zero(scan);
                    scan &= scan - 1;
                    covered = (classes.sig[c] & pair) == pair;
                }
                if (!covered) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            VertexSet witness(xprime);
            for (std::uint32_t scan = sel; scan;) {
                int c = std::countr_zero(scan);
                scan &= scan - 1;
                witness.insert(witness.end(), classes.members[c].begin(), classes.members[c].end());
            }
            std::sort(witness.begin(), witness.end());
            result.best = std::move(witness);
            result.size = total;
        }
    }

    if (!verify_s_club(g, 2, result.best))
        throw std::logic_error("vertex_cover_routine: witness failed verification");
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

DecisionResult solve_cocluster_modulator(const Graph& g, const VertexSet& x, int ell) {
    auto start = Clock::now();
    const int n = g.num_vertices();
    VertexSet all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    VertexSet rest = set_difference(all, x);

    auto sub = induce(g, rest);
    if (find_induced_p3(complement(sub.graph)).has_value())
        throw modulator_error("solve_cocluster_modulator: graph minus modulator is not a co-cluster graph");

    DecisionResult decision;
    if (sub.graph.num_edges() == 0) {
        // x is a vertex cover
        SolveResult r = vertex_cover_routine(g, x);
        decision.stats = r.stats;
        if (r.size >= ell) {
            decision.yes = true;
            decision.witness = std::move(r.best);
        }
    } else if (ell <= n - static_cast<int>(x.size())) {
        // connected co-cluster remainders have diameter at most two
        decision.yes = true;
        decision.witness = rest;
    } else {
        SolveResult r = dual_branching(g, 2, ell - 1);
        decision.stats = r.stats;
        if (r.size >= ell) {
            decision.yes = true;
            decision.witness = std::move(r.best);
        }
    }

    if (decision.yes && !verify_s_club(g, 2, decision.witness))
        throw std::logic_error("solve_cocluster_modulator: witness failed verification");
    decision.stats.elapsed_ms = ms_since(start);
    return decision;
}

}  // namespace twoclub
