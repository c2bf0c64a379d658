#include <doctest.h>

#include <random>
#include <stdexcept>

#include "twoclub/errors.hpp"

#include "test_support.hpp"
#include "twoclub/exact.hpp"

using namespace twoclub;
using namespace twoclub::testing;

TEST_CASE("oracle_max_2club") {
    CHECK(oracle_max_2club(complete_graph(5)).size == 5);
    CHECK(oracle_max_2club(cycle_graph(5)).size == 5);  // C5 has diameter two
    CHECK(oracle_max_2club(path_graph(5)).size == 3);
    CHECK(oracle_max_2club(Graph(0, {})).size == 0);

    auto r = oracle_max_2club(petersen_graph());
    CHECK(r.size == 10);
    CHECK(verify_s_club(petersen_graph(), 2, r.best));
}

TEST_CASE("dual_branching basics") {
    auto pet = dual_branching(petersen_graph(), 2, 0);
    CHECK(pet.size == 10);
    CHECK(pet.stats.branch_nodes == 1);  // the root is already feasible

    CHECK(dual_branching(path_graph(4), 2, 0).size == 3);
    CHECK(dual_branching(path_graph(4), 2, 3).size == 3);  // honest lower bound keeps the witness

    SUBCASE("decision-style lower bound above the optimum yields empty") {
        auto r = dual_branching(path_graph(4), 2, 4);
        CHECK(r.size == 0);
        CHECK(r.best.empty());
    }

    SUBCASE("s = 3 on a path") {
        CHECK(dual_branching(path_graph(4), 3, 0).size == 4);
        CHECK(dual_branching(path_graph(6), 3, 0).size == 4);
    }
}

TEST_CASE("dual_branching agrees with the oracle") {
    std::mt19937 rng(14001);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(6 + trial % 7, 0.3, rng);
        auto oracle = oracle_max_2club(g);
        auto lower = heuristic_ball(g, 2);
        auto dual = dual_branching(g, 2, lower.size);
        CHECK(dual.size == oracle.size);
        CHECK(verify_s_club(g, 2, dual.best));

        // empirical reflection of the 2^{n - ell} bound
        const int n = g.num_vertices();
        CHECK(dual.stats.branch_nodes <= (std::int64_t(1) << (n - dual.size + 1)));
    }
}

TEST_CASE("turing_kernel_solve") {
    Graph k4_plus_k3 = cluster_graph({4, 3});
    auto inner = [](const Graph& sub) { return dual_branching(sub, 2, 0); };
    CHECK(turing_kernel_solve(k4_plus_k3, inner).size == 4);
    CHECK(turing_kernel_solve(star_graph(6), inner).size == 7);

    std::mt19937 rng(14002);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = erdos_renyi(10, 0.25, rng);
        auto direct = dual_branching(g, 2, 0);
        auto kernel = turing_kernel_solve(g, inner);
        CHECK(kernel.size == direct.size);
        CHECK(verify_s_club(g, 2, kernel.best));
    }

    SUBCASE("parallel workers find the same size") {
        Graph g = erdos_renyi(11, 0.3, rng);
        CHECK(turing_kernel_solve(g, inner, 4).size == turing_kernel_solve(g, inner).size);
    }
}

TEST_CASE("heuristic_ball") {
    CHECK(heuristic_ball(star_graph(5), 2).size == 6);
    CHECK(heuristic_ball(cycle_graph(6), 2).size == 3);
    CHECK(heuristic_ball(path_graph(6), 3).size == 3);

    std::mt19937 rng(14003);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(9, 0.35, rng);
        auto h = heuristic_ball(g, 2);
        CHECK(verify_s_club(g, 2, h.best));
        auto exact = oracle_max_2club(g);
        CHECK(h.size <= exact.size);
        int max_degree = 0;
        for (int v = 0; v < 9; ++v) max_degree = std::max(max_degree, g.degree(v));
        CHECK(exact.size >= max_degree + 1);
    }
}

TEST_CASE("complement_has_triangle") {
    CHECK_FALSE(complement_has_triangle(complete_graph(5)));
    CHECK_FALSE(complement_has_triangle(cycle_graph(5)));  // alpha(C5) = 2
    CHECK(complement_has_triangle(Graph(3, {})));          // empty graph: alpha = 3
    CHECK(complement_has_triangle(path_graph(5)));
}

TEST_CASE("independence2_solve") {
    auto complete = independence2_solve(complete_graph(6), 2);
    CHECK(complete.size == 6);

    auto c5 = independence2_solve(cycle_graph(5), 2);
    CHECK(c5.size == oracle_max_2club(cycle_graph(5)).size);
    CHECK(verify_s_club(cycle_graph(5), 2, c5.best));

    // complement of a perfect matching on 8 vertices has diameter two
    Graph matching(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    Graph cocktail = complement(matching);
    CHECK(independence2_solve(cocktail, 2).size == 8);

    CHECK_THROWS_AS(independence2_solve(path_graph(5), 2), std::invalid_argument);

    SUBCASE("matches dual branching on complements of triangle-free graphs") {
        std::mt19937 rng(14004);
        for (int trial = 0; trial < 25; ++trial) {
            Graph tf = random_triangle_free(6 + trial % 10, 0.4, rng);
            Graph g = complement(tf);
            auto fast = independence2_solve(g, 2);
            auto slow = dual_branching(g, 2, heuristic_ball(g, 2).size);
            CHECK(fast.size == slow.size);
        }
    }

    SUBCASE("two disjoint cliques: alpha is two, answer is the larger clique") {
        Graph g = cluster_graph({4, 2});
        CHECK(independence2_solve(g, 2).size == 4);
    }
}
