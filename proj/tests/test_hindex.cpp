#include <doctest.h>

#include <random>
#include <stdexcept>

#include "twoclub/errors.hpp"

#include "test_support.hpp"
#include "twoclub/exact.hpp"
#include "twoclub/hindex.hpp"
#include "twoclub/structparams.hpp"

using namespace twoclub;
using namespace twoclub::testing;

TEST_CASE("solve_hindex_xp basics") {
    auto star = solve_hindex_xp(star_graph(6));  // h-index 1
    CHECK(star.size == 7);

    auto c5 = solve_hindex_xp(cycle_graph(5));  // h-index 2
    CHECK(c5.size == 5);  // C5 has diameter two
    auto c6 = solve_hindex_xp(cycle_graph(6));
    CHECK(c6.size == 3);
    CHECK(verify_s_club(cycle_graph(5), 2, c5.best));

    CHECK(solve_hindex_xp(Graph(3, {})).size == 1);
    CHECK(solve_hindex_xp(Graph(0, {})).size == 0);
    CHECK(solve_hindex_xp(path_graph(2)).size == 2);
}

TEST_CASE("solve_hindex_xp rejects large h-index") {
    CHECK_THROWS_AS(solve_hindex_xp(complete_graph(6)), budget_error);
    CHECK(solve_hindex_xp(complete_graph(6), 5).size == 6);  // raised cap
}

TEST_CASE("solve_hindex_xp equals the oracle on sparse random graphs") {
    std::mt19937 rng(17001);
    int solved = 0;
    for (int trial = 0; trial < 200 && solved < 40; ++trial) {
        Graph g = erdos_renyi(6 + trial % 7, 0.18, rng);
        if (degree_stats(g).h_index > 2) continue;
        ++solved;
        auto xp = solve_hindex_xp(g);
        auto oracle = oracle_max_2club(g);
        CHECK(xp.size == oracle.size);
        CHECK(verify_s_club(g, 2, xp.best));
    }
    CHECK(solved >= 20);  // the sparse corpus has plenty of h <= 2 graphs
}

TEST_CASE("cycles of every length") {
    for (int n = 3; n <= 9; ++n) {
        Graph g = cycle_graph(n);
        auto xp = solve_hindex_xp(g);
        CHECK(xp.size == oracle_max_2club(g).size);
    }
}
