#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "test_support.hpp"
#include "twoclub/io.hpp"

using namespace twoclub;
using namespace twoclub::testing;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("twoclub_io_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("edge list parsing") {
    SUBCASE("with header") {
        Graph g = parse_edge_list("3 2\n0 1\n1 2\n");
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 2);
    }

    SUBCASE("header admits isolated vertices") {
        Graph g = parse_edge_list("5 1\n0 1\n");
        CHECK(g.num_vertices() == 5);
    }

    SUBCASE("without header the ids determine n") {
        Graph g = parse_edge_list("0 1\n1 2\n2 3\n");
        CHECK(g.num_vertices() == 4);
        CHECK(g.num_edges() == 3);
    }

    SUBCASE("comments and blanks") {
        Graph g = parse_edge_list("# a triangle\n3 3\n0 1\n1 2 # last two\n0 2\n\n");
        CHECK(g.num_edges() == 3);
    }

    SUBCASE("garbage is rejected") {
        CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_edge_list("a b\n"), std::invalid_argument);
    }
}

TEST_CASE("dimacs parsing") {
    Graph g = parse_dimacs("c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 5\n"), std::invalid_argument);
}

TEST_CASE("graph file round trip") {
    std::mt19937 rng(18001);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = erdos_renyi(9, 0.4, rng);
        std::string serialized = format_edge_list(g);
        Graph back = parse_edge_list(serialized);
        CHECK(back.num_vertices() == g.num_vertices());
        CHECK(back.edge_list() == g.edge_list());
    }
}

TEST_CASE("vertex list files") {
    TempFile f("sol", "3\n1\n\n# comment\n7\n");
    VertexSet s = read_vertex_list(f.path);
    CHECK(s == VertexSet{1, 3, 7});
}

TEST_CASE("max2sat files") {
    TempFile f("formula", "# two clauses\np 2 2 1\n1 2\n-1 2\n");
    Max2SatFormula formula = read_max2sat(f.path);
    CHECK(formula.num_vars == 2);
    CHECK(formula.k == 1);
    REQUIRE(formula.clauses.size() == 2);
    CHECK(formula.clauses[0] == std::pair<int, int>{1, 2});

    std::string serialized = format_max2sat(formula);
    TempFile f2("formula2", serialized);
    Max2SatFormula back = read_max2sat(f2.path);
    CHECK(back.clauses == formula.clauses);
    CHECK(back.k == formula.k);
}

TEST_CASE("colors files") {
    TempFile f("colors", "0 1\n1 2\n2 1\n");
    auto colors = read_colors(f.path, 3);
    CHECK(colors == std::vector<int>{1, 2, 1});
    TempFile missing("colors_missing", "0 1\n");
    CHECK_THROWS_AS(read_colors(missing.path, 2), std::invalid_argument);
}

TEST_CASE("report json shape") {
    RunReport report;
    report.input = "x.edges";
    report.n = 5;
    report.m = 4;
    report.algorithm = "dual";
    report.size = 3;
    report.witness = {0, 1, 2};
    report.verified = true;
    report.stats.branch_nodes = 7;
    std::string json = report_to_json(report);
    CHECK(json.find("\"report_version\": 1") != std::string::npos);
    CHECK(json.find("\"branch_nodes\": 7") != std::string::npos);
    CHECK(json.find("\"verified\": true") != std::string::npos);
}
