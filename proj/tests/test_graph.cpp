#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mscp/graph.hpp"
#include "support.hpp"

using mscp::DimacsError;
using mscp::Graph;

TEST_CASE("graph constructor normalizes the edge list") {
    Graph g(5, {{3, 1}, {1, 3}, {0, 4}, {4, 0}, {2, 3}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 3);  // duplicates and reversals collapse
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 4}, {1, 3}, {2, 3}});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK(!g.has_edge(0, 1));
    CHECK(g.degree(3) == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.neighbors(3) == std::vector<int>{1, 2});
    CHECK(g.max_degree() == 2);
}

TEST_CASE("graph constructor rejects bad endpoints") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);   // self-loop
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(Graph(3, {{-1, 1}}), std::invalid_argument);
}

TEST_CASE("degree stats summarize the graph") {
    Graph g = testsupport::four_cycle();
    auto stats = mscp::degree_stats(g);
    CHECK(stats.max_degree == 2);
    CHECK(stats.edge_count == 4);
}

TEST_CASE("parser reads a well-formed col stream") {
    std::istringstream in(
        "c sample instance\n"
        "c\n"
        "p edge 4 4\n"
        "e 1 2\n"
        "e 1 4\n"
        "e 2 3\n"
        "e 3 4\n");
    Graph g = mscp::parse_dimacs(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
}

TEST_CASE("parser tolerates blank lines and CRLF endings") {
    std::istringstream in("c head\r\n\np edge 2 1\r\n\ne 1 2\r\n");
    Graph g = mscp::parse_dimacs(in);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parser does not trust the declared edge count") {
    // declares 9 but lists a duplicate and a reversal; the real count wins
    std::istringstream in("p edge 3 9\ne 1 2\ne 2 1\ne 1 2\ne 2 3\n");
    Graph g = mscp::parse_dimacs(in);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parser reports offending line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            mscp::parse_dimacs(in);
        } catch (const DimacsError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("e 1 2\n") == 1);                          // edge before p
    CHECK(line_of("p edge 3 1\np edge 3 1\n") == 2);         // second p line
    CHECK(line_of("p edge 3 1\ne 1 4\n") == 2);              // endpoint out of range
    CHECK(line_of("p edge 3 1\ne 2 2\n") == 2);              // self-loop
    CHECK(line_of("p edge 3 1\ne one 2\n") == 2);            // malformed token
    CHECK(line_of("c x\np clique 3 1\n") == 2);              // wrong p format
    CHECK(line_of("p edge -3 1\n") == 1);                    // bad vertex count
    CHECK(line_of("x 1 2\n") == 1);                          // unknown line type
}

TEST_CASE("parser rejects a stream with no problem line") {
    std::istringstream in("c nothing else\n");
    CHECK_THROWS_AS(mscp::parse_dimacs(in), DimacsError);
}

TEST_CASE("writer and parser round-trip") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testsupport::random_gnp(1 + static_cast<int>(gen() % 12), 0.4, gen);
        std::ostringstream out;
        mscp::write_dimacs(g, out);
        std::istringstream in(out.str());
        Graph back = mscp::parse_dimacs(in);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("bundled instances match their published sizes") {
    struct Row {
        const char* name;
        int v, e;
    };
    // V and E columns of the benchmark table for the bundled files
    const Row rows[] = {
        {"myciel3", 11, 20},   {"myciel4", 23, 71},   {"myciel5", 47, 236},
        {"myciel6", 95, 755},  {"myciel7", 191, 2360}, {"queen5.5", 25, 160},
        {"queen6.6", 36, 290}, {"queen7.7", 49, 476}, {"queen8.8", 64, 728},
        {"jean", 80, 254},     {"dsjc125.1", 125, 736},
    };
    for (const auto& row : rows) {
        CAPTURE(row.name);
        Graph g = mscp::parse_dimacs_file(testsupport::instance_path(row.name));
        CHECK(g.vertex_count() == row.v);
        CHECK(g.edge_count() == row.e);
    }
}

TEST_CASE("parse_dimacs_file reports missing files") {
    CHECK_THROWS_AS(mscp::parse_dimacs_file("definitely/not/here.col"), std::runtime_error);
}
