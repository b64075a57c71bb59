#include <doctest.h>

#include <sstream>

#include "cdslab/errors.hpp"
#include "cdslab/text_io.hpp"

using namespace cdslab;

TEST_SUITE("text_io") {

TEST_CASE("matrix text round-trips") {
    const F2Matrix m = parse_matrix("\n  0110\n1011\n1100\n0100\n");
    CHECK(m.rows() == 4);
    CHECK(format_matrix(m) == "0110\n1011\n1100\n0100\n");
    CHECK(parse_matrix(format_matrix(m)) == m);
}

TEST_CASE("a blank line ends a matrix read from a stream") {
    std::istringstream in("01\n10\n\n11\n00\n");
    CHECK(read_matrix(in) == F2Matrix::from_rows({"01", "10"}));
    CHECK(read_matrix(in) == F2Matrix::from_rows({"11", "00"}));
}

TEST_CASE("malformed matrices are rejected") {
    CHECK_THROWS_AS(parse_matrix("012\n"), ContractViolation);
    CHECK_THROWS_AS(parse_matrix("01\n1\n"), ContractViolation);
    CHECK_THROWS_AS(parse_matrix(""), ContractViolation);
}

TEST_CASE("graph edge lists with arbitrary roots") {
    const RootedGraph g = parse_graph("4 2 3\n1 2\n3 4\n");
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK(format_graph(g) == "4 1 4\n1 2\n3 4\n");
    CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("graphs may also be given as matrices") {
    CHECK(parse_graph("010\n101\n010\n").edge_count() == 2);
    CHECK_THROWS_AS(parse_graph("011\n101\n010\n"), ContractViolation);
    CHECK_THROWS_AS(parse_graph("3 1 3\n1 4\n"), ContractViolation);
    CHECK_THROWS_AS(parse_graph("3 1 1\n"), ContractViolation);
    CHECK_THROWS_AS(parse_graph("3 1\n"), ContractViolation);
}

}  // TEST_SUITE
