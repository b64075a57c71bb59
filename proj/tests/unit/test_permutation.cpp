#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cdslab/errors.hpp"
#include "cdslab/oracle.hpp"
#include "cdslab/permutation.hpp"
#include "golden.hpp"

using namespace cdslab;

namespace {

std::vector<Permutation> all_of_size(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_SUITE("permutation") {

TEST_CASE("construction validates") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), ContractViolation);
    CHECK_THROWS_AS(Permutation({0, 1}), ContractViolation);
    CHECK_THROWS_AS(Permutation({1, 3}), ContractViolation);
    const Permutation pi({3, 2, 5, 1, 4});
    CHECK(pi.at(1) == 3);
    CHECK(pi.position(0) == 0);
    CHECK(pi.position(1) == 4);
    CHECK(pi.position(6) == 6);
    CHECK(pi.to_string() == "[3,2,5,1,4]");
    CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("parsing accepts brackets, commas and spaces") {
    CHECK(parse_permutation("[3,2,5,1,4]") == Permutation({3, 2, 5, 1, 4}));
    CHECK(parse_permutation("  3 2 5 1 4\n") == Permutation({3, 2, 5, 1, 4}));
    CHECK(parse_permutation("[ 2, 1 ]") == Permutation({2, 1}));
    CHECK_THROWS_AS(parse_permutation("[3,x]"), ContractViolation);
    CHECK_THROWS_AS(parse_permutation("[1,2"), ContractViolation);
}

TEST_CASE("block interchange of the list example") {
    // [8,3,1,4,6,5,2,9,7] with [3,1,4] and [5,2] interchanged; the moved blocks keep their internal order.
    const Permutation pi({8, 3, 1, 4, 6, 5, 2, 9, 7});
    CHECK(block_interchange(pi, {2, 4}, {6, 7}) == Permutation({8, 5, 2, 6, 3, 1, 4, 9, 7}));
    CHECK_THROWS_AS(block_interchange(pi, {2, 6}, {5, 7}), ContractViolation);
}

TEST_CASE("cds on [3,2,5,1,4] with pointers (1,2) and (4,5)") {
    const Permutation pi({3, 2, 5, 1, 4});
    REQUIRE(is_cds_context(pi, Pointer{1}, Pointer{4}));
    CHECK(apply_cds(pi, Pointer{1}, Pointer{4}) == Permutation({3, 4, 5, 1, 2}));
    CHECK(apply_cds(pi, Pointer{4}, Pointer{1}) == Permutation({3, 4, 5, 1, 2}));
    CHECK_THROWS_AS(apply_cds(pi, Pointer{0}, Pointer{4}), InvalidMove);
    CHECK_THROWS_AS(apply_cds(pi, Pointer{2}, Pointer{2}), InvalidMove);
}

TEST_CASE("cds matches the token-splicing reference on all permutations up to 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : all_of_size(n))
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n; ++q) {
                    const auto ref = oracle::cds_reference(pi, p, q);
                    const bool valid = p != q && is_cds_context(pi, Pointer{p}, Pointer{q});
                    REQUIRE(valid == ref.has_value());
                    if (valid) REQUIRE(apply_cds(pi, Pointer{p}, Pointer{q}) == *ref);
                }
}

TEST_CASE("cycle notation examples") {
    CHECK(cycle_notation(Permutation({5, 3, 1, 6, 2, 7, 4})).to_string() == "(0 3 7 4)(1 6 2 5)");
    CHECK(cycle_notation(Permutation({3, 2, 5, 1, 4})).to_string() == "(0 5 4 2)(1 3)");
    CHECK(cycle_notation(Permutation::identity(3)).to_string() == "(0)(1)(2)(3)");
}

TEST_CASE("cycle graph edges") {
    const CycleGraph g = cycle_graph(Permutation({5, 3, 1, 6, 2, 7, 4}));
    CHECK(g.black_edges.size() == 8);
    CHECK(g.gray_edges.size() == 8);
    CHECK(std::find(g.gray_edges.begin(), g.gray_edges.end(), std::pair{8, 4}) != g.gray_edges.end());
    CHECK(std::find(g.gray_edges.begin(), g.gray_edges.end(), std::pair{5, 0}) != g.gray_edges.end());
}

TEST_CASE("strategic pile") {
    const StrategicPile sp = strategic_pile(Permutation({3, 2, 5, 1, 4}));
    CHECK(sp.ordered == std::vector<int>{4, 2});
    CHECK(sp.to_string() == "(4,2)");
    CHECK(sp.as_set() == std::vector<int>{2, 4});
    CHECK(strategic_pile(Permutation({4, 5, 2, 6, 1, 7, 3, 8})).empty());
    CHECK(strategic_pile(Permutation::identity(5)).empty());
}

TEST_CASE("pile criterion matches exhaustive search up to 7") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& pi : all_of_size(n)) REQUIRE(is_cds_sortable(pi) == oracle::cds_sortable_bruteforce(pi));
}

TEST_CASE("sorting sequence sorts") {
    const Permutation pi({4, 5, 2, 6, 1, 7, 3, 8});
    const auto moves = cds_sort_sequence(pi);
    REQUIRE(moves.has_value());
    Permutation cur = pi;
    for (const auto& [p, q] : *moves) cur = apply_cds(cur, p, q);
    CHECK(cur.is_identity());
    CHECK(moves->size() == 3);
    CHECK_FALSE(cds_sort_sequence(Permutation({3, 2, 5, 1, 4})).has_value());
}

TEST_CASE("overlap graph of the worked example") {
    const RootedGraph g = overlap_graph(Permutation({4, 5, 2, 6, 1, 7, 3, 8}));
    CHECK(g.adjacency() == test_support::golden_matrix("a_pi3.txt"));
}

TEST_CASE("overlap graph matches a direct interleaving scan up to 7") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& pi : all_of_size(n)) REQUIRE(overlap_graph(pi).adjacency() == oracle::overlap_reference(pi));
}

TEST_CASE("precedence matrix of the worked example") {
    CHECK(precedence_matrix(Permutation({4, 5, 2, 6, 1, 7, 3, 8})) == test_support::golden_matrix("p_pi3.txt"));
}

TEST_CASE("alternating cycles and pile vector lie in the central kernel") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : all_of_size(n)) {
            const F2Matrix cent = central_submatrix(overlap_graph(pi).adjacency(), CentralMode::rows);
            for (const auto& c : alternating_cycles(pi)) REQUIRE((cent * c).is_zero());
            REQUIRE((cent * strategic_pile_vector(pi)).is_zero());
        }
}

}  // TEST_SUITE
