#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cdslab/convert.hpp"
#include "cdslab/errors.hpp"
#include "cdslab/oracle.hpp"
#include "cdslab/permutation.hpp"
#include "golden.hpp"

using namespace cdslab;
using test_support::golden_matrix;

TEST_SUITE("convert") {

TEST_CASE("Z, F and S on the 4x4 example") {
    const F2Matrix in = golden_matrix("zfs_input.txt");
    CHECK(z_embed(in) == golden_matrix("z_example.txt"));
    CHECK(f_transform(in) == golden_matrix("f_example.txt"));
    CHECK(s_prefix(in) == golden_matrix("s_example.txt"));
}

TEST_CASE("B matrix") {
    CHECK(b_matrix(5) == F2Matrix::from_rows({"11000", "01100", "00110", "00011", "00001"}));
}

TEST_CASE("prefix sums across word boundaries") {
    F2Matrix m(150, 150);
    m.set(0, 0, true);
    m.set(1, 70, true);
    const F2Matrix s = s_prefix(m);
    CHECK(s.row(0).popcount() == 150);
    CHECK(s.get(1, 69));
    CHECK_FALSE(s.get(1, 70));
    CHECK(s.get(1, 149) == false);
    CHECK(s.row(149) == s.row(1));
    CHECK_THROWS_AS(s_prefix(F2Matrix(3, 4)), ContractViolation);
}

TEST_CASE("worked example converts both ways") {
    const F2Matrix a = golden_matrix("a_pi3.txt");
    const F2Matrix p = golden_matrix("p_pi3.txt");
    CHECK(adjacency_to_precedence(a) == p);
    CHECK(precedence_to_adjacency(p) == a);
}

TEST_CASE("conversion preconditions") {
    CHECK_THROWS_AS(adjacency_to_precedence(F2Matrix::from_rows({"01", "00"})), ContractViolation);
    CHECK_THROWS_AS(precedence_to_adjacency(F2Matrix(2, 2)), ContractViolation);
}

TEST_CASE("central precedence membership and inversion") {
    std::vector<int> v{1, 2, 3, 4, 5};
    do {
        const Permutation pi(v);
        const F2Matrix full = precedence_matrix(pi);
        const F2Matrix c = full.submatrix(1, 6, 1, 6);
        REQUIRE(is_central_precedence(c));
        REQUIRE(permutation_from_central_precedence(c) == pi);
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK_FALSE(is_central_precedence(F2Matrix::from_rows({"011", "001", "100"})));
    CHECK_FALSE(permutation_from_central_precedence(F2Matrix::from_rows({"11", "00"})).has_value());
}

TEST_CASE("move graph of the worked example is realizable") {
    const Permutation pi({4, 5, 2, 6, 1, 7, 3, 8});
    const MoveGraphInstance m = move_graph(pi);
    CHECK(m.adjacency() == golden_matrix("cent_rc.txt"));
    CHECK(m.permutation_size() == 8);
    const auto w = realize_labeled_move_graph(m);
    REQUIRE(w.has_value());
    CHECK(realizes(*w, m));
}

TEST_CASE("realization agrees with the n! scan on every instance with four rows or fewer") {
    for (std::size_t k = 1; k <= 4; ++k) {
        const std::size_t pairs = k * (k - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            F2Matrix a(k, k);
            std::size_t bit = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j, ++bit)
                    if (mask >> bit & 1U) {
                        a.set(i, j, true);
                        a.set(j, i, true);
                    }
            const MoveGraphInstance inst(a);
            const auto fast = realize_labeled_move_graph(inst);
            const auto slow = oracle::realizable_bruteforce(inst);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) REQUIRE(realizes(*fast, inst));
        }
    }
}

TEST_CASE("the unrealizable golden instance") {
    const MoveGraphInstance inst(golden_matrix("unrealizable_move_graph.txt"));
    CHECK_FALSE(realize_labeled_move_graph(inst).has_value());
    CHECK_FALSE(oracle::realizable_bruteforce(inst).has_value());
}

}  // TEST_SUITE
