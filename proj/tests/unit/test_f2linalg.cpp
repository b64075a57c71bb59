#include <doctest.h>

#include <random>

#include "cdslab/errors.hpp"
#include "cdslab/f2linalg.hpp"
#include "cdslab/oracle.hpp"
#include "golden.hpp"

using namespace cdslab;
using test_support::golden_matrix;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
    return m;
}

F2Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool b = rng() & 1U;
            m.set(i, j, b);
            m.set(j, i, b);
        }
    return m;
}

}  // namespace

TEST_SUITE("f2linalg") {

TEST_CASE("vector basics") {
    F2Vector v = F2Vector::from_string("10110");
    CHECK(v.size() == 5);
    CHECK(v.popcount() == 3);
    CHECK(v.to_string() == "10110");
    CHECK(v.dot(F2Vector::from_string("10010")) == false);
    CHECK(v.dot(F2Vector::from_string("00010")) == true);
    v += F2Vector::from_string("10110");
    CHECK(v.is_zero());
    CHECK(F2Vector::ones(70).popcount() == 70);
    CHECK(F2Vector::unit(130, 129).get(129));
    CHECK_THROWS_AS(F2Vector::from_string("102"), ContractViolation);
    CHECK_THROWS_AS(F2Vector(3) + F2Vector(4), ContractViolation);
}

TEST_CASE("ones complement flips every bit") {
    CHECK(ones_complement(F2Vector::from_string("0110")).to_string() == "1001");
    CHECK(ones_complement(F2Vector(100)).popcount() == 100);
}

TEST_CASE("matrix construction and shape errors") {
    const F2Matrix m = F2Matrix::from_rows({"101", "011"});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.transpose().to_string() == "10\n01\n11");
    CHECK_THROWS_AS(F2Matrix::from_rows({"10", "1"}), ContractViolation);
    CHECK_THROWS_AS(m * m, ContractViolation);
    CHECK((F2Matrix::identity(3) * m.transpose()) == m.transpose());
}

TEST_CASE("central submatrices of the worked example") {
    const F2Matrix a = golden_matrix("a_pi3.txt");
    CHECK(central_submatrix(a, CentralMode::rows) == golden_matrix("cent_r.txt"));
    CHECK(central_submatrix(a, CentralMode::cols) == golden_matrix("cent_c.txt"));
    CHECK(central_submatrix(a, CentralMode::both) == golden_matrix("cent_rc.txt"));
    CHECK_THROWS_AS(central_submatrix(F2Matrix(1, 1), CentralMode::rows), ContractViolation);
}

TEST_CASE("rank agrees with an independent elimination") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 20, c = 1 + rng() % 20;
        const F2Matrix m = random_matrix(rng, r, c);
        REQUIRE(rank(m) == oracle::rank_reference(m));
        CHECK(rank(m) == rank(m.transpose()));
    }
    CHECK(rank(F2Matrix::identity(130)) == 130);
    CHECK(rank(F2Matrix(5, 9)) == 0);
}

TEST_CASE("kernel basis spans the null space") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        const F2Matrix m = random_matrix(rng, r, c);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == c - rank(m));
        F2Matrix stacked(basis.size(), c);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK((m * basis[i]).is_zero());
            stacked.set_row(i, basis[i]);
        }
        CHECK(rank(stacked) == basis.size());
    }
}

TEST_CASE("solve_linear finds solutions exactly when they exist") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        const F2Matrix m = random_matrix(rng, r, c);
        F2Vector b(r);
        for (std::size_t i = 0; i < r; ++i) b.set(i, rng() & 1U);
        bool exists = false;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << c) && !exists; ++x) {
            F2Vector v(c);
            for (std::size_t j = 0; j < c; ++j) v.set(j, x >> j & 1U);
            exists = (m * v) == b;
        }
        const auto sol = solve_linear(m, b);
        CHECK(sol.has_value() == exists);
        if (sol) CHECK((m * *sol) == b);
    }
}

TEST_CASE("mcds equals M + M I_pq M") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 10;
        const F2Matrix m = random_symmetric(rng, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (!is_valid_mcds_move(m, p, q)) {
                    CHECK_THROWS_AS(mcds(m, p, q), InvalidMove);
                    continue;
                }
                F2Matrix ipq(n, n);
                ipq.set(p, q, true);
                ipq.set(q, p, true);
                const F2Matrix expected = m + m * ipq * m;
                const F2Matrix got = mcds(m, p, q);
                CHECK(got == expected);
                CHECK(got.is_symmetric());
                CHECK(got.is_zero_diagonal());
                CHECK(rank(got) + 2 == rank(m));
            }
    }
}

TEST_CASE("mcds rejects diagonal and zero pivots") {
    const F2Matrix m = F2Matrix::from_rows({"010", "101", "010"});
    CHECK_THROWS_AS(mcds(m, 1, 1), InvalidMove);
    CHECK_THROWS_AS(mcds(m, 0, 2), InvalidMove);
    CHECK_THROWS_AS(mcds(m, 0, 3), ContractViolation);
    CHECK(mcds(m, 0, 1).is_zero());
}

TEST_CASE("sortability and distance of the worked example") {
    const F2Matrix a = golden_matrix("a_pi3.txt");
    CHECK(is_mcds_sortable(a));
    CHECK(rank(a) == 6);
    CHECK(mcds_distance(a) == 3);
    CHECK_FALSE(is_mcds_sortable(F2Matrix::from_rows({"011", "101", "110"})));
    CHECK(is_mcds_sortable(F2Matrix(4, 4)));
}

}  // TEST_SUITE
