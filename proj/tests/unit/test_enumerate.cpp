#include <doctest.h>

#include "cdslab/enumerate.hpp"
#include "cdslab/errors.hpp"
#include "cdslab/oracle.hpp"

using namespace cdslab;

TEST_SUITE("enumerate") {

TEST_CASE("general counts reproduce the published table") {
    const char* sortable[] = {"1", "17", "113", "7729", "224689", "61562033", "7309130417", "8013328398001"};
    const char* total[] = {"8", "64", "1024", "32768", "2097152", "268435456", "68719476736", "35184372088832"};
    const char* ratio[] = {".125", ".266", ".110", ".236", ".107", ".229", ".106", ".228"};
    for (std::size_t n = 3; n <= 10; ++n) {
        const CountReport r = count_sortable(n, false);
        CHECK(r.count.get_str() == sortable[n - 3]);
        CHECK(r.total.get_str() == total[n - 3]);
        CHECK(format_ratio(r.ratio, 3) == ratio[n - 3]);
        CHECK(count_sortable_rank_sum(n, false).count == r.count);
    }
}

TEST_CASE("printed Eulerian formula reproduces its column") {
    const char* eulerian[] = {"1", "5", "29", "365", "7565", "259533", "16766541", "1695913805"};
    for (std::size_t n = 3; n <= 10; ++n) CHECK(count_sortable(n, true).count.get_str() == eulerian[n - 3]);
}

TEST_CASE("printed Eulerian formula and rank sum part ways at six vertices") {
    for (std::size_t n = 3; n <= 40; ++n) {
        const mpz_class printed = count_sortable(n, true).count;
        const mpz_class ranksum = count_sortable_rank_sum(n, true).count;
        CHECK((printed == ranksum) == (n <= 5));
    }
}

TEST_CASE("Eulerian rank sum at six vertices") {
    // 1 + 4*35 + 16*28
    CHECK(count_sortable_rank_sum(6, true).count == 589);
}

TEST_CASE("brute-force census, both columns") {
    const std::uint64_t sortable[] = {1, 17, 113, 7729};
    const std::uint64_t eulerian[] = {1, 5, 29, 589};
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto c = oracle::census_serial(n);
        CHECK(c.sortable == sortable[n - 3]);
        CHECK(c.eulerian_sortable == eulerian[n - 3]);
        CHECK(c == oracle::census_parallel(n));
        CHECK(mpz_class(c.sortable) == count_sortable_rank_sum(n, false).count);
        CHECK(mpz_class(c.eulerian_sortable) == count_sortable_rank_sum(n, true).count);
    }
}

TEST_CASE("MacWilliams N0 against enumeration") {
    for (std::size_t t = 0; t <= 5; ++t) {
        mpz_class sum = 0;
        for (std::size_t r = 0; r <= t; ++r) {
            CHECK(macwilliams_count(t, r) == oracle::n0_bruteforce(t, r));
            sum += macwilliams_count(t, r);
        }
        CHECK(sum == total_rooted_graphs(t + 2) / (mpz_class(1) << static_cast<unsigned>(2 * t + 1)));
    }
    CHECK(macwilliams_count(3, 2) == 7);
    CHECK(macwilliams_count(4, 2) == 35);
    CHECK(macwilliams_count(4, 4) == 28);
    CHECK(macwilliams_count(5, 3) == 0);
}

TEST_CASE("block construction is sortable and Eulerian with complementary borders") {
    const F2Matrix a = F2Matrix::from_rows({"010", "101", "010"});
    const F2Vector u = F2Vector::from_string("110");
    const F2Matrix b = block_construct(a, u, ones_complement(u));
    CHECK(b.rows() == 5);
    CHECK(b.is_symmetric());
    CHECK(b.is_zero_diagonal());
    CHECK(b.is_eulerian_rows());
    CHECK(is_mcds_sortable(b));
    CHECK(b.submatrix(1, 4, 1, 4) == a);
}

TEST_CASE("extension counts") {
    const F2Matrix a = F2Matrix::from_rows({"01", "10"});
    CHECK(sortable_extensions_count(a, false) == 16);
    CHECK(sortable_extensions_count(a, true) == 4);
    CHECK(sortable_extensions_count(F2Matrix(3, 3), false) == 1);
}

TEST_CASE("ratio formatting rounds half up") {
    CHECK(format_ratio(mpq_class(1, 8), 3) == ".125");
    CHECK(format_ratio(mpq_class(1, 16), 3) == ".063");
    CHECK(format_ratio(mpq_class(1, 1), 3) == "1.000");
}

TEST_CASE("convergence report") {
    const ConvergenceReport rep = convergence_report(100);
    CHECK(rep.ratio_bounds_hold);
    CHECK(rep.term_bounds_hold);
    CHECK(rep.step_bounds_hold);
    CHECK(rep.geometric_steps_hold);
    CHECK(rep.x[100] > mpq_class(1, 5));
    CHECK(rep.tail_lower_bound >= mpq_class(16, 100));
    CHECK(rep.sqrt2.lo * rep.sqrt2.lo < 2);
    CHECK(rep.sqrt2.hi * rep.sqrt2.hi > 2);
    CHECK(rep.x[5] == proportion(10));
    CHECK(rep.odd[4] == proportion(9));
}

}  // TEST_SUITE
