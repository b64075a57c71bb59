#include <doctest.h>

#include <random>

#include "cdslab/errors.hpp"
#include "cdslab/graph.hpp"
#include "cdslab/oracle.hpp"
#include "cdslab/permutation.hpp"

using namespace cdslab;

namespace {

RootedGraph random_graph(std::mt19937_64& rng, std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool b = rng() & 1U;
            m.set(i, j, b);
            m.set(j, i, b);
        }
    return RootedGraph(m);
}

std::vector<ParityCut> as_cuts(const std::vector<F2Vector>& v) {
    std::vector<ParityCut> out;
    for (const auto& x : v) out.push_back({x});
    return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction validates simplicity") {
    CHECK_THROWS_AS(RootedGraph(F2Matrix::from_rows({"11", "10"})), ContractViolation);
    CHECK_THROWS_AS(RootedGraph(F2Matrix::from_rows({"01", "00"})), ContractViolation);
    CHECK_THROWS_AS(RootedGraph(F2Matrix(1, 1)), ContractViolation);
    const RootedGraph g = RootedGraph::edgeless(4);
    CHECK(g.is_root(0));
    CHECK(g.is_root(3));
    CHECK_FALSE(g.is_root(1));
    CHECK(g.edge_count() == 0);
}

TEST_CASE("from_edges relabels roots to the ends") {
    const RootedGraph g = RootedGraph::from_edges(4, 1, 2, {{0, 1}, {2, 3}});
    // old 1 -> 0, old 2 -> 3, old 0 -> 1, old 3 -> 2
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("degree into a subset") {
    const RootedGraph g(F2Matrix::from_rows({"0110", "1010", "1101", "0010"}));
    CHECK(g.degree(2) == 3);
    CHECK(g.degree_into(2, F2Vector::from_string("1100")) == 2);
    CHECK(is_eulerian(RootedGraph::edgeless(3)));
    CHECK_FALSE(is_eulerian(g));
}

TEST_CASE("gcds follows the mod-2 edge rule") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 4 + rng() % 6;
        const RootedGraph g = random_graph(rng, n);
        for (std::size_t p = 1; p + 1 < n; ++p)
            for (std::size_t q = 1; q + 1 < n; ++q) {
                if (p == q || !g.has_edge(p, q)) {
                    CHECK_THROWS_AS(gcds(g, p, q), InvalidMove);
                    continue;
                }
                const RootedGraph h = gcds(g, p, q);
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        if (u == v) continue;
                        const int sum = int(g.has_edge(p, u) && g.has_edge(q, v)) +
                                        int(g.has_edge(q, u) && g.has_edge(p, v)) + int(g.has_edge(u, v));
                        REQUIRE(h.has_edge(u, v) == (sum % 2 == 1));
                    }
                CHECK(h.degree(p) == 0);
                CHECK(h.degree(q) == 0);
                CHECK(h.adjacency() == mcds(g.adjacency(), p, q));
            }
        CHECK_THROWS_AS(gcds(g, 0, 1), InvalidMove);
    }
}

TEST_CASE("literal and mod-2 readings differ only on adjacent common neighbours") {
    // p=1, q=2 share neighbours 3 and 4, which are adjacent.
    const RootedGraph g = RootedGraph::from_edges(6, 0, 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(gcds_readings_differ(g, 1, 2));
    const RootedGraph k = RootedGraph::from_edges(6, 0, 5, {{1, 2}, {1, 3}, {2, 4}});
    CHECK_FALSE(gcds_readings_differ(k, 1, 2));
}

TEST_CASE("parity cuts agree with the definitional scan") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const RootedGraph g = random_graph(rng, 2 + rng() % 9);
        for (auto flavor : {CutFlavor::generalized, CutFlavor::two_sided_root_even, CutFlavor::two_sided_general}) {
            const auto fast = parity_cuts(g, flavor);
            REQUIRE(fast == as_cuts(oracle::parity_cuts_bruteforce(g, flavor)));
            for (const auto& c : fast) CHECK(is_parity_cut(g, c.members, flavor));
        }
        CHECK(generalized_parity_cuts(g) == parity_cuts(g, CutFlavor::generalized));
    }
}

TEST_CASE("edgeless graph: every subset is a generalized cut") {
    CHECK(parity_cuts(RootedGraph::edgeless(5), CutFlavor::generalized).size() == 32);
}

TEST_CASE("property a on overlap graphs matches the pile criterion") {
    for (const auto& v : std::vector<std::vector<int>>{{3, 2, 5, 1, 4}, {4, 5, 2, 6, 1, 7, 3, 8}, {2, 1}, {1, 2, 3}}) {
        const Permutation pi(v);
        const RootedGraph g = overlap_graph(pi);
        CHECK(has_property(g, Property::a) == is_cds_sortable(pi));
        CHECK(is_gcds_sortable(g) == is_cds_sortable(pi));
    }
}

TEST_CASE("properties match an exhaustive subset scan") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const RootedGraph g = random_graph(rng, 3 + rng() % 6);
        const std::size_t n = g.size();
        bool a = false, b = false, c = false;
        for (std::uint32_t s = 0; s < (1U << n); ++s) {
            F2Vector cut(n);
            for (std::size_t v = 0; v < n; ++v) cut.set(v, s >> v & 1U);
            if (!cut.get(0)) continue;
            bool inner_even = true;
            for (std::size_t v = 1; v + 1 < n; ++v) {
                const std::size_t into = g.degree_into(v, cut);
                const std::size_t across = cut.get(v) ? g.degree(v) - into : into;
                inner_even = inner_even && across % 2 == 0;
            }
            if (!inner_even) continue;
            auto across_of = [&](std::size_t v) {
                const std::size_t into = g.degree_into(v, cut);
                return (cut.get(v) ? g.degree(v) - into : into) % 2;
            };
            const bool same_side = cut.get(n - 1);
            if (!same_side && across_of(0) == 0 && across_of(n - 1) == 0) a = true;
            if (!same_side && across_of(0) == 1 && across_of(n - 1) == 1) b = true;
            if (same_side && across_of(0) == 1 && across_of(n - 1) == 1) c = true;
        }
        CHECK(has_property(g, Property::a) == a);
        CHECK(has_property(g, Property::b) == b);
        CHECK(has_property(g, Property::c) == c);
    }
}

TEST_CASE("kernel criterion matches exhaustive gcds search") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const RootedGraph g = random_graph(rng, 2 + rng() % 6);
        REQUIRE(is_gcds_sortable(g) == oracle::gcds_sortable_bruteforce(g));
    }
}

}  // TEST_SUITE
