#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdslab/convert.hpp"
#include "cdslab/f2linalg.hpp"
#include "cdslab/graph.hpp"
#include "cdslab/permutation.hpp"

// Brute-force reference implementations. They touch the library's value types
// only through constructors and accessors and never call analytic routines.
namespace cdslab::oracle {

inline constexpr int kMaxSearchSize = 8;
inline constexpr std::size_t kMaxCensusSize = 7;
inline constexpr std::size_t kMaxCutScanSize = 16;
inline constexpr std::size_t kMaxN0Size = 5;
inline constexpr int kMaxRealizeSize = 6;

struct SearchStats {
    std::size_t states_visited = 0;
    std::size_t max_depth = 0;  // longest move sequence from the start state
    bool result = false;
};

// Summary of every maximal gcds move sequence from one start graph.
struct SequenceProfile {
    std::size_t min_length = 0;
    std::size_t max_length = 0;
    bool all_end_edgeless = true;
    bool any_end_edgeless = false;
    std::size_t states_visited = 0;
};

struct CensusCounts {
    std::uint64_t total = 0;
    std::uint64_t sortable = 0;
    std::uint64_t eulerian = 0;
    std::uint64_t eulerian_sortable = 0;
    friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

SearchStats cds_search(const Permutation& pi);
bool cds_sortable_bruteforce(const Permutation& pi);

SequenceProfile gcds_sequence_profile(const RootedGraph& g);
bool gcds_sortable_bruteforce(const RootedGraph& g);

// All 2^C(n,2) graphs with roots at the first and last index.
CensusCounts census_serial(std::size_t n);
CensusCounts census_parallel(std::size_t n);
mpz_class census_bruteforce(std::size_t n, bool eulerian);

// Every subset tested against the flavor's definition; ascending bitmask order.
std::vector<F2Vector> parity_cuts_bruteforce(const RootedGraph& g, CutFlavor flavor);

mpz_class n0_bruteforce(std::size_t t, std::size_t r);

std::optional<Permutation> realizable_bruteforce(const MoveGraphInstance& m);

// Reference helpers used by the tests.
F2Matrix overlap_reference(const Permutation& pi);
std::optional<Permutation> cds_reference(const Permutation& pi, int p, int q);
std::size_t rank_reference(const F2Matrix& m);

}  // namespace cdslab::oracle
