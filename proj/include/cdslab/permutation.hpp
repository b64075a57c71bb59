#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdslab/f2linalg.hpp"
#include "cdslab/graph.hpp"

namespace cdslab {

// Arrangement a_1..a_n of {1..n}. The framed form is 0, a_1..a_n, n+1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> elements);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(a_.size()); }
    int at(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }  // a_i, 1-based
    const std::vector<int>& elements() const { return a_; }

    // Position of x in the framed permutation: f(0)=0, f(a_i)=i, f(n+1)=n+1.
    int position(int x) const { return pos_[static_cast<std::size_t>(x)]; }

    bool is_identity() const;
    std::string to_string() const;  // "[3,2,5,1,4]"

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.a_ == b.a_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.a_ <=> b.a_; }

private:
    std::vector<int> a_;
    std::vector<int> pos_;
};

// Pointer (i, i+1). Values 0 and n are the roots.
struct Pointer {
    int value = 0;
    friend auto operator<=>(const Pointer&, const Pointer&) = default;
};

using Context = std::pair<Pointer, Pointer>;  // first.value < second.value

struct Interval {
    int first = 1;  // 1-based, inclusive
    int last = 1;
};

struct CycleGraph {
    int n = 0;                                        // vertices are 0..n+1
    std::vector<std::pair<int, int>> black_edges;     // {i, i+1}
    std::vector<std::pair<int, int>> gray_edges;      // directed: n+1 -> a_n -> ... -> a_1 -> 0
};

struct CycleNotation {
    std::vector<std::vector<int>> cycles;  // each starts at its minimum; sorted by minimum
    std::vector<int> map;                  // map[i] = C(i) for i in 0..n
    std::string to_string() const;         // "(0 5 4 2)(1 3)"
};

struct StrategicPile {
    std::vector<int> ordered;  // traversal order after n
    bool empty() const { return ordered.empty(); }
    std::vector<int> as_set() const;  // ascending
    std::string to_string() const;    // "(4,2)"
};

Permutation parse_permutation(std::string_view text);

Permutation block_interchange(const Permutation& pi, Interval first, Interval second);

std::vector<Context> cds_contexts(const Permutation& pi);

bool is_cds_context(const Permutation& pi, Pointer p, Pointer q);

Permutation apply_cds(const Permutation& pi, Pointer p, Pointer q);

CycleGraph cycle_graph(const Permutation& pi);

CycleNotation cycle_notation(const Permutation& pi);

StrategicPile strategic_pile(const Permutation& pi);

bool is_cds_sortable(const Permutation& pi);

// Greedy cds sequence to the identity; empty optional when unsortable.
std::optional<std::vector<Context>> cds_sort_sequence(const Permutation& pi);

RootedGraph overlap_graph(const Permutation& pi);

// Characteristic vectors (over pointers 0..n) of the cycles of C_pi.
std::vector<F2Vector> alternating_cycles(const Permutation& pi);

F2Vector strategic_pile_vector(const Permutation& pi);

F2Matrix precedence_matrix(const Permutation& pi);

}  // namespace cdslab
