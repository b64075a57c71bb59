#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cdslab/f2linalg.hpp"

namespace cdslab {

// Simple undirected graph with two roots pinned to vertex 0 and vertex n-1.
class RootedGraph {
public:
    RootedGraph() = default;
    explicit RootedGraph(F2Matrix adjacency);  // roots are the first and last index
    static RootedGraph edgeless(std::size_t n);

    // Relabels so that root1 -> 0 and root2 -> n-1; other vertices keep their relative order.
    static RootedGraph from_edges(std::size_t n, std::size_t root1, std::size_t root2,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const { return adj_.rows(); }
    std::size_t root1() const { return 0; }
    std::size_t root2() const { return size() - 1; }
    bool is_root(std::size_t v) const { return v == 0 || v + 1 == size(); }

    const F2Matrix& adjacency() const { return adj_; }
    bool has_edge(std::size_t u, std::size_t v) const { return adj_.get(u, v); }
    F2Vector neighborhood(std::size_t v) const { return adj_.row(v); }
    std::size_t degree(std::size_t v) const { return adj_.row_popcount(v); }
    std::size_t degree_into(std::size_t v, const F2Vector& subset) const;  // delta_S(v)
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // u < v

    friend bool operator==(const RootedGraph&, const RootedGraph&) = default;

private:
    F2Matrix adj_;
};

struct ParityCut {
    F2Vector members;  // characteristic vector of V1
    friend bool operator==(const ParityCut&, const ParityCut&) = default;
};

enum class CutFlavor { two_sided_root_even, two_sided_general, generalized };
enum class Property { a, b, c };

RootedGraph gcds(const RootedGraph& g, std::size_t p, std::size_t q);

// True when reading the edge rule as "sum == 1" over the integers would give a
// different graph than the mod-2 reading used by gcds.
bool gcds_readings_differ(const RootedGraph& g, std::size_t p, std::size_t q);

bool is_eulerian(const RootedGraph& g);

// All subsets V1 with delta_V1(v) even for every v, i.e. the adjacency kernel.
std::vector<ParityCut> generalized_parity_cuts(const RootedGraph& g);

// Every cut of the given flavor, ascending by characteristic vector. Each flavor's
// cuts form the kernel of a matrix derived from the adjacency matrix.
std::vector<ParityCut> parity_cuts(const RootedGraph& g, CutFlavor flavor);
inline constexpr std::size_t kMaxEnumeratedCutVertices = 24;

bool is_parity_cut(const RootedGraph& g, const F2Vector& cut, CutFlavor flavor);

bool has_property(const RootedGraph& g, Property which);

bool is_gcds_sortable(const RootedGraph& g);

}  // namespace cdslab
