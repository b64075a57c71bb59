#include "cdslab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cdslab/errors.hpp"

namespace cdslab {

RootedGraph::RootedGraph(F2Matrix adjacency) : adj_(std::move(adjacency)) {
    if (!adj_.is_square() || adj_.rows() < 2)
        throw ContractViolation("RootedGraph: adjacency must be square with at least 2 vertices");
    if (!adj_.is_symmetric()) throw ContractViolation("RootedGraph: adjacency must be symmetric");
    if (!adj_.is_zero_diagonal()) throw ContractViolation("RootedGraph: self-loops are not allowed");
}

RootedGraph RootedGraph::edgeless(std::size_t n) { return RootedGraph(F2Matrix(n, n)); }

RootedGraph RootedGraph::from_edges(std::size_t n, std::size_t root1, std::size_t root2,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n < 2) throw ContractViolation("RootedGraph: need at least 2 vertices");
    if (root1 >= n || root2 >= n || root1 == root2) throw ContractViolation("RootedGraph: roots must be distinct vertices");
    std::vector<std::size_t> label(n);
    label[root1] = 0;
    label[root2] = n - 1;
    std::size_t next = 1;
    for (std::size_t v = 0; v < n; ++v)
        if (v != root1 && v != root2) label[v] = next++;
    F2Matrix adj(n, n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw ContractViolation("RootedGraph: edge endpoint out of range");
        if (u == v) throw ContractViolation("RootedGraph: self-loops are not allowed");
        adj.set(label[u], label[v], true);
        adj.set(label[v], label[u], true);
    }
    return RootedGraph(std::move(adj));
}

std::size_t RootedGraph::degree_into(std::size_t v, const F2Vector& subset) const {
    if (subset.size() != size()) throw ContractViolation("degree_into: subset length must equal vertex count");
    std::size_t d = 0;
    for (std::size_t w = 0; w < subset.words().size(); ++w)
        d += static_cast<std::size_t>(std::popcount(adj_.row_data(v)[w] & subset.words()[w]));
    return d;
}

std::size_t RootedGraph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < size(); ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> RootedGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u + 1; v < size(); ++v)
            if (adj_.get(u, v)) out.emplace_back(u, v);
    return out;
}

namespace {

void require_move(const RootedGraph& g, std::size_t p, std::size_t q) {
    if (p >= g.size() || q >= g.size()) throw ContractViolation("gcds: vertex out of range");
    if (g.is_root(p) || g.is_root(q)) throw InvalidMove("gcds: root vertices cannot be used as p or q");
    if (p == q) throw InvalidMove("gcds: p and q must differ");
    if (!g.has_edge(p, q)) throw InvalidMove("gcds: p and q must be adjacent");
}

}  // namespace

RootedGraph gcds(const RootedGraph& g, std::size_t p, std::size_t q) {
    require_move(g, p, q);
    const std::size_t n = g.size();
    const F2Matrix& a = g.adjacency();
    F2Matrix out(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const unsigned sum = (a.get(p, u) & a.get(q, v)) + (a.get(q, u) & a.get(p, v)) + a.get(u, v);
            if (sum & 1U) {
                out.set(u, v, true);
                out.set(v, u, true);
            }
        }
    }
    return RootedGraph(std::move(out));
}

bool gcds_readings_differ(const RootedGraph& g, std::size_t p, std::size_t q) {
    require_move(g, p, q);
    // The sum reaches 3 only for adjacent u, v that both lie in N(p) and N(q).
    const F2Matrix& a = g.adjacency();
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (a.get(u, v) && a.get(p, u) && a.get(q, u) && a.get(p, v) && a.get(q, v)) return true;
    return false;
}

bool is_eulerian(const RootedGraph& g) { return g.adjacency().is_eulerian_rows(); }

namespace {

// Cross-degree parity of v is ((A + D) x)_v with D = diag(deg mod 2).
F2Matrix cross_parity_matrix(const RootedGraph& g) {
    F2Matrix lap = g.adjacency();
    for (std::size_t v = 0; v < g.size(); ++v) if (g.degree(v) & 1U) lap.flip(v, v);
    return lap;
}

}  // namespace

std::vector<ParityCut> parity_cuts(const RootedGraph& g, CutFlavor flavor) {
    if (g.size() > kMaxEnumeratedCutVertices)
        throw SizeLimitExceeded("parity_cuts: graph has " + std::to_string(g.size()) +
                                " vertices; use kernel_basis on the adjacency matrix instead");
    std::vector<F2Vector> basis;
    switch (flavor) {
        case CutFlavor::generalized: basis = kernel_basis(g.adjacency()); break;
        case CutFlavor::two_sided_root_even: basis = kernel_basis(cross_parity_matrix(g)); break;
        case CutFlavor::two_sided_general:
            basis = kernel_basis(central_submatrix(cross_parity_matrix(g), CentralMode::rows));
            break;
    }
    std::vector<ParityCut> cuts;
    cuts.reserve(std::size_t{1} << basis.size());
    F2Vector current(g.size());
    cuts.push_back({current});
    // Gray-code walk over the span.
    for (std::size_t k = 1; k < (std::size_t{1} << basis.size()); ++k) {
        current += basis[static_cast<std::size_t>(std::countr_zero(k))];
        cuts.push_back({current});
    }
    std::sort(cuts.begin(), cuts.end(), [](const ParityCut& x, const ParityCut& y) { return x.members < y.members; });
    return cuts;
}

std::vector<ParityCut> generalized_parity_cuts(const RootedGraph& g) { return parity_cuts(g, CutFlavor::generalized); }

bool is_parity_cut(const RootedGraph& g, const F2Vector& cut, CutFlavor flavor) {
    if (cut.size() != g.size()) throw ContractViolation("is_parity_cut: subset length must equal vertex count");
    for (std::size_t v = 0; v < g.size(); ++v) {
        const std::size_t into_v1 = g.degree_into(v, cut);
        std::size_t parity_target;
        if (flavor == CutFlavor::generalized) {
            parity_target = into_v1;
        } else {
            if (flavor == CutFlavor::two_sided_general && g.is_root(v)) continue;
            parity_target = cut.get(v) ? g.degree(v) - into_v1 : into_v1;
        }
        if (parity_target & 1U) return false;
    }
    return true;
}

bool has_property(const RootedGraph& g, Property which) {
    // Pin the root coordinates of x and solve the cross-parity system for the rest.
    const std::size_t n = g.size();
    const std::size_t last = n - 1;
    const F2Matrix lap = cross_parity_matrix(g);

    const bool x_first = true;
    const bool x_last = which == Property::c;
    const bool root_parity = which != Property::a;

    F2Vector rhs(n);
    rhs.set(0, root_parity);
    rhs.set(last, root_parity);
    if (x_first) rhs += lap.column(0);
    if (x_last) rhs += lap.column(last);
    const F2Matrix inner = central_submatrix(lap, CentralMode::cols);
    return solve_linear(inner, rhs).has_value();
}

bool is_gcds_sortable(const RootedGraph& g) { return is_mcds_sortable(g.adjacency()); }

}  // namespace cdslab
