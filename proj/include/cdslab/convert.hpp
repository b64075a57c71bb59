#pragma once

#include <cstddef>
#include <optional>

#include "cdslab/f2linalg.hpp"
#include "cdslab/permutation.hpp"

namespace cdslab {

// Labeled graph on vertices (1,2)..(n-1,n); row i-1 is pointer (i,i+1).
class MoveGraphInstance {
public:
    explicit MoveGraphInstance(F2Matrix adjacency);
    const F2Matrix& adjacency() const { return m_; }
    int permutation_size() const { return static_cast<int>(m_.rows()) + 1; }

private:
    F2Matrix m_;
};

// Induced subgraph of the overlap graph on the non-root pointers.
MoveGraphInstance move_graph(const Permutation& pi);

F2Matrix b_matrix(std::size_t n);
F2Matrix z_embed(const F2Matrix& a);
F2Matrix f_transform(const F2Matrix& a);
F2Matrix s_prefix(const F2Matrix& a);

// S(Z(A) + B_{n+2}) for an (n+1)x(n+1) adjacency matrix.
F2Matrix adjacency_to_precedence(const F2Matrix& a);

// F(P) + B_{n+1} for an (n+2)x(n+2) precedence matrix.
F2Matrix precedence_to_adjacency(const F2Matrix& p);

// Membership in T_n: zero diagonal, C(i,j) = 1 - C(j,i) off the diagonal, and
// integer row sums forming a permutation of 0..n-1.
bool is_central_precedence(const F2Matrix& c);

// Permutation whose precedence matrix has the given central block, if it is in T_n.
std::optional<Permutation> permutation_from_central_precedence(const F2Matrix& c);

std::optional<Permutation> realize_labeled_move_graph(const MoveGraphInstance& m);

bool realizes(const Permutation& pi, const MoveGraphInstance& m);

}  // namespace cdslab
