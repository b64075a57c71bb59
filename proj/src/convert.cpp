#include "cdslab/convert.hpp"

#include <bit>
#include <vector>

#include "cdslab/errors.hpp"

namespace cdslab {

MoveGraphInstance::MoveGraphInstance(F2Matrix adjacency) : m_(std::move(adjacency)) {
    if (!m_.is_square()) throw ContractViolation("move graph: adjacency must be square");
    if (!m_.is_symmetric()) throw ContractViolation("move graph: adjacency must be symmetric");
    if (!m_.is_zero_diagonal()) throw ContractViolation("move graph: adjacency must have zero diagonal");
}

MoveGraphInstance move_graph(const Permutation& pi) {
    return MoveGraphInstance(central_submatrix(overlap_graph(pi).adjacency(), CentralMode::both));
}

F2Matrix b_matrix(std::size_t n) {
    if (n < 1) throw ContractViolation("b_matrix: n must be at least 1");
    F2Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        b.set(i, i, true);
        if (i + 1 < n) b.set(i, i + 1, true);
    }
    return b;
}

F2Matrix z_embed(const F2Matrix& a) {
    if (!a.is_square()) throw ContractViolation("z_embed: matrix must be square");
    F2Matrix z(a.rows() + 1, a.cols() + 1);
    z.set(0, 0, true);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) z.set(i + 1, j + 1, true);
    return z;
}

F2Matrix f_transform(const F2Matrix& a) {
    if (!a.is_square() || a.rows() < 2) throw ContractViolation("f_transform: need a square matrix with n >= 2");
    const std::size_t m = a.rows() - 1;
    F2Matrix f(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (a.get(i, j) ^ a.get(i + 1, j) ^ a.get(i, j + 1) ^ a.get(i + 1, j + 1)) f.set(i, j, true);
    return f;
}

F2Matrix s_prefix(const F2Matrix& a) {
    if (!a.is_square()) throw ContractViolation("s_prefix: matrix must be square");
    F2Matrix s(a.rows(), a.cols());
    const std::size_t stride = a.words_per_row();
    std::vector<std::uint64_t> acc(stride, 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        // Prefix XOR along the row, carried across word boundaries.
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < stride; ++w) {
            std::uint64_t x = a.row_data(i)[w];
            for (unsigned sh = 1; sh < 64; sh <<= 1) x ^= x << sh;
            if (carry) x = ~x;
            carry = x >> 63;
            acc[w] ^= x;
        }
        for (std::size_t w = 0; w < stride; ++w) s.row_data(i)[w] = acc[w];
        if (stride && (a.cols() & 63)) s.row_data(i)[stride - 1] &= (std::uint64_t{1} << (a.cols() & 63)) - 1;
    }
    return s;
}

F2Matrix adjacency_to_precedence(const F2Matrix& a) {
    if (!a.is_square() || a.rows() < 1) throw ContractViolation("adjacency_to_precedence: matrix must be square");
    if (!a.is_symmetric() || !a.is_zero_diagonal())
        throw ContractViolation("adjacency_to_precedence: matrix must be symmetric with zero diagonal");
    return s_prefix(z_embed(a) + b_matrix(a.rows() + 1));
}

F2Matrix precedence_to_adjacency(const F2Matrix& p) {
    if (!p.is_square() || p.rows() < 3) throw ContractViolation("precedence_to_adjacency: need a square matrix with n+2 >= 3 rows");
    return f_transform(p) + b_matrix(p.rows() - 1);
}

namespace {

// Row sums when c is in T_n, otherwise empty.
std::optional<std::vector<std::size_t>> central_row_sums(const F2Matrix& c) {
    if (!c.is_square()) return std::nullopt;
    const std::size_t n = c.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> sums(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.get(i, i)) return std::nullopt;
        for (std::size_t j = i + 1; j < n; ++j)
            if (c.get(i, j) == c.get(j, i)) return std::nullopt;
        const std::size_t s = c.row_popcount(i);
        if (s >= n || seen[s]) return std::nullopt;
        seen[s] = true;
        sums[i] = s;
    }
    return sums;
}

}  // namespace

bool is_central_precedence(const F2Matrix& c) { return central_row_sums(c).has_value(); }

std::optional<Permutation> permutation_from_central_precedence(const F2Matrix& c) {
    const auto sums = central_row_sums(c);
    if (!sums) return std::nullopt;
    const std::size_t n = c.rows();
    if (n == 0) return std::nullopt;
    // Element e is followed by s_e elements, so it sits at position n - s_e.
    std::vector<int> a(n);
    for (std::size_t e = 0; e < n; ++e) a[n - 1 - (*sums)[e]] = static_cast<int>(e) + 1;
    return Permutation(std::move(a));
}

bool realizes(const Permutation& pi, const MoveGraphInstance& m) {
    return pi.size() == m.permutation_size() && move_graph(pi).adjacency() == m.adjacency();
}

std::optional<Permutation> realize_labeled_move_graph(const MoveGraphInstance& inst) {
    const F2Matrix& m = inst.adjacency();
    const std::size_t n = m.rows() + 1;  // permutation size
    const std::size_t dim = n + 1;       // overlap graph size

    // P depends on the unknown root row only through the prefix sums V(t) of
    // v = A(0, 1..n-1):  P(i,j) = P0(i,j) + V(i-1) + V(j-1)  for 1 <= i,j <= n,
    // where P0 is the precedence image of M with empty root rows. The last
    // element of the witness has an all-zero central row; guessing it is
    // element i pins v_k = P0(i,k) + P0(i,k+1).
    F2Matrix a0(dim, dim);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) a0.set(r + 1, c + 1, true);
    const F2Matrix p0 = adjacency_to_precedence(a0);

    std::vector<bool> m_row_parity(m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k) m_row_parity[k] = m.row_popcount(k) & 1U;

    for (std::size_t i = 1; i <= n; ++i) {
        F2Matrix a = a0;
        for (std::size_t k = 1; k < n; ++k) {
            const bool v = p0.get(i, k) ^ p0.get(i, k + 1);
            const bool u = v ^ m_row_parity[k - 1];  // makes row k even: u = v + M*1
            a.set(0, k, v);
            a.set(k, 0, v);
            a.set(k, n, u);
            a.set(n, k, u);
        }
        for (bool x : {false, true}) {
            a.set(0, n, x);
            a.set(n, 0, x);
            const F2Matrix p = adjacency_to_precedence(a);
            const auto witness = permutation_from_central_precedence(p.submatrix(1, n + 1, 1, n + 1));
            if (witness && realizes(*witness, inst)) return witness;
        }
    }
    return std::nullopt;
}

}  // namespace cdslab
