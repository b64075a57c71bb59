#include "cdslab/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "cdslab/errors.hpp"

namespace cdslab {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

std::uint64_t tail_mask(std::size_t bits) {
    const std::size_t r = bits & 63;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t from, std::size_t to) {
    for (std::size_t w = from; w < to; ++w) dst[w] ^= src[w];
}

// In-place reduced row echelon form restricted to the first `limit` columns.
// Returns the pivot columns; pivot k sits in row k.
std::vector<std::size_t> reduce(F2Matrix& m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    const std::size_t stride = m.words_per_row();
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && !m.get(pr, c)) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r) std::swap_ranges(m.row_data(pr), m.row_data(pr) + stride, m.row_data(r));
        const std::size_t w0 = c >> 6;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) xor_words(m.row_data(i), m.row_data(r), w0, stride);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

// ---------------------------------------------------------------- F2Vector

F2Vector::F2Vector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

F2Vector::F2Vector(std::initializer_list<int> bits) : F2Vector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw ContractViolation("F2Vector entries must be 0 or 1");
        set(i++, b == 1);
    }
}

F2Vector F2Vector::from_string(std::string_view bits) {
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw ContractViolation("bit string may only contain '0' and '1'");
        v.set(i, bits[i] == '1');
    }
    return v;
}

F2Vector F2Vector::ones(std::size_t len) {
    F2Vector v(len);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    if (!v.words_.empty()) v.words_.back() &= tail_mask(len);
    return v;
}

F2Vector F2Vector::unit(std::size_t len, std::size_t index) {
    if (index >= len) throw ContractViolation("unit vector index out of range");
    F2Vector v(len);
    v.set(index, true);
    return v;
}

void F2Vector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) words_[i >> 6] |= bit;
    else words_[i >> 6] &= ~bit;
}

bool F2Vector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Vector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool F2Vector::dot(const F2Vector& other) const {
    if (len_ != other.len_) throw ContractViolation("dot product of vectors of different length");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

F2Vector& F2Vector::operator+=(const F2Vector& other) {
    if (len_ != other.len_) throw ContractViolation("sum of vectors of different length");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::string F2Vector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
    return s;
}

// ---------------------------------------------------------------- F2Matrix

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(word_count(cols)), data_(rows * word_count(cols), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    F2Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ContractViolation("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            const char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw ContractViolation("matrix rows may only contain '0' and '1'");
            m.set(i, j, ch == '1');
        }
    }
    return m;
}

F2Matrix F2Matrix::from_rows(std::initializer_list<std::string_view> rows) {
    return from_rows(std::vector<std::string>(rows.begin(), rows.end()));
}

void F2Matrix::set(std::size_t i, std::size_t j, bool value) {
    std::uint64_t& w = data_[i * stride_ + (j >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (value) w |= bit;
    else w &= ~bit;
}

F2Vector F2Matrix::row(std::size_t i) const {
    F2Vector v(cols_);
    std::copy(row_data(i), row_data(i) + stride_, v.words().begin());
    return v;
}

F2Vector F2Matrix::column(std::size_t j) const {
    F2Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) if (get(i, j)) v.set(i, true);
    return v;
}

void F2Matrix::set_row(std::size_t i, const F2Vector& v) {
    if (v.size() != cols_) throw ContractViolation("row length mismatch");
    std::copy(v.words().begin(), v.words().end(), row_data(i));
}

std::size_t F2Matrix::row_popcount(std::size_t i) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < stride_; ++w) total += static_cast<std::size_t>(std::popcount(row_data(i)[w]));
    return total;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

F2Matrix F2Matrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_) throw ContractViolation("submatrix range out of bounds");
    F2Matrix s(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            if (get(i, j)) s.set(i - r0, j - c0, true);
    return s;
}

bool F2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool F2Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool F2Matrix::is_zero_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) if (get(i, i)) return false;
    return true;
}

bool F2Matrix::is_eulerian_rows() const {
    for (std::size_t i = 0; i < rows_; ++i) if (row_popcount(i) & 1) return false;
    return true;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ContractViolation("matrix sum dimension mismatch");
    for (std::size_t w = 0; w < data_.size(); ++w) data_[w] ^= other.data_[w];
    return *this;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("matrix product dimension mismatch");
    F2Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(i, k)) xor_words(c.row_data(i), b.row_data(k), 0, c.stride_);
    return c;
}

F2Vector operator*(const F2Matrix& a, const F2Vector& x) {
    if (a.cols_ != x.size()) throw ContractViolation("matrix-vector dimension mismatch");
    F2Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.stride_; ++w) acc ^= a.row_data(i)[w] & x.words()[w];
        if (std::popcount(acc) & 1) y.set(i, true);
    }
    return y;
}

std::string F2Matrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s.push_back('\n');
        for (std::size_t j = 0; j < cols_; ++j) s.push_back(get(i, j) ? '1' : '0');
    }
    return s;
}

// ---------------------------------------------------------------- algorithms

std::size_t rank(const F2Matrix& m) {
    F2Matrix work = m;
    const std::size_t stride = work.words_per_row();
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t pr = r;
        while (pr < work.rows() && !work.get(pr, c)) ++pr;
        if (pr == work.rows()) continue;
        if (pr != r) std::swap_ranges(work.row_data(pr), work.row_data(pr) + stride, work.row_data(r));
        for (std::size_t i = r + 1; i < work.rows(); ++i)
            if (work.get(i, c)) xor_words(work.row_data(i), work.row_data(r), c >> 6, stride);
        ++r;
    }
    return r;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    F2Matrix work = m;
    const auto pivots = reduce(work, work.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<F2Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        F2Vector x(m.cols());
        x.set(f, true);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (work.get(k, f)) x.set(pivots[k], true);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<F2Vector> solve_linear(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw ContractViolation("solve_linear: right-hand side length must equal row count");
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) if (m.get(i, j)) aug.set(i, j, true);
        aug.set(i, m.cols(), b.get(i));
    }
    const auto pivots = reduce(aug, m.cols());
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        if (aug.get(i, m.cols())) return std::nullopt;
    F2Vector x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x.set(pivots[k], aug.get(k, m.cols()));
    return x;
}

F2Matrix central_submatrix(const F2Matrix& m, CentralMode mode) {
    const bool drop_rows = mode != CentralMode::cols;
    const bool drop_cols = mode != CentralMode::rows;
    if (drop_rows && m.rows() < 2) throw ContractViolation("central_submatrix: need at least 2 rows");
    if (drop_cols && m.cols() < 2) throw ContractViolation("central_submatrix: need at least 2 columns");
    return m.submatrix(drop_rows ? 1 : 0, drop_rows ? m.rows() - 1 : m.rows(),
                       drop_cols ? 1 : 0, drop_cols ? m.cols() - 1 : m.cols());
}

F2Matrix mcds(const F2Matrix& m, std::size_t p, std::size_t q) {
    if (!m.is_square()) throw ContractViolation("mcds: matrix must be square");
    if (p >= m.rows() || q >= m.rows()) throw ContractViolation("mcds: index out of range");
    if (p == q) throw InvalidMove("mcds: p and q must differ");
    if (!m.get(p, q)) throw InvalidMove("mcds: entry (p,q) must be 1");
    // Row i gains M(i,p)*row q + M(i,q)*row p, which is exactly (M I_pq M)(i,.).
    F2Matrix out = m;
    const F2Vector row_p = m.row(p);
    const F2Vector row_q = m.row(q);
    const std::size_t stride = m.words_per_row();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.get(i, p)) xor_words(out.row_data(i), row_q.words().data(), 0, stride);
        if (m.get(i, q)) xor_words(out.row_data(i), row_p.words().data(), 0, stride);
    }
    return out;
}

bool is_valid_mcds_move(const F2Matrix& m, std::size_t p, std::size_t q) {
    return m.is_square() && p < m.rows() && q < m.rows() && p != q && m.get(p, q) && m.is_symmetric() &&
           m.is_zero_diagonal();
}

bool is_mcds_sortable(const F2Matrix& m) {
    if (!m.is_square() || m.rows() < 2) throw ContractViolation("is_mcds_sortable: need a square matrix with n >= 2");
    const std::size_t last = m.rows() - 1;
    // Image of the kernel under x -> (x_first, x_last), as a set of 2-bit codes.
    unsigned reachable = 1U;  // bit k set <=> code k attainable; code 0 always is
    for (const auto& x : kernel_basis(m)) {
        const unsigned code = (x.get(0) ? 1U : 0U) | (x.get(last) ? 2U : 0U);
        unsigned next = reachable;
        for (unsigned s = 0; s < 4; ++s) if (reachable >> s & 1U) next |= 1U << (s ^ code);
        reachable = next;
    }
    return (reachable >> 2 & 1U) && (reachable >> 1 & 1U);
}

std::size_t mcds_distance(const F2Matrix& m) {
    if (!m.is_square() || m.rows() < 2 || !m.is_symmetric() || !m.is_zero_diagonal())
        throw ContractViolation("mcds_distance: need a symmetric zero-diagonal matrix with n >= 2");
    const std::size_t r = rank(central_submatrix(m, CentralMode::both));
    if (r % 2 != 0) throw InvariantViolation("mcds_distance: central rank is odd");
    return r / 2;
}

F2Vector ones_complement(const F2Vector& v) { return v + F2Vector::ones(v.size()); }

}  // namespace cdslab
