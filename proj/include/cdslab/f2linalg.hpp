#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cdslab {

// Dense bit-vector over GF(2). Bits past size() are kept zero.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t len);
    F2Vector(std::initializer_list<int> bits);

    static F2Vector from_string(std::string_view bits);
    static F2Vector ones(std::size_t len);
    static F2Vector unit(std::size_t len, std::size_t index);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;
    bool dot(const F2Vector& other) const;

    F2Vector& operator+=(const F2Vector& other);
    friend F2Vector operator+(F2Vector lhs, const F2Vector& rhs) { return lhs += rhs; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend auto operator<=>(const F2Vector& a, const F2Vector& b) { return a.words_ <=> b.words_; }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense row-major bit-matrix over GF(2); each row occupies whole 64-bit words.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<std::string>& rows);
    static F2Matrix from_rows(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }
    bool is_square() const { return rows_ == cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (data_[i * stride_ + (j >> 6)] >> (j & 63)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value);
    void flip(std::size_t i, std::size_t j) {
        data_[i * stride_ + (j >> 6)] ^= std::uint64_t{1} << (j & 63);
    }

    std::uint64_t* row_data(std::size_t i) { return data_.data() + i * stride_; }
    const std::uint64_t* row_data(std::size_t i) const { return data_.data() + i * stride_; }

    F2Vector row(std::size_t i) const;
    F2Vector column(std::size_t j) const;
    void set_row(std::size_t i, const F2Vector& v);
    std::size_t row_popcount(std::size_t i) const;

    F2Matrix transpose() const;
    F2Matrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_zero_diagonal() const;
    bool is_eulerian_rows() const;  // every row sums to 0 over GF(2)

    F2Matrix& operator+=(const F2Matrix& other);
    friend F2Matrix operator+(F2Matrix lhs, const F2Matrix& rhs) { return lhs += rhs; }
    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend F2Vector operator*(const F2Matrix& a, const F2Vector& x);
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    std::string to_string() const;  // rows of '0'/'1' separated by '\n'

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

enum class CentralMode { rows, cols, both };

std::size_t rank(const F2Matrix& m);

// Basis of ker(M), one vector per free column in ascending column order.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

std::optional<F2Vector> solve_linear(const F2Matrix& m, const F2Vector& b);

// Drops the first and last rows and/or columns.
F2Matrix central_submatrix(const F2Matrix& m, CentralMode mode);

// M + M*I_pq*M. Indices are 0-based. Requires M(p,q) = 1 and p != q.
F2Matrix mcds(const F2Matrix& m, std::size_t p, std::size_t q);

// Symmetric, zero diagonal and M(p,q) = 1: the move is a genuine pivot.
bool is_valid_mcds_move(const F2Matrix& m, std::size_t p, std::size_t q);

bool is_mcds_sortable(const F2Matrix& m);

std::size_t mcds_distance(const F2Matrix& m);

F2Vector ones_complement(const F2Vector& v);

}  // namespace cdslab
