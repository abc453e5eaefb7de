#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bbdec {

/// Bit-packed GF(2) vector. Padding bits past len are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_string(const std::string& bits);  // e.g. "1011"

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void clear();

    std::size_t popcount() const;
    bool any() const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec& other) const = default;

    /// popcount(a AND b); the vectors must have equal length.
    static std::size_t and_popcount(const BitVec& a, const BitVec& b);

    std::vector<std::size_t> set_bits() const;
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major packed GF(2) matrix with an optional sparse adjacency
/// index (rows-of-column and columns-of-row lists) built on demand.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (row_words_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c) {
        row_words_[r * words_per_row_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    std::size_t column_weight(std::size_t c) const;
    std::size_t row_weight(std::size_t r) const;

    Gf2Matrix transposed() const;
    Gf2Matrix multiplied_by(const Gf2Matrix& rhs) const;
    bool is_zero() const;
    bool operator==(const Gf2Matrix& other) const = default;

    /// Horizontal block concatenation [this | right].
    Gf2Matrix hstack(const Gf2Matrix& right) const;

    /// Builds the sparse adjacency index from the dense storage.
    void build_adjacency();
    bool has_adjacency() const { return adjacency_built_; }
    const std::vector<std::vector<std::uint32_t>>& rows_of_column() const { return rows_of_col_; }
    const std::vector<std::vector<std::uint32_t>>& cols_of_row() const { return cols_of_row_; }

    /// True when the sparse index matches the dense storage bit for bit.
    bool adjacency_consistent() const;

    std::size_t words_per_row() const { return words_per_row_; }
    const std::uint64_t* row_data(std::size_t r) const { return &row_words_[r * words_per_row_]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> row_words_;
    bool adjacency_built_ = false;
    std::vector<std::vector<std::uint32_t>> rows_of_col_;
    std::vector<std::vector<std::uint32_t>> cols_of_row_;
};

/// result[i] = parity of <row i of M, v>. Throws on dimension mismatch.
BitVec matvec(const Gf2Matrix& M, const BitVec& v);

struct RowReduceResult {
    Gf2Matrix reduced;                   // row-echelon form under column_order
    std::vector<std::size_t> pivot_cols; // original column indices, rank of them
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination visiting columns in the given order.
/// column_order must be a permutation of 0..cols-1.
RowReduceResult row_reduce(const Gf2Matrix& M, const std::vector<std::size_t>& column_order);
RowReduceResult row_reduce(const Gf2Matrix& M);  // natural order

std::size_t rank(const Gf2Matrix& M);

/// Solves M x = s. Returns a solution when s lies in the column span of M,
/// std::nullopt otherwise.
std::optional<BitVec> solve_in_image(const Gf2Matrix& M, const BitVec& s);

}  // namespace bbdec
