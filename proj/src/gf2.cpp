#include "bbdec/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bbdec {

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVec::from_string: expected only '0'/'1'");
        }
    }
    return v;
}

void BitVec::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVec::operator^=: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::size_t BitVec::and_popcount(const BitVec& a, const BitVec& b) {
    if (a.len_ != b.len_) {
        throw std::invalid_argument("BitVec::and_popcount: length mismatch");
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    }
    return n;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            const int tz = std::countr_zero(bits);
            out.push_back(w * 64 + static_cast<std::size_t>(tz));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), row_words_(rows * words_per_row_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    auto& word = row_words_[r * words_per_row_ + (c >> 6)];
    if (v) {
        word |= mask;
    } else {
        word &= ~mask;
    }
}

std::size_t Gf2Matrix::column_weight(std::size_t c) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        n += get(r, c) ? 1 : 0;
    }
    return n;
}

std::size_t Gf2Matrix::row_weight(std::size_t r) const {
    std::size_t n = 0;
    const auto* w = &row_words_[r * words_per_row_];
    for (std::size_t i = 0; i < words_per_row_; ++i) {
        n += static_cast<std::size_t>(std::popcount(w[i]));
    }
    return n;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

Gf2Matrix Gf2Matrix::multiplied_by(const Gf2Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("Gf2Matrix::multiplied_by: inner dimension mismatch");
    }
    Gf2Matrix out(rows_, rhs.cols_);
    // out[r] = XOR of rhs rows selected by the bits of this->row r.
    for (std::size_t r = 0; r < rows_; ++r) {
        auto* dst = &out.row_words_[r * out.words_per_row_];
        for (std::size_t k = 0; k < cols_; ++k) {
            if (get(r, k)) {
                const auto* src = &rhs.row_words_[k * rhs.words_per_row_];
                for (std::size_t i = 0; i < rhs.words_per_row_; ++i) {
                    dst[i] ^= src[i];
                }
            }
        }
    }
    return out;
}

bool Gf2Matrix::is_zero() const {
    for (auto w : row_words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

Gf2Matrix Gf2Matrix::hstack(const Gf2Matrix& right) const {
    if (right.rows_ != rows_) {
        throw std::invalid_argument("Gf2Matrix::hstack: row count mismatch");
    }
    Gf2Matrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                out.set(r, c, true);
            }
        }
        for (std::size_t c = 0; c < right.cols_; ++c) {
            if (right.get(r, c)) {
                out.set(r, cols_ + c, true);
            }
        }
    }
    return out;
}

void Gf2Matrix::build_adjacency() {
    rows_of_col_.assign(cols_, {});
    cols_of_row_.assign(rows_, {});
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                rows_of_col_[c].push_back(static_cast<std::uint32_t>(r));
                cols_of_row_[r].push_back(static_cast<std::uint32_t>(c));
            }
        }
    }
    adjacency_built_ = true;
}

bool Gf2Matrix::adjacency_consistent() const {
    if (!adjacency_built_) {
        return false;
    }
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (auto c : cols_of_row_[r]) {
            if (!get(r, c)) {
                return false;
            }
        }
        nnz += cols_of_row_[r].size();
    }
    std::size_t dense_nnz = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        dense_nnz += row_weight(r);
    }
    if (nnz != dense_nnz) {
        return false;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        if (rows_of_col_[c].size() != column_weight(c)) {
            return false;
        }
    }
    return true;
}

BitVec matvec(const Gf2Matrix& M, const BitVec& v) {
    if (v.size() != M.cols()) {
        throw std::invalid_argument("matvec: vector length does not match matrix columns");
    }
    BitVec out(M.rows());
    const auto& vw = v.words();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        const std::uint64_t* row = M.row_data(r);
        std::size_t ones = 0;
        for (std::size_t i = 0; i < vw.size(); ++i) {
            ones += static_cast<std::size_t>(std::popcount(row[i] & vw[i]));
        }
        out.set(r, (ones & 1U) != 0);
    }
    return out;
}

namespace {

// Shared elimination core. Operates on a row-word copy of M, optionally
// carrying an augmented column. Returns pivot columns in original indices.
struct Elimination {
    std::size_t rows, cols, wpr;
    std::vector<std::uint64_t> work;
    std::vector<std::uint8_t> aug;  // augmented column, empty when unused
    std::vector<std::size_t> pivot_cols;

    explicit Elimination(const Gf2Matrix& M, const BitVec* s = nullptr)
        : rows(M.rows()), cols(M.cols()), wpr(M.words_per_row()), work(rows * wpr, 0) {
        for (std::size_t r = 0; r < rows; ++r) {
            const std::uint64_t* src = M.row_data(r);
            std::copy(src, src + wpr, &work[r * wpr]);
        }
        if (s != nullptr) {
            aug.resize(rows);
            for (std::size_t r = 0; r < rows; ++r) {
                aug[r] = s->get(r) ? 1 : 0;
            }
        }
    }

    bool bit(std::size_t r, std::size_t c) const {
        return (work[r * wpr + (c >> 6)] >> (c & 63)) & 1U;
    }

    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t i = 0; i < wpr; ++i) {
            work[dst * wpr + i] ^= work[src * wpr + i];
        }
        if (!aug.empty()) {
            aug[dst] ^= aug[src];
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        for (std::size_t i = 0; i < wpr; ++i) {
            std::swap(work[a * wpr + i], work[b * wpr + i]);
        }
        if (!aug.empty()) {
            std::swap(aug[a], aug[b]);
        }
    }

    void run(const std::vector<std::size_t>& column_order) {
        std::size_t next_pivot_row = 0;
        for (auto col : column_order) {
            std::size_t found = rows;
            for (std::size_t r = next_pivot_row; r < rows; ++r) {
                if (bit(r, col)) {
                    found = r;
                    break;
                }
            }
            if (found == rows) {
                continue;
            }
            swap_rows(next_pivot_row, found);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r != next_pivot_row && bit(r, col)) {
                    xor_rows(r, next_pivot_row);
                }
            }
            pivot_cols.push_back(col);
            ++next_pivot_row;
            if (next_pivot_row == rows) {
                break;
            }
        }
    }
};

}  // namespace

RowReduceResult row_reduce(const Gf2Matrix& M, const std::vector<std::size_t>& column_order) {
    if (column_order.size() != M.cols()) {
        throw std::invalid_argument("row_reduce: column_order must have one entry per column");
    }
    std::vector<bool> seen(M.cols(), false);
    for (auto c : column_order) {
        if (c >= M.cols() || seen[c]) {
            throw std::invalid_argument("row_reduce: column_order is not a permutation");
        }
        seen[c] = true;
    }
    Elimination elim(M);
    elim.run(column_order);

    RowReduceResult res;
    res.rank = elim.pivot_cols.size();
    res.pivot_cols = std::move(elim.pivot_cols);
    res.reduced = Gf2Matrix(M.rows(), M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (elim.bit(r, c)) {
                res.reduced.set(r, c, true);
            }
        }
    }
    return res;
}

RowReduceResult row_reduce(const Gf2Matrix& M) {
    std::vector<std::size_t> order(M.cols());
    std::iota(order.begin(), order.end(), 0);
    return row_reduce(M, order);
}

std::size_t rank(const Gf2Matrix& M) {
    std::vector<std::size_t> order(M.cols());
    std::iota(order.begin(), order.end(), 0);
    Elimination elim(M);
    elim.run(order);
    return elim.pivot_cols.size();
}

std::optional<BitVec> solve_in_image(const Gf2Matrix& M, const BitVec& s) {
    if (s.size() != M.rows()) {
        throw std::invalid_argument("solve_in_image: syndrome length does not match matrix rows");
    }
    std::vector<std::size_t> order(M.cols());
    std::iota(order.begin(), order.end(), 0);
    Elimination elim(M, &s);
    elim.run(order);

    const std::size_t r = elim.pivot_cols.size();
    for (std::size_t row = r; row < M.rows(); ++row) {
        if (elim.aug[row]) {
            return std::nullopt;
        }
    }
    BitVec x(M.cols());
    for (std::size_t k = 0; k < r; ++k) {
        if (elim.aug[k]) {
            x.set(elim.pivot_cols[k], true);
        }
    }
    return x;
}

}  // namespace bbdec
