#pragma once

// Sparse matrices over R, stored column by column.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace scrollres {

template <class C>
struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    RingElement<C> value;
};

template <class C>
class SparseMatrix {
public:
    using Cell = std::pair<std::size_t, RingElement<C>>;  // (row, value)

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    std::size_t nnz() const {
        std::size_t s = 0;
        for (const auto& c : columns_) s += c.size();
        return s;
    }

    /// Sets (row, col); a zero value erases the entry.
    void set(std::size_t row, std::size_t col, RingElement<C> value) {
        check(row, col);
        auto& column = columns_[col];
        auto it = std::lower_bound(column.begin(), column.end(), row, [](const Cell& c, std::size_t r) { return c.first < r; });
        if (it != column.end() && it->first == row) {
            if (value.is_zero()) column.erase(it);
            else it->second = std::move(value);
        } else if (!value.is_zero()) {
            column.insert(it, Cell{row, std::move(value)});
        }
    }

    /// Appends to a column; rows must be strictly increasing within the column.
    void push(std::size_t row, std::size_t col, RingElement<C> value) {
        check(row, col);
        if (value.is_zero()) return;
        auto& column = columns_[col];
        if (!column.empty() && column.back().first >= row) {
            set(row, col, std::move(value));
            return;
        }
        column.emplace_back(row, std::move(value));
    }

    RingElement<C> get(std::size_t row, std::size_t col) const {
        check(row, col);
        const auto& column = columns_[col];
        auto it = std::lower_bound(column.begin(), column.end(), row, [](const Cell& c, std::size_t r) { return c.first < r; });
        if (it != column.end() && it->first == row) return it->second;
        return {};
    }

    const std::vector<Cell>& column(std::size_t col) const { return columns_.at(col); }

    /// All entries ordered by (row, col).
    std::vector<MatrixEntry<C>> entries() const {
        std::vector<MatrixEntry<C>> out;
        out.reserve(nnz());
        for (std::size_t c = 0; c < cols(); ++c)
            for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t c = 0; c < cols(); ++c)
            for (const auto& [r, v] : columns_[c]) f(r, c, v);
    }

    SparseMatrix operator-() const {
        SparseMatrix out = *this;
        for (auto& column : out.columns_)
            for (auto& cell : column) cell.second = -cell.second;
        return out;
    }

    /// Copies `block` into this matrix with its top-left corner at (row, col).
    void place(const SparseMatrix& block, std::size_t row, std::size_t col, int sign = 1) {
        if (row + block.rows() > rows_ || col + block.cols() > cols())
            throw std::out_of_range("place: block does not fit");
        for (std::size_t c = 0; c < block.cols(); ++c)
            for (const auto& [r, v] : block.columns_[c]) set(row + r, col + c, sign < 0 ? -v : v);
    }

    SparseMatrix submatrix(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const {
        SparseMatrix out(row_ids.size(), col_ids.size());
        for (std::size_t j = 0; j < col_ids.size(); ++j)
            for (std::size_t i = 0; i < row_ids.size(); ++i) out.set(i, j, get(row_ids[i], col_ids[j]));
        return out;
    }

    template <class F>
    auto map_coefficients(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        SparseMatrix<D> out(rows_, cols());
        for (std::size_t c = 0; c < cols(); ++c)
            for (const auto& [r, v] : columns_[c]) out.push(r, c, v.map_coefficients(f));
        return out;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    void check(std::size_t row, std::size_t col) const {
        if (row >= rows_ || col >= cols())
            throw std::out_of_range("matrix index (" + std::to_string(row) + "," + std::to_string(col) + ") outside " +
                                    std::to_string(rows_) + "x" + std::to_string(cols()));
    }

    std::size_t rows_ = 0;
    std::vector<std::vector<Cell>> columns_;
};

using MatrixR = SparseMatrix<Rational>;

/// Product A*B with every entry in normal form.
template <class C>
SparseMatrix<C> multiply(const ScrollRing& ring, const SparseMatrix<C>& a, const SparseMatrix<C>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " do not chain");
    SparseMatrix<C> out(a.rows(), b.cols());
    std::vector<RingElement<C>> acc(a.rows());
    std::vector<char> touched(a.rows(), 0);
    std::vector<std::size_t> rows;
    for (std::size_t c = 0; c < b.cols(); ++c) {
        rows.clear();
        for (const auto& [k, bv] : b.column(c))
            for (const auto& [r, av] : a.column(k)) {
                if (!touched[r]) {
                    touched[r] = 1;
                    rows.push_back(r);
                    acc[r] = RingElement<C>();
                }
                acc[r] += ring.multiply(av, bv);
            }
        std::sort(rows.begin(), rows.end());
        for (std::size_t r : rows) {
            out.push(r, c, std::move(acc[r]));
            acc[r] = RingElement<C>();
            touched[r] = 0;
        }
    }
    return out;
}

/// Block diagonal sum.
template <class C>
SparseMatrix<C> direct_sum(const std::vector<const SparseMatrix<C>*>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto* b : blocks) {
        rows += b->rows();
        cols += b->cols();
    }
    SparseMatrix<C> out(rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto* b : blocks) {
        out.place(*b, r, c);
        r += b->rows();
        c += b->cols();
    }
    return out;
}

/// Identity of the given size scaled by an element.
template <class C>
SparseMatrix<C> scaled_identity(std::size_t size, const RingElement<C>& diag) {
    SparseMatrix<C> out(size, size);
    for (std::size_t i = 0; i < size; ++i) out.push(i, i, diag);
    return out;
}

}  // namespace scrollres
