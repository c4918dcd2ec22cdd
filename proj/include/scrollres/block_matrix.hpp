#pragma once

// Structural (unexpanded) matrices: a tree of placed blocks. Recursively
// defined differentials share subtrees, so a tree for step i costs O(i) nodes
// while its expansion grows geometrically.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sparse_matrix.hpp"

namespace scrollres {

template <class C>
class BlockMatrix;

template <class C>
using BlockPtr = std::shared_ptr<const BlockMatrix<C>>;

template <class C>
class BlockMatrix {
public:
    struct Placement {
        BlockPtr<C> block;
        std::size_t row = 0;
        std::size_t col = 0;
        int sign = 1;
    };

    static BlockPtr<C> leaf(SparseMatrix<C> m, std::string label) {
        auto b = std::shared_ptr<BlockMatrix>(new BlockMatrix(m.rows(), m.cols(), std::move(label)));
        b->leaf_ = std::make_shared<const SparseMatrix<C>>(std::move(m));
        return b;
    }

    static BlockPtr<C> assembled(std::size_t rows, std::size_t cols, std::vector<Placement> parts, std::string label) {
        for (const auto& p : parts)
            if (p.row + p.block->rows() > rows || p.col + p.block->cols() > cols)
                throw std::out_of_range("block '" + p.block->label() + "' does not fit in '" + label + "'");
        auto b = std::shared_ptr<BlockMatrix>(new BlockMatrix(rows, cols, std::move(label)));
        b->parts_ = std::move(parts);
        return b;
    }

    /// Block diagonal sum of (block, multiplicity) runs, in order.
    static BlockPtr<C> direct_sum(const std::vector<std::pair<BlockPtr<C>, std::size_t>>& runs, std::string label) {
        std::vector<Placement> parts;
        std::size_t r = 0, c = 0;
        for (const auto& [blk, count] : runs)
            for (std::size_t t = 0; t < count; ++t) {
                parts.push_back({blk, r, c, 1});
                r += blk->rows();
                c += blk->cols();
            }
        return assembled(r, c, std::move(parts), std::move(label));
    }

    static BlockPtr<C> negated(const BlockPtr<C>& b) {
        return assembled(b->rows(), b->cols(), {{b, 0, 0, -1}}, "-" + b->label());
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::string& label() const { return label_; }
    bool is_leaf() const { return leaf_ != nullptr; }
    const std::vector<Placement>& parts() const { return parts_; }

    SparseMatrix<C> expand() const {
        SparseMatrix<C> out(rows_, cols_);
        expand_into(out, 0, 0, 1);
        return out;
    }

    /// Provenance: the labels of placed children, outermost level only.
    std::vector<std::string> child_labels() const {
        std::vector<std::string> out;
        for (const auto& p : parts_) out.push_back(p.block->label());
        return out;
    }

private:
    BlockMatrix(std::size_t rows, std::size_t cols, std::string label) : rows_(rows), cols_(cols), label_(std::move(label)) {}

    void expand_into(SparseMatrix<C>& out, std::size_t row, std::size_t col, int sign) const {
        if (leaf_) {
            out.place(*leaf_, row, col, sign);
            return;
        }
        for (const auto& p : parts_) p.block->expand_into(out, row + p.row, col + p.col, sign * p.sign);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::string label_;
    std::shared_ptr<const SparseMatrix<C>> leaf_;
    std::vector<Placement> parts_;
};

}  // namespace scrollres
