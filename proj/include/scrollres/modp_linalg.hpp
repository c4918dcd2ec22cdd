#pragma once

// Linear algebra over F_q: dense row reduction for the small graded pieces of
// the oracle, and sparse elimination with a fewest-nonzeros pivot rule for rank
// probes of large differentials.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coefficients.hpp"

namespace scrollres {

using ModVector = std::vector<std::uint32_t>;

class DenseMatrixModP {
public:
    DenseMatrixModP() = default;
    DenseMatrixModP(std::size_t rows, std::size_t cols, std::uint32_t q) : rows_(rows), cols_(cols), q_(q), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return q_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    ModVector column(std::size_t c) const {
        ModVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
            std::size_t sel = row;
            while (sel < rows_ && at(sel, c) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
            const std::uint32_t inv = inv_mod(at(row, c), q_);
            for (std::size_t j = c; j < cols_; ++j) at(row, j) = mul_mod(at(row, j), inv, q_);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, c) == 0) continue;
                const std::uint32_t f = at(r, c);
                for (std::size_t j = c; j < cols_; ++j)
                    if (at(row, j)) at(r, j) = sub_mod(at(r, j), mul_mod(f, at(row, j), q_), q_);
            }
            pivots.push_back(c);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        DenseMatrixModP copy = *this;
        return copy.rref().size();
    }

    /// Basis of the right kernel {v : A v = 0}.
    std::vector<ModVector> kernel() const {
        DenseMatrixModP e = *this;
        const auto pivots = e.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (auto c : pivots) is_pivot[c] = 1;
        std::vector<ModVector> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            ModVector v(cols_, 0);
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (e.at(r, free)) v[pivots[r]] = (q_ - e.at(r, free)) % q_;
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> a_;
};

/// Incrementally grown row-echelon basis of a subspace of F_q^dim.
class EchelonBasis {
public:
    EchelonBasis(std::size_t dim, std::uint32_t q) : dim_(dim), q_(q) {}

    std::size_t size() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    /// Reduces v against the basis; true (and v is added) iff it was independent.
    bool insert(ModVector v) {
        reduce(v);
        std::size_t lead = 0;
        while (lead < dim_ && v[lead] == 0) ++lead;
        if (lead == dim_) return false;
        const std::uint32_t inv = inv_mod(v[lead], q_);
        for (auto& x : v) x = mul_mod(x, inv, q_);
        auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead);
        const auto idx = static_cast<std::size_t>(pos - leads_.begin());
        leads_.insert(pos, lead);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    bool contains(ModVector v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
    }

private:
    void reduce(ModVector& v) const {
        if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint32_t f = v[leads_[i]];
            if (!f) continue;
            const auto& r = rows_[i];
            for (std::size_t j = leads_[i]; j < dim_; ++j)
                if (r[j]) v[j] = sub_mod(v[j], mul_mod(f, r[j], q_), q_);
        }
    }

    std::size_t dim_;
    std::uint32_t q_;
    std::vector<std::size_t> leads_;
    std::vector<ModVector> rows_;
};

/// A sparse row: (column, nonzero value) sorted by column.
using SparseRowModP = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rank of a sparse matrix over F_q given by its rows. Pivots on the row with
/// fewest nonzeros and, inside it, the column appearing in fewest rows, which
/// keeps fill-in low on the block-structured differentials.
inline std::size_t sparse_rank_modp(std::vector<SparseRowModP> rows, std::size_t ncols, std::uint32_t q) {
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) {
            if (c >= ncols) throw std::out_of_range("sparse_rank_modp: column out of range");
            col_rows[c].push_back(r);
        }
    using Item = std::pair<std::size_t, std::uint32_t>;  // (size, row)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<char> alive(rows.size(), 1);
    for (std::uint32_t r = 0; r < rows.size(); ++r) heap.push({rows[r].size(), r});

    auto find = [](const SparseRowModP& row, std::uint32_t c) -> const std::uint32_t* {
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
        return it != row.end() && it->first == c ? &it->second : nullptr;
    };

    std::size_t rank = 0;
    SparseRowModP merged;
    while (!heap.empty()) {
        auto [sz, pr] = heap.top();
        heap.pop();
        if (!alive[pr] || sz != rows[pr].size()) continue;
        alive[pr] = 0;
        if (sz == 0) continue;
        ++rank;
        const SparseRowModP& piv = rows[pr];
        std::uint32_t pc = piv.front().first, pv = piv.front().second;
        for (const auto& [c, v] : piv)
            if (col_rows[c].size() < col_rows[pc].size()) {
                pc = c;
                pv = v;
            }
        const std::uint32_t inv = inv_mod(pv, q);
        std::vector<std::uint32_t> targets;
        targets.swap(col_rows[pc]);
        for (std::uint32_t r : targets) {
            if (!alive[r]) continue;
            const std::uint32_t* hit = find(rows[r], pc);
            if (!hit) continue;
            const std::uint32_t f = mul_mod(*hit, inv, q);
            // rows[r] -= f * piv
            merged.clear();
            const auto& a = rows[r];
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < piv.size()) {
                if (j == piv.size() || (i < a.size() && a[i].first < piv[j].first)) {
                    merged.push_back(a[i++]);
                } else if (i == a.size() || piv[j].first < a[i].first) {
                    const std::uint32_t c = piv[j].first;
                    merged.push_back({c, (q - mul_mod(f, piv[j].second, q)) % q});
                    col_rows[c].push_back(r);
                    ++j;
                } else {
                    const std::uint32_t v = sub_mod(a[i].second, mul_mod(f, piv[j].second, q), q);
                    if (v) merged.push_back({a[i].first, v});
                    ++i;
                    ++j;
                }
            }
            rows[r].swap(merged);
            heap.push({rows[r].size(), r});
        }
        rows[pr].clear();
    }
    return rank;
}

}  // namespace scrollres
