#pragma once

// The minimal free resolution of the residue field over a 2-scroll, built as
// the mapping cone of the chain map alpha: F(J) -> F(I1) + F(I2), where
// I1 = <x1..xm>, I2 = <x_{m+1}..xn> and J = I1 cap I2.
//
// Variables follow the flat order x1..xm (first block), x_{m+1}..xn (second
// block); in code they are 0-based, so x_{m+1} is variable m. All building
// blocks are assembled from phi0, the 2 x (n-2) matrix whose columns are the
// columns (a, b) of M turned into (b, -a).
//
// Direct sums and mapping-cone blocks are laid out left to right and top to
// bottom in the order I1, I2, then J. For blocks (3,3) this is exactly the
// block order of the hand-written S(2,2) differentials, so no permutation is
// needed when comparing against them.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "block_matrix.hpp"
#include "combinatorics.hpp"
#include "ring.hpp"
#include "scroll.hpp"
#include "sparse_matrix.hpp"

namespace scrollres {

using BlockR = BlockMatrix<Rational>;
using BlockRPtr = BlockPtr<Rational>;

enum class ResolutionTarget { Field, J, I1, I2 };

inline std::string to_string(ResolutionTarget t) {
    switch (t) {
        case ResolutionTarget::Field: return "field";
        case ResolutionTarget::J: return "J";
        case ResolutionTarget::I1: return "I1";
        case ResolutionTarget::I2: return "I2";
    }
    return "?";
}

/// Builder for every block of the k = 2 construction. Cheap to create; the phi
/// trees are built on demand and shared between steps.
class K2Construction {
public:
    explicit K2Construction(const ScrollSpec& spec) : spec_(spec), M_(scroll_matrix(spec)) {
        spec_.require_k2();
        n_ = spec_.n();
        m_ = spec_.m();
        p_ = spec_.p();
    }

    const ScrollSpec& spec() const { return spec_; }

    BlockRPtr phi0() const { return BlockR::leaf(phi0_matrix(), "phi_0"); }

    /// d x (d-1)(n-2): d-1 copies of phi0, block b on rows b, b+1. Staircase,
    /// not block diagonal. d = 1 gives the empty 1 x 0 matrix.
    BlockRPtr Phi(int d) const {
        if (d < 1) throw std::invalid_argument("Phi_d needs d >= 1");
        const std::size_t w = static_cast<std::size_t>(n_ - 2);
        MatrixR base = phi0_matrix();
        MatrixR out(static_cast<std::size_t>(d), static_cast<std::size_t>(d - 1) * w);
        for (int b = 0; b + 1 < d; ++b) out.place(base, static_cast<std::size_t>(b), static_cast<std::size_t>(b) * w);
        return BlockR::leaf(std::move(out), "Phi_" + std::to_string(d));
    }

    BlockRPtr phi1() const {
        const std::size_t w = static_cast<std::size_t>(n_ - 2);
        const std::size_t m = static_cast<std::size_t>(m_), p = static_cast<std::size_t>(p_);
        MatrixR out(w, w * static_cast<std::size_t>(n_ - 3));
        out.place(Phi(m_ - 1)->expand(), 0, 0);
        const std::size_t c0 = (m - 2) * w;
        // top band: x_{m+1} * identity, then x_{m+2}..xn along row m-1
        for (std::size_t r = 0; r + 1 < m; ++r) out.set(r, c0 + r, var(m_));
        for (std::size_t t = 0; t + 1 < p; ++t) out.set(m - 2, c0 + m - 1 + t, var(m_ + 1 + static_cast<int>(t)));
        // bottom band: -x1..-x_{m-1} along row m, then -x_m * identity
        for (std::size_t c = 0; c + 1 < m; ++c) out.set(m - 1, c0 + c, -var(static_cast<int>(c)));
        for (std::size_t r = 0; r + 1 < p; ++r) out.set(m - 1 + r, c0 + m - 1 + r, -var(m_ - 1));
        out.place(Phi(p_ - 1)->expand(), m - 1, c0 + w);
        return BlockR::leaf(std::move(out), "phi_1");
    }

    /// (m-2)(n-2) x (n-2), the top row of M in row i(n-2)+m (1-based).
    BlockRPtr u_block(int i) const {
        if (i < 0 || i > m_ - 3) throw std::out_of_range("u_i needs 0 <= i <= m-3");
        const std::size_t w = static_cast<std::size_t>(n_ - 2);
        MatrixR out(static_cast<std::size_t>(m_ - 2) * w, w);
        const std::size_t row = static_cast<std::size_t>(i) * w + static_cast<std::size_t>(m_) - 1;
        for (std::size_t c = 0; c < w; ++c) out.set(row, c, var(M_.top[c].flat));
        return BlockR::leaf(std::move(out), "u_" + std::to_string(i));
    }

    /// (p-2)(n-2) x (n-2), minus the bottom row of M in row i(n-2)+m-1 (1-based).
    BlockRPtr v_block(int i) const {
        if (i < 0 || i > p_ - 3) throw std::out_of_range("v_i needs 0 <= i <= p-3");
        const std::size_t w = static_cast<std::size_t>(n_ - 2);
        MatrixR out(static_cast<std::size_t>(p_ - 2) * w, w);
        const std::size_t row = static_cast<std::size_t>(i) * w + static_cast<std::size_t>(m_) - 2;
        for (std::size_t c = 0; c < w; ++c) out.set(row, c, -var(M_.bottom[c].flat));
        return BlockR::leaf(std::move(out), "v_" + std::to_string(i));
    }

    /// Three row bands: (m-2) copies of phi1 with the u's in the middle column
    /// block; -Phi_{n-2} across the middle column block; the v's and (p-2)
    /// copies of phi1. Inside the middle block the u's take the first (m-2)(n-2)
    /// columns and the v's the last (p-2)(n-2), with an (n-2)-wide gap between.
    BlockRPtr phi2() const {
        const std::size_t w = static_cast<std::size_t>(n_ - 2);
        const BlockRPtr f1 = phi1();
        const std::size_t h1 = f1->rows(), w1 = f1->cols();
        const std::size_t mm = static_cast<std::size_t>(m_ - 2), pp = static_cast<std::size_t>(p_ - 2);
        const std::size_t cm = mm * w1, rm = mm * h1;
        std::vector<BlockR::Placement> parts;
        for (std::size_t t = 0; t < mm; ++t) parts.push_back({f1, t * h1, t * w1, 1});
        for (int i = 0; i <= m_ - 3; ++i) parts.push_back({u_block(i), 0, cm + static_cast<std::size_t>(i) * w, 1});
        parts.push_back({Phi(n_ - 2), rm, cm, -1});
        for (int i = 0; i <= p_ - 3; ++i)
            parts.push_back({v_block(i), rm + h1, cm + (mm + 1 + static_cast<std::size_t>(i)) * w, 1});
        for (std::size_t t = 0; t < pp; ++t) parts.push_back({f1, rm + h1 + t * h1, cm + w1 + t * w1, 1});
        return BlockR::assembled(w * static_cast<std::size_t>(n_ - 3), w1 * static_cast<std::size_t>(n_ - 3), std::move(parts), "phi_2");
    }

    /// phi_i for i >= 3 is phi_{i-1}^(m-2) + phi_{i-2}^(n-3) + phi_{i-1}^(p-2).
    /// Returns phi_0..phi_imax sharing subtrees.
    std::vector<BlockRPtr> phis(int imax) const {
        if (imax < 0) throw std::invalid_argument("phi_i needs i >= 0");
        std::vector<BlockRPtr> f;
        f.push_back(phi0());
        if (imax >= 1) f.push_back(phi1());
        if (imax >= 2) f.push_back(phi2());
        for (int i = 3; i <= imax; ++i)
            f.push_back(BlockR::direct_sum({{f[static_cast<std::size_t>(i - 1)], static_cast<std::size_t>(m_ - 2)},
                                            {f[static_cast<std::size_t>(i - 2)], static_cast<std::size_t>(n_ - 3)},
                                            {f[static_cast<std::size_t>(i - 1)], static_cast<std::size_t>(p_ - 2)}},
                                           "phi_" + std::to_string(i)));
        return f;
    }

    BlockRPtr phi(int i) const { return phis(i).back(); }

    /// Differentials d_{T,0}..d_{T,last} of the resolution of J, I1 or I2.
    std::vector<BlockRPtr> ideal_differentials(ResolutionTarget target, int last) const {
        if (target == ResolutionTarget::Field) throw std::invalid_argument("ideal_differentials: target must be J, I1 or I2");
        if (last < 0) throw std::invalid_argument("ideal_differentials: negative step");
        const std::string tag = to_string(target);
        std::vector<BlockRPtr> steps;
        // generators
        MatrixR gens(1, 0);
        if (target == ResolutionTarget::J) {
            gens = MatrixR(1, static_cast<std::size_t>(n_ - 1));
            for (int c = 0; c < m_; ++c) gens.set(0, static_cast<std::size_t>(c), product(c, m_));
            for (int t = 0; t + 1 < p_; ++t) gens.set(0, static_cast<std::size_t>(m_ + t), product(m_ - 1, m_ + 1 + t));
        } else {
            const int lo = target == ResolutionTarget::I1 ? 0 : m_;
            const int cnt = target == ResolutionTarget::I1 ? m_ : p_;
            gens = MatrixR(1, static_cast<std::size_t>(cnt));
            for (int c = 0; c < cnt; ++c) gens.set(0, static_cast<std::size_t>(c), var(lo + c));
        }
        steps.push_back(BlockR::leaf(std::move(gens), "d_" + tag + ",0"));
        if (last == 0) return steps;
        const int first_size = target == ResolutionTarget::J ? n_ - 1 : (target == ResolutionTarget::I1 ? m_ : p_);
        const std::size_t copies = static_cast<std::size_t>(first_size - 1);
        steps.push_back(BlockR::assembled(static_cast<std::size_t>(first_size), copies * static_cast<std::size_t>(n_ - 2),
                                          {{Phi(first_size), 0, 0, 1}}, "d_" + tag + ",1"));
        if (last == 1) return steps;
        const auto f = phis(last - 1);
        for (int i = 2; i <= last; ++i)
            steps.push_back(BlockR::direct_sum({{f[static_cast<std::size_t>(i - 1)], copies}}, "d_" + tag + "," + std::to_string(i)));
        return steps;
    }

    /// alpha_0: n x (n-1); alpha_i: x_{m+1} * identity on the I1 part and
    /// -x_m * identity on the I2 part.
    BlockRPtr alpha(int i) const {
        if (i < 0) throw std::invalid_argument("alpha_i needs i >= 0");
        const std::size_t m = static_cast<std::size_t>(m_), p = static_cast<std::size_t>(p_);
        if (i == 0) {
            MatrixR a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_ - 1));
            for (std::size_t r = 0; r < m; ++r) a.set(r, r, var(m_));
            for (std::size_t t = 0; t + 1 < p; ++t) a.set(m - 1, m + t, var(m_ + 1 + static_cast<int>(t)));
            for (std::size_t c = 0; c < m; ++c) a.set(m, c, -var(static_cast<int>(c)));
            for (std::size_t r = 1; r < p; ++r) a.set(m + r, m + r - 1, -var(m_ - 1));
            return BlockR::leaf(std::move(a), "alpha_0");
        }
        std::size_t scale = static_cast<std::size_t>(n_ - 2);
        for (int t = 1; t < i; ++t) scale *= static_cast<std::size_t>(n_ - 3);
        const std::size_t top = (m - 1) * scale, bottom = (p - 1) * scale;
        MatrixR a(top + bottom, top + bottom);
        for (std::size_t r = 0; r < top; ++r) a.push(r, r, var(m_));
        for (std::size_t r = 0; r < bottom; ++r) a.push(top + r, top + r, -var(m_ - 1));
        return BlockR::leaf(std::move(a), "alpha_" + std::to_string(i));
    }

    /// d_1..d_last of the resolution of the residue field.
    std::vector<BlockRPtr> field_differentials(int last) const {
        if (last < 1) throw std::invalid_argument("field resolution needs at least one step");
        std::vector<BlockRPtr> steps;
        MatrixR d1(1, static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d1.set(0, static_cast<std::size_t>(v), var(v));
        steps.push_back(BlockR::leaf(std::move(d1), "d_1"));
        if (last == 1) return steps;
        const auto i1 = ideal_differentials(ResolutionTarget::I1, last - 1);
        const auto i2 = ideal_differentials(ResolutionTarget::I2, last - 1);
        const auto jj = ideal_differentials(ResolutionTarget::J, last > 2 ? last - 2 : 0);
        for (int s = 2; s <= last; ++s) {
            const int i = s - 1;  // d_{i+1} uses d_{I,i}, alpha_{i-1}, d_{J,i-1}
            const BlockRPtr& a1 = i1[static_cast<std::size_t>(i)];
            const BlockRPtr& a2 = i2[static_cast<std::size_t>(i)];
            const BlockRPtr al = alpha(i - 1);
            const std::size_t top_rows = a1->rows() + a2->rows();
            const std::size_t left_cols = a1->cols() + a2->cols();
            std::vector<BlockR::Placement> parts{{a1, 0, 0, 1}, {a2, a1->rows(), a1->cols(), 1}, {al, 0, left_cols, 1}};
            std::size_t rows = top_rows;
            if (i >= 2) {
                const BlockRPtr& dj = jj[static_cast<std::size_t>(i - 1)];
                parts.push_back({dj, top_rows, left_cols, -1});
                rows += dj->rows();
            }
            steps.push_back(BlockR::assembled(rows, left_cols + al->cols(), std::move(parts), "d_" + std::to_string(s)));
        }
        return steps;
    }

    MatrixR phi0_matrix() const {
        MatrixR out(2, M_.cols());
        for (std::size_t c = 0; c < M_.cols(); ++c) {
            out.set(0, c, var(M_.bottom[c].flat));
            out.set(1, c, -var(M_.top[c].flat));
        }
        return out;
    }

private:
    Element var(int v) const { return Element::monomial(Monomial::variable(n_, v), Rational(1)); }
    Element product(int a, int b) const {
        return Element::monomial(Monomial::variable(n_, a) * Monomial::variable(n_, b), Rational(1));
    }

    ScrollSpec spec_;
    ScrollMatrix M_;
    int n_ = 0, m_ = 0, p_ = 0;
};

/// A finite stretch of a resolution: differentials with consecutive indices
/// starting at `first_index` (1 for the field, 0 for the ideals).
class Resolution {
public:
    Resolution(ScrollSpec spec, ResolutionTarget target, int first_index, std::vector<BlockRPtr> steps)
        : spec_(std::move(spec)), target_(target), first_index_(first_index), steps_(std::move(steps)) {
        for (std::size_t s = 1; s < steps_.size(); ++s)
            if (steps_[s - 1]->cols() != steps_[s]->rows())
                throw std::logic_error("resolution steps do not chain at " + steps_[s]->label());
    }

    const ScrollSpec& spec() const { return spec_; }
    ResolutionTarget target() const { return target_; }
    int first_index() const { return first_index_; }
    int last_index() const { return first_index_ + static_cast<int>(steps_.size()) - 1; }
    std::size_t size() const { return steps_.size(); }

    const BlockRPtr& block(int index) const { return steps_.at(static_cast<std::size_t>(index - first_index_)); }
    MatrixR differential(int index) const { return block(index)->expand(); }

    /// Free-module ranks: target of the first step, then the source of each step.
    std::vector<std::size_t> ranks() const {
        std::vector<std::size_t> r;
        if (steps_.empty()) return r;
        r.push_back(steps_.front()->rows());
        for (const auto& s : steps_) r.push_back(s->cols());
        return r;
    }

private:
    ScrollSpec spec_;
    ResolutionTarget target_;
    int first_index_;
    std::vector<BlockRPtr> steps_;
};

// Free-function front ends returning expanded matrices.

inline MatrixR phi0(const ScrollSpec& spec) { return K2Construction(spec).phi0_matrix(); }

inline MatrixR Phi(const ScrollSpec& spec, int d) {
    if (d < 2) throw std::invalid_argument("Phi_d needs d >= 2");
    return K2Construction(spec).Phi(d)->expand();
}

inline MatrixR phi1(const ScrollSpec& spec) { return K2Construction(spec).phi1()->expand(); }
inline MatrixR u_block(const ScrollSpec& spec, int i) { return K2Construction(spec).u_block(i)->expand(); }
inline MatrixR v_block(const ScrollSpec& spec, int i) { return K2Construction(spec).v_block(i)->expand(); }
inline MatrixR phi2(const ScrollSpec& spec) { return K2Construction(spec).phi2()->expand(); }
inline MatrixR phi(const ScrollSpec& spec, int i) { return K2Construction(spec).phi(i)->expand(); }
inline MatrixR alpha(const ScrollSpec& spec, int i) { return K2Construction(spec).alpha(i)->expand(); }

/// Steps d_{T,0}..d_{T,N} for T in {J, I1, I2}.
inline Resolution resolution_of(const ScrollSpec& spec, ResolutionTarget target, int N) {
    if (N < 1) throw std::invalid_argument("resolution_of needs N >= 1");
    return Resolution(spec, target, 0, K2Construction(spec).ideal_differentials(target, N));
}

/// Steps d_1..d_N of the resolution of the residue field.
inline Resolution field_resolution(const ScrollSpec& spec, int N) {
    return Resolution(spec, ResolutionTarget::Field, 1, K2Construction(spec).field_differentials(N));
}

}  // namespace scrollres
