#pragma once

// Block sizes of a scroll and the symbolic data derived from them: the 2 x (n-k)
// matrix whose 2x2 minors cut out the scroll, the toric matrix A, and the
// binomial generators of the ideal.

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monomial.hpp"

namespace scrollres {

class ScrollError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A variable x_{block,pos}; all three indices are 0-based. `flat` is the
/// column of A, i.e. x1..xn in the order x_{1,1}, ..., x_{1,m1}, x_{2,1}, ...
struct VarIndex {
    int block = 0;
    int pos = 0;
    int flat = 0;
    friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

/// Block sizes (m1,...,mk) of the scroll S(m1-1,...,mk-1).
class ScrollSpec {
public:
    explicit ScrollSpec(std::vector<int> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw ScrollError("scroll needs at least one block");
        for (int m : blocks_)
            if (m < 2) throw ScrollError("every block size must be >= 2 (got " + std::to_string(m) + ")");
        offsets_.resize(blocks_.size());
        int off = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            offsets_[i] = off;
            off += blocks_[i];
        }
        n_ = off;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            for (int j = 0; j < blocks_[i]; ++j) vars_.push_back({static_cast<int>(i), j, offsets_[i] + j});
    }

    const std::vector<int>& blocks() const { return blocks_; }
    int k() const { return static_cast<int>(blocks_.size()); }
    int n() const { return n_; }
    int block_size(int block) const { return blocks_.at(static_cast<std::size_t>(block)); }
    int block_offset(int block) const { return offsets_.at(static_cast<std::size_t>(block)); }

    /// For 2-scrolls: m = m1 and p = m2 = n - m.
    int m() const { require_k2(); return blocks_[0]; }
    int p() const { require_k2(); return blocks_[1]; }

    void require_k2() const {
        if (k() != 2) throw ScrollError("this construction is only defined for 2-scrolls (k = 2), got k = " + std::to_string(k()));
    }

    const VarIndex& var(int flat) const { return vars_.at(static_cast<std::size_t>(flat)); }
    int flat(int block, int pos) const {
        if (pos < 0 || pos >= block_size(block)) throw std::out_of_range("position outside block");
        return block_offset(block) + pos;
    }

    /// Geometric label, e.g. "S(2,2)" for blocks (3,3).
    std::string label() const {
        std::string s = "S(";
        for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i] - 1);
        return s + ")";
    }

    /// Comma-separated block sizes, e.g. "3,3".
    std::string blocks_string() const {
        std::string s;
        for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
        return s;
    }

    friend bool operator==(const ScrollSpec& a, const ScrollSpec& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<int> blocks_;
    std::vector<int> offsets_;
    std::vector<VarIndex> vars_;
    int n_ = 0;
};

inline ScrollSpec build_scroll(std::vector<int> blocks) { return ScrollSpec(std::move(blocks)); }

/// Parses "3,3" or "4, 3". Rejects empty lists, non-integers and blocks < 2.
inline ScrollSpec parse_scroll(std::string_view text) {
    std::vector<int> blocks;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw ScrollError("malformed scroll list '" + std::string(text) + "'");
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ScrollError("block size '" + std::string(tok) + "' is not an integer");
        blocks.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ScrollSpec(std::move(blocks));
}

/// The 2 x (n-k) matrix M; column c of block i is (x_{i,j}, x_{i,j+1}).
struct ScrollMatrix {
    std::vector<VarIndex> top;
    std::vector<VarIndex> bottom;
    std::size_t cols() const { return top.size(); }
};

inline ScrollMatrix scroll_matrix(const ScrollSpec& spec) {
    ScrollMatrix M;
    for (int i = 0; i < spec.k(); ++i)
        for (int j = 0; j + 1 < spec.block_size(i); ++j) {
            M.top.push_back(spec.var(spec.flat(i, j)));
            M.bottom.push_back(spec.var(spec.flat(i, j + 1)));
        }
    return M;
}

/// (k+1) x n matrix: block indicators, then the position weights 0..m_i-1.
inline std::vector<std::vector<int>> toric_matrix(const ScrollSpec& spec) {
    std::vector<std::vector<int>> A(static_cast<std::size_t>(spec.k() + 1), std::vector<int>(static_cast<std::size_t>(spec.n()), 0));
    for (int v = 0; v < spec.n(); ++v) {
        const VarIndex& x = spec.var(v);
        A[static_cast<std::size_t>(x.block)][static_cast<std::size_t>(v)] = 1;
        A[static_cast<std::size_t>(spec.k())][static_cast<std::size_t>(v)] = x.pos;
    }
    return A;
}

/// A multidegree A*u.
using MultiDegree = std::vector<int>;

inline MultiDegree adegree(const Monomial& mono, const ScrollSpec& spec) {
    if (mono.nvars() != spec.n()) throw std::invalid_argument("adegree: monomial lives in a different ring");
    MultiDegree d(static_cast<std::size_t>(spec.k() + 1), 0);
    for (int v = 0; v < spec.n(); ++v) {
        int e = mono[v];
        if (!e) continue;
        const VarIndex& x = spec.var(v);
        d[static_cast<std::size_t>(x.block)] += e;
        d[static_cast<std::size_t>(spec.k())] += e * x.pos;
    }
    return d;
}

/// plus - minus, where plus is the product along the main diagonal of a 2x2
/// minor of M (its lex-leading term).
struct Binomial {
    Monomial plus;
    Monomial minus;
    std::string str() const { return plus.str() + " - " + minus.str(); }
    friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline std::vector<Binomial> minor_generators(const ScrollSpec& spec) {
    const ScrollMatrix M = scroll_matrix(spec);
    const int n = spec.n();
    std::vector<Binomial> gens;
    for (std::size_t a = 0; a < M.cols(); ++a)
        for (std::size_t b = a + 1; b < M.cols(); ++b) {
            Monomial plus = Monomial::variable(n, M.top[a].flat) * Monomial::variable(n, M.bottom[b].flat);
            Monomial minus = Monomial::variable(n, M.bottom[a].flat) * Monomial::variable(n, M.top[b].flat);
            if (plus == minus) continue;
            if (plus < minus) std::swap(plus, minus);
            Binomial g{plus, minus};
            if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
        }
    return gens;
}

}  // namespace scrollres
