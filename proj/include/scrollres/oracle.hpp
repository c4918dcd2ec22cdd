#pragma once

// Graded Betti numbers of the residue field recomputed from scratch over F_q,
// without using any of the constructed differentials.
//
// R is graded by A-degree and every A-graded piece of R is spanned by at most
// one standard monomial. A free module F = sum R(-a_g) therefore has, in
// A-degree b, the basis {s_g e_g}, one element for each generator g with b - a_g
// the degree of a standard monomial s_g. Multiplying by a monomial maps this
// basis onto the matching basis in the higher degree, so a syzygy keeps its
// coordinates when it is multiplied up. Each step of the minimal resolution is
// then a sequence of small dense kernel computations, one per A-degree.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "modp_linalg.hpp"
#include "ring.hpp"

namespace scrollres {

/// Standard monomials of one total degree, lex-descending.
struct GradedBasis {
    ScrollSpec spec;
    int degree = 0;
    std::vector<Monomial> monomials;

    std::size_t size() const { return monomials.size(); }

    std::size_t index_of(const Monomial& m) const {
        for (std::size_t i = 0; i < monomials.size(); ++i)
            if (monomials[i] == m) return i;
        throw std::out_of_range("GradedBasis: " + m.str() + " is not a standard monomial of degree " + std::to_string(degree));
    }
};

inline GradedBasis graded_basis(const ScrollSpec& spec, int d) {
    return GradedBasis{spec, d, ScrollRing(spec).standard_monomials(d)};
}

inline void require_prime_modulus(std::uint32_t q) {
    if (q < 2 || !is_prime(q)) throw std::invalid_argument("modulus " + std::to_string(q) + " is not prime");
}

/// The matrix of multiplication by x_var (1-based) from R_d to R_{d+1}.
inline DenseMatrixModP multiplication_map(const ScrollSpec& spec, int var, int d, std::uint32_t q) {
    require_prime_modulus(q);
    if (var < 1 || var > spec.n()) throw std::out_of_range("multiplication_map: variable index must be in 1..n");
    if (d < 0) throw std::invalid_argument("multiplication_map: negative degree");
    const ScrollRing ring(spec);
    const GradedBasis src = graded_basis(spec, d), dst = graded_basis(spec, d + 1);
    DenseMatrixModP out(dst.size(), src.size(), q);
    const Monomial x = Monomial::variable(spec.n(), var - 1);
    for (std::size_t c = 0; c < src.size(); ++c) out.at(dst.index_of(ring.normal_form(src.monomials[c] * x)), c) = 1;
    return out;
}

struct BettiEntry {
    int i = 0, j = 0;
    BigInt value;
};

struct BettiTable {
    std::uint32_t modulus = 0;
    std::vector<BettiEntry> entries;  // sorted by (i, j)

    BigInt at(int i, int j) const {
        for (const auto& e : entries)
            if (e.i == i && e.j == j) return e.value;
        throw std::out_of_range("BettiTable: (" + std::to_string(i) + "," + std::to_string(j) + ") outside the computed window");
    }

    bool has(int i, int j) const {
        for (const auto& e : entries)
            if (e.i == i && e.j == j) return true;
        return false;
    }

    std::string str() const {
        std::string s;
        for (const auto& e : entries)
            s += "beta(" + std::to_string(e.i) + "," + std::to_string(e.j) + ") = " + e.value.str() + "\n";
        return s;
    }
};

/// Limits on how much the oracle may build before giving up.
struct OracleLimits {
    std::size_t max_generators = 2'000'000;
    std::size_t max_piece = 4000;  // largest local dimension of one A-degree piece
};

namespace detail {

struct OracleGenerator {
    MultiDegree degree;
    int total = 0;
    std::vector<std::pair<std::size_t, std::uint32_t>> image;  // (generator of the previous level, coefficient)
};

class OracleRun {
public:
    OracleRun(const ScrollSpec& spec, int dmax, std::uint32_t q, OracleLimits limits)
        : spec_(spec), ring_(spec), dmax_(dmax), q_(q), limits_(limits) {
        by_total_.resize(static_cast<std::size_t>(dmax + 1));
        for (int t = 0; t <= dmax; ++t)
            for (const Monomial& s : ring_.standard_monomials(t)) {
                auto [it, fresh] = standard_.emplace(ring_.adegree(s), s);
                if (!fresh)
                    throw std::logic_error("oracle: two standard monomials " + it->second.str() + ", " + s.str() + " share an A-degree");
                by_total_[static_cast<std::size_t>(t)].push_back(it->first);
            }
        check_toric_products();
    }

    /// Generators of F_0..F_imax in total degrees <= dmax.
    std::vector<std::vector<OracleGenerator>> run(int imax) {
        std::vector<std::vector<OracleGenerator>> gens;
        gens.push_back({OracleGenerator{MultiDegree(static_cast<std::size_t>(spec_.k() + 1), 0), 0, {}}});
        std::size_t total = 1;
        for (int i = 0; i < imax; ++i) {
            gens.push_back(next_level(gens, i));
            total += gens.back().size();
            if (total > limits_.max_generators) throw std::runtime_error("oracle: resource guard exceeded (too many generators)");
        }
        return gens;
    }

private:
    /// x_v * s must normal-form to the standard monomial of the summed degree
    /// with coefficient 1; this is what lets syzygies keep their coordinates.
    void check_toric_products() const {
        for (int t = 0; t < dmax_; ++t)
            for (const auto& md : by_total_[static_cast<std::size_t>(t)]) {
                const Monomial& s = standard_.at(md);
                for (int v = 0; v < spec_.n(); ++v) {
                    const Monomial nf = ring_.normal_form(s * Monomial::variable(spec_.n(), v));
                    auto it = standard_.find(ring_.adegree(nf));
                    if (it == standard_.end() || !(it->second == nf))
                        throw std::logic_error("oracle: product " + s.str() + "*x" + std::to_string(v + 1) + " left the standard basis");
                }
            }
    }

    bool is_monomial_degree(const MultiDegree& md) const { return standard_.count(md) != 0; }

    static MultiDegree minus(const MultiDegree& a, const MultiDegree& b) {
        MultiDegree r(a.size());
        for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] - b[t];
        return r;
    }

    /// Indices of generators g in `level` with b - deg(g) a monomial degree.
    std::vector<std::size_t> local_basis(const std::vector<OracleGenerator>& level, const MultiDegree& b, int total) const {
        std::vector<std::size_t> out;
        for (std::size_t g = 0; g < level.size(); ++g)
            if (level[g].total <= total && is_monomial_degree(minus(b, level[g].degree))) out.push_back(g);
        return out;
    }

    std::vector<OracleGenerator> next_level(const std::vector<std::vector<OracleGenerator>>& gens, int i) const {
        const auto& cur = gens[static_cast<std::size_t>(i)];
        std::vector<OracleGenerator> found;
        for (int t = 0; t <= dmax_; ++t)
            for (const MultiDegree& b : by_total_[static_cast<std::size_t>(t)]) {
                const auto cols = local_basis(cur, b, t);
                if (cols.empty()) continue;
                if (cols.size() > limits_.max_piece) throw std::runtime_error("oracle: resource guard exceeded (piece too large)");
                std::map<std::size_t, std::size_t> col_pos;
                for (std::size_t c = 0; c < cols.size(); ++c) col_pos[cols[c]] = c;

                // kernel of F_i(b) -> F_{i-1}(b); F_{-1} is the residue field
                std::vector<ModVector> kernel;
                if (i == 0) {
                    if (t > 0) kernel.push_back(ModVector{1});
                } else {
                    const auto rows = local_basis(gens[static_cast<std::size_t>(i - 1)], b, t);
                    std::map<std::size_t, std::size_t> row_pos;
                    for (std::size_t r = 0; r < rows.size(); ++r) row_pos[rows[r]] = r;
                    DenseMatrixModP d(rows.size(), cols.size(), q_);
                    for (std::size_t c = 0; c < cols.size(); ++c)
                        for (const auto& [h, coef] : cur[cols[c]].image) d.at(row_pos.at(h), c) = coef;
                    kernel = d.kernel();
                }
                if (kernel.empty()) continue;

                // m * Z(b): earlier syzygy generators multiplied up
                EchelonBasis span(cols.size(), q_);
                for (const auto& g : found) {
                    if (g.total >= t || !is_monomial_degree(minus(b, g.degree))) continue;
                    ModVector v(cols.size(), 0);
                    for (const auto& [h, coef] : g.image) v[col_pos.at(h)] = coef;
                    span.insert(std::move(v));
                }
                if (span.size() > kernel.size()) throw std::logic_error("oracle: m*Z larger than Z");
                for (auto& z : kernel) {
                    if (!span.insert(z)) continue;
                    OracleGenerator g{b, t, {}};
                    for (std::size_t c = 0; c < cols.size(); ++c)
                        if (z[c]) g.image.push_back({cols[c], z[c]});
                    found.push_back(std::move(g));
                }
            }
        return found;
    }

    ScrollSpec spec_;
    ScrollRing ring_;
    int dmax_;
    std::uint32_t q_;
    OracleLimits limits_;
    std::map<MultiDegree, Monomial> standard_;
    std::vector<std::vector<MultiDegree>> by_total_;
};

}  // namespace detail

/// beta_{i,j} for 0 <= i <= imax and j in {i-1, i, i+1, i+2}.
inline BettiTable betti_oracle(const ScrollSpec& spec, int imax, std::uint32_t q, OracleLimits limits = {}) {
    require_prime_modulus(q);
    if (imax < 0) throw std::invalid_argument("betti_oracle: imax must be >= 0");
    const int dmax = imax + 2;
    detail::OracleRun run(spec, dmax, q, limits);
    const auto gens = run.run(imax);
    BettiTable table;
    table.modulus = q;
    for (int i = 0; i <= imax; ++i) {
        std::vector<BigInt> count(static_cast<std::size_t>(dmax + 1), 0);
        for (const auto& g : gens[static_cast<std::size_t>(i)]) count[static_cast<std::size_t>(g.total)] += 1;
        for (int j = std::max(0, i - 1); j <= i + 2; ++j) table.entries.push_back({i, j, count[static_cast<std::size_t>(j)]});
    }
    return table;
}

struct OracleComparison {
    bool pass = true;
    BettiTable oracle;
    std::vector<BigInt> formula;  // beta_0..beta_imax
    std::string details;
};

/// Oracle diagonal against the closed Betti sum; off-diagonal entries must vanish.
inline OracleComparison compare_with_formula(const ScrollSpec& spec, int imax, std::uint32_t q, OracleLimits limits = {}) {
    OracleComparison cmp;
    cmp.oracle = betti_oracle(spec, imax, q, limits);
    for (int i = 0; i <= imax; ++i) cmp.formula.push_back(betti(spec, i));
    for (const auto& e : cmp.oracle.entries) {
        const BigInt want = e.j == e.i ? cmp.formula[static_cast<std::size_t>(e.i)] : BigInt(0);
        if (e.value != want) {
            cmp.pass = false;
            cmp.details += "beta(" + std::to_string(e.i) + "," + std::to_string(e.j) + "): oracle " + e.value.str() + ", expected " +
                           want.str() + "\n";
        }
    }
    if (!cmp.pass) {
        cmp.details += "oracle table:\n" + cmp.oracle.str() + "formula:";
        for (const auto& b : cmp.formula) cmp.details += " " + b.str();
    } else {
        cmp.details = "diagonal matches and off-diagonal vanishes for i <= " + std::to_string(imax);
    }
    return cmp;
}

}  // namespace scrollres
