#pragma once

// The Stanley-Reisner complex of the initial ideal, its face numbers, and the
// Hilbert and Poincare series of R.
//
// Betti numbers of the residue field:
//     beta_i = sum_{j=0}^{i} C(k+1, j) (n-k-1)^(i-j)
// which is the coefficient sequence of (1+t)^(k+1) / (1 - (n-k-1) t).
//
// The tail form beta_{k+r} = (n-k-1)^(r-1) (n-k)^(k+1) only holds for r >= 1.
// At r = 0 the sum gives ((n-k)^(k+1) - 1) / (n-k-1) instead (e.g. 21, not
// 64/3, for blocks (3,3)), so betti_tail() rejects r = 0.

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "monomial.hpp"
#include "scroll.hpp"
#include "series.hpp"

namespace scrollres {

/// f[d + 1] is the number of d-dimensional faces, d = -1..k.
struct FaceVector {
    std::vector<BigInt> f;
    const BigInt& at_dim(int d) const { return f.at(static_cast<std::size_t>(d + 1)); }
    friend bool operator==(const FaceVector&, const FaceVector&) = default;
};

/// Squarefree quadratic generators of D, lex-descending.
inline std::vector<Monomial> initial_ideal_generators(const ScrollSpec& spec) {
    const int n = spec.n();
    std::set<Monomial, std::greater<>> gens;
    for (int i = 0; i < spec.k(); ++i) {
        for (int j = 0; j < spec.block_size(i); ++j)
            for (int l = j + 2; l < spec.block_size(i); ++l)
                gens.insert(Monomial::variable(n, spec.flat(i, j)) * Monomial::variable(n, spec.flat(i, l)));
        for (int r = i + 1; r < spec.k(); ++r)
            for (int j = 0; j + 1 < spec.block_size(i); ++j)
                for (int s = 1; s < spec.block_size(r); ++s)
                    gens.insert(Monomial::variable(n, spec.flat(i, j)) * Monomial::variable(n, spec.flat(r, s)));
    }
    return {gens.begin(), gens.end()};
}

/// A face as sorted flat vertex indices (vertex (i,j) is variable x_{i,j}).
using Face = std::vector<int>;

/// Facets {(1,m1), ..., (i-1,m_{i-1}), (i,j), (i,j+1), (i+1,1), ..., (k,1)}.
inline std::vector<Face> delta_facets(const ScrollSpec& spec) {
    std::vector<Face> facets;
    for (int i = 0; i < spec.k(); ++i)
        for (int j = 0; j + 1 < spec.block_size(i); ++j) {
            Face f;
            for (int b = 0; b < i; ++b) f.push_back(spec.flat(b, spec.block_size(b) - 1));
            f.push_back(spec.flat(i, j));
            f.push_back(spec.flat(i, j + 1));
            for (int b = i + 1; b < spec.k(); ++b) f.push_back(spec.flat(b, 0));
            facets.push_back(std::move(f));
        }
    return facets;
}

/// Face numbers by listing every subset of every facet.
inline FaceVector face_numbers_enumerated(const ScrollSpec& spec) {
    if (spec.n() > 64) throw std::invalid_argument("face enumeration supports at most 64 vertices");
    std::unordered_set<std::uint64_t> faces;
    for (const Face& facet : delta_facets(spec)) {
        const std::size_t sz = facet.size();
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << sz); ++sub) {
            std::uint64_t mask = 0;
            for (std::size_t t = 0; t < sz; ++t)
                if (sub >> t & 1) mask |= std::uint64_t{1} << facet[t];
            faces.insert(mask);
        }
    }
    FaceVector fv;
    fv.f.assign(static_cast<std::size_t>(spec.k() + 2), 0);
    for (std::uint64_t mask : faces) {
        std::size_t card = static_cast<std::size_t>(std::popcount(mask));
        if (card >= fv.f.size()) throw std::logic_error("face larger than a facet");
        fv.f[card] += 1;
    }
    return fv;
}

/// f_d = C(k,d) n - d C(k+1,d+1).
inline FaceVector face_numbers_formula(const ScrollSpec& spec) {
    const long long k = spec.k(), n = spec.n();
    FaceVector fv;
    for (long long d = -1; d <= k; ++d) {
        BigInt first = d < 0 ? BigInt(0) : binomial(k, d) * n;
        fv.f.push_back(first - BigInt(d) * binomial(k + 1, d + 1));
    }
    return fv;
}

/// Both routes must agree; a mismatch is an internal error.
inline FaceVector face_numbers(const ScrollSpec& spec) {
    FaceVector by_count = face_numbers_enumerated(spec);
    FaceVector by_formula = face_numbers_formula(spec);
    if (!(by_count == by_formula))
        throw std::logic_error("face numbers: enumeration disagrees with closed formula for blocks " + spec.blocks_string());
    return by_formula;
}

/// sum_{d=0}^{k+1} f_{d-1} t^d (1-t)^{k+1-d}: numerator of Hilb(S/D; t) over (1-t)^{k+1}.
inline IntPoly stanley_reisner_numerator(const ScrollSpec& spec, const FaceVector& fv) {
    const int k = spec.k();
    IntPoly acc;
    for (int d = 0; d <= k + 1; ++d) {
        IntPoly term(static_cast<std::size_t>(d + 1), 0);
        term[static_cast<std::size_t>(d)] = fv.at_dim(d - 1);
        acc = poly_add(acc, poly_mul(term, poly_pow({1, -1}, static_cast<unsigned>(k + 1 - d))));
    }
    return acc;
}

/// Hilb(R; t) = (1 + (n-k-1) t) / (1-t)^{k+1}; checked against the
/// Stanley-Reisner sum over the enumerated f-vector.
inline RationalForm hilbert_series(const ScrollSpec& spec) {
    const int k = spec.k();
    RationalForm h;
    h.numerator = trimmed({1, BigInt(spec.n() - k - 1)});
    h.denominator = poly_pow({1, -1}, static_cast<unsigned>(k + 1));
    if (stanley_reisner_numerator(spec, face_numbers(spec)) != h.numerator)
        throw std::logic_error("Hilbert series: Stanley-Reisner numerator disagrees with closed form for blocks " +
                               spec.blocks_string());
    return h;
}

/// dim_k R_d for d = 0..order.
inline IntSeries hilbert_coeffs(const ScrollSpec& spec, int order) {
    RationalForm h = hilbert_series(spec);
    return series_divide(h.numerator, h.denominator, order);
}

/// P_R(t) = 1 / Hilb(R; -t) = (1+t)^{k+1} / (1 - (n-k-1) t), truncated.
inline IntSeries poincare_coeffs(const ScrollSpec& spec, int order) {
    RationalForm h = hilbert_series(spec);
    return series_divide(poly_negate_variable(h.denominator), poly_negate_variable(h.numerator), order);
}

inline BigInt betti(const ScrollSpec& spec, int i) {
    if (i < 0) throw std::invalid_argument("betti: negative homological index");
    const long long k = spec.k();
    const BigInt base = spec.n() - k - 1;
    BigInt sum = 0;
    for (long long j = 0; j <= i; ++j) sum += binomial(k + 1, j) * power(base, static_cast<unsigned>(i - j));
    return sum;
}

/// beta_{k+r} = (n-k-1)^{r-1} (n-k)^{k+1}, valid for r >= 1 only.
inline BigInt betti_tail(const ScrollSpec& spec, int r) {
    if (r < 1) throw std::invalid_argument("betti_tail: the closed tail form holds for r >= 1 only");
    const int k = spec.k();
    return power(spec.n() - k - 1, static_cast<unsigned>(r - 1)) * power(spec.n() - k, static_cast<unsigned>(k + 1));
}

/// Hilb(R; -t) * P_R(t) truncated at t^order, with Hilb taken from the
/// enumerated f-vector and P from the closed Betti sum. Equals 1 for Koszul R.
inline IntSeries koszul_product(const ScrollSpec& spec, int order) {
    const int k = spec.k();
    IntPoly num = stanley_reisner_numerator(spec, face_numbers_enumerated(spec));
    IntSeries hilb_neg = series_divide(poly_negate_variable(num), poly_negate_variable(poly_pow({1, -1}, static_cast<unsigned>(k + 1))), order);
    IntSeries p;
    for (int i = 0; i <= order; ++i) p.coeffs.push_back(betti(spec, i));
    return series_mul(hilb_neg, p);
}

}  // namespace scrollres
