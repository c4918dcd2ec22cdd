#pragma once

// Exact arithmetic in R = S / I_2(M). The 2x2 minors of M are a Groebner basis
// for the lex order x_{1,1} > x_{1,2} > ... > x_{k,m_k}, with leading terms the
// main-diagonal products. Every rewrite replaces a monomial by a single
// lex-smaller monomial, so normal forms of monomials are monomials.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coefficients.hpp"
#include "monomial.hpp"
#include "scroll.hpp"

namespace scrollres {

/// A polynomial whose monomials are all standard, kept in lex-descending order
/// with no zero coefficients. Only ScrollRing produces these from arbitrary
/// polynomials; sums and scalar multiples of normal forms stay normal.
template <class C>
class RingElement {
public:
    using Term = std::pair<Monomial, C>;

    RingElement() = default;

    /// Caller guarantees the monomials are standard. Sorts, merges and drops zeros.
    static RingElement from_standard_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
        RingElement e;
        for (auto& t : terms) {
            if (!e.terms_.empty() && e.terms_.back().first == t.first)
                e.terms_.back().second += t.second;
            else
                e.terms_.push_back(std::move(t));
        }
        e.drop_zeros();
        return e;
    }

    static RingElement monomial(const Monomial& m, const C& coeff) {
        RingElement e;
        if (!scrollres::is_zero(coeff)) e.terms_.emplace_back(m, coeff);
        return e;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool has_constant_term() const {
        return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.is_one(); });
    }

    /// Degree if homogeneous, -1 for zero, -2 for inhomogeneous elements.
    int homogeneous_degree() const {
        if (terms_.empty()) return -1;
        int d = terms_.front().first.degree();
        for (const auto& t : terms_)
            if (t.first.degree() != d) return -2;
        return d;
    }

    RingElement operator+(const RingElement& o) const {
        RingElement r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
                r.terms_.push_back(*a++);
            } else if (a == terms_.end() || b->first > a->first) {
                r.terms_.push_back(*b++);
            } else {
                C c = a->second + b->second;
                if (!scrollres::is_zero(c)) r.terms_.emplace_back(a->first, c);
                ++a;
                ++b;
            }
        }
        return r;
    }

    RingElement operator-() const {
        RingElement r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    RingElement operator-(const RingElement& o) const { return *this + (-o); }
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }

    RingElement scaled(const C& c) const {
        if (scrollres::is_zero(c)) return {};
        RingElement r = *this;
        for (auto& t : r.terms_) t.second *= c;
        r.drop_zeros();
        return r;
    }

    template <class F>
    auto map_coefficients(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        std::vector<typename RingElement<D>::Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.emplace_back(t.first, f(t.second));
        return RingElement<D>::from_standard_terms(std::move(out));
    }

    friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

    /// Canonical text form, terms lex-descending: "x1*x6 - x2*x5", "-x3", "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [mono, c] : terms_) {
            bool neg = false;
            std::string mag;
            if constexpr (std::is_same_v<C, Rational>) {
                neg = c < 0;
                Rational a = neg ? Rational(-c) : c;
                mag = a == 1 ? "" : a.str();
            } else {
                mag = is_one(c) ? "" : to_string(c);
            }
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (mono.is_one())
                s += mag.empty() ? "1" : mag;
            else
                s += mag.empty() ? mono.str() : mag + "*" + mono.str();
            first = false;
        }
        return s;
    }

private:
    void drop_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return scrollres::is_zero(t.second); }),
                     terms_.end());
    }

    std::vector<Term> terms_;
};

using Element = RingElement<Rational>;
using ElementModP = RingElement<Zp>;

/// A pair of variables (a < b, flat 0-based) whose product is a leading term of
/// a minor, i.e. a generator of the initial ideal D.
struct ReduciblePair {
    int a = 0;
    int b = 0;
    friend bool operator==(const ReduciblePair&, const ReduciblePair&) = default;
};

/// The coordinate ring R of a scroll with its normal-form engine.
class ScrollRing {
public:
    explicit ScrollRing(ScrollSpec spec) : spec_(std::move(spec)) {
        if (spec_.n() > kMaxVars) throw ScrollError("ring arithmetic supports at most " + std::to_string(kMaxVars) + " variables");
    }

    const ScrollSpec& spec() const { return spec_; }
    int nvars() const { return spec_.n(); }

    /// True iff x_a * x_b (a < b) is a main-diagonal product of M.
    bool is_leading_pair(int a, int b) const {
        if (a > b) std::swap(a, b);
        const VarIndex& u = spec_.var(a);
        const VarIndex& v = spec_.var(b);
        if (u.block == v.block) return v.pos >= u.pos + 2;
        return u.pos + 1 < spec_.block_size(u.block) && v.pos >= 1;
    }

    /// Membership in D, checked directly on the support.
    bool is_standard(const Monomial& mono) const {
        check(mono);
        return !first_reducible_pair(mono).has_value();
    }

    std::vector<ReduciblePair> reducible_pairs(const Monomial& mono) const {
        check(mono);
        std::vector<ReduciblePair> out;
        for (int a = 0; a < nvars(); ++a) {
            if (!mono[a]) continue;
            for (int b = a + 1; b < nvars(); ++b)
                if (mono[b] && is_leading_pair(a, b)) out.push_back({a, b});
        }
        return out;
    }

    /// Replaces x_a*x_b by the antidiagonal product of the same minor, `times` times.
    Monomial apply_minor(const Monomial& mono, ReduciblePair pr, int times = 1) const {
        if (!is_leading_pair(pr.a, pr.b)) throw std::invalid_argument("apply_minor: not a leading term of a minor");
        if (mono[pr.a] < times || mono[pr.b] < times) throw std::invalid_argument("apply_minor: pair does not divide monomial");
        // x_{i,j} x_{r,s} -> x_{i,j+1} x_{r,s-1}, both for i == r and for i < r.
        Monomial out = mono;
        out.set(pr.a, out[pr.a] - times);
        out.set(pr.b, out[pr.b] - times);
        out.set(pr.a + 1, out[pr.a + 1] + times);
        out.set(pr.b - 1, out[pr.b - 1] + times);
        return out;
    }

    Monomial normal_form(Monomial mono) const {
        check(mono);
        while (auto pr = first_reducible_pair(mono)) mono = apply_minor(mono, *pr, std::min(mono[pr->a], mono[pr->b]));
        return mono;
    }

    /// Rewrites with an arbitrary choice of reducible pair at each step; used to
    /// exercise confluence.
    template <class URBG>
    Monomial normal_form_random(Monomial mono, URBG& rng) const {
        check(mono);
        while (true) {
            auto pairs = reducible_pairs(mono);
            if (pairs.empty()) return mono;
            std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
            mono = apply_minor(mono, pairs[pick(rng)]);
        }
    }

    /// Normal form of an arbitrary polynomial given as (monomial, coefficient)
    /// terms. Each rewrite maps a monomial to a single lex-smaller monomial, so
    /// reducing term by term gives the same result as reducing the lex-largest
    /// reducible term first.
    template <class C>
    RingElement<C> normal_form(const std::vector<std::pair<Monomial, C>>& raw) const {
        std::vector<std::pair<Monomial, C>> reduced;
        reduced.reserve(raw.size());
        for (const auto& [mono, c] : raw) reduced.emplace_back(normal_form(mono), c);
        return RingElement<C>::from_standard_terms(std::move(reduced));
    }

    template <class C>
    RingElement<C> multiply(const RingElement<C>& a, const RingElement<C>& b) const {
        std::vector<std::pair<Monomial, C>> prod;
        prod.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) prod.emplace_back(normal_form(ma * mb), ca * cb);
        return RingElement<C>::from_standard_terms(std::move(prod));
    }

    template <class C = Rational>
    RingElement<C> variable(int var, const C& coeff = C(1)) const {
        return RingElement<C>::monomial(Monomial::variable(nvars(), var), coeff);
    }

    template <class C = Rational>
    RingElement<C> element(const Monomial& mono, const C& coeff = C(1)) const {
        return RingElement<C>::monomial(normal_form(mono), coeff);
    }

    Monomial one() const { return Monomial(nvars()); }

    MultiDegree adegree(const Monomial& mono) const { return scrollres::adegree(mono, spec_); }

    /// Standard monomials of degree d, lex-descending. A standard monomial is
    /// supported on: the last variable of each block before some pivot block,
    /// two adjacent variables of the pivot block, and the first variable of
    /// each later block. Enumerated from that shape, not by filtering.
    std::vector<Monomial> standard_monomials(int d) const {
        if (d < 0) throw std::invalid_argument("standard_monomials: negative degree");
        const int k = spec_.k();
        std::set<Monomial, std::greater<>> out;
        std::vector<int> support(static_cast<std::size_t>(k + 1));
        for (int pivot = 0; pivot < k; ++pivot)
            for (int l = 0; l + 1 < spec_.block_size(pivot); ++l) {
                std::size_t s = 0;
                for (int i = 0; i < k; ++i) {
                    if (i < pivot) support[s++] = spec_.flat(i, spec_.block_size(i) - 1);
                    else if (i > pivot) support[s++] = spec_.flat(i, 0);
                    else {
                        support[s++] = spec_.flat(i, l);
                        support[s++] = spec_.flat(i, l + 1);
                    }
                }
                distribute(support, d, out);
            }
        return {out.begin(), out.end()};
    }

private:
    void check(const Monomial& mono) const {
        if (mono.nvars() != nvars()) throw std::invalid_argument("monomial lives in a different ring");
    }

    // Per block only the extreme positions of the support matter: a block with
    // positions spread by >= 2 contains a same-block generator, and a pair of
    // blocks i < r is reducible iff block i uses a non-final position and block
    // r uses a non-initial one.
    std::optional<ReduciblePair> first_reducible_pair(const Monomial& mono) const {
        const int k = spec_.k();
        for (int i = 0; i < k; ++i) {
            int lo = -1, hi = -1;
            for (int j = 0; j < spec_.block_size(i); ++j)
                if (mono[spec_.flat(i, j)]) {
                    if (lo < 0) lo = j;
                    hi = j;
                }
            if (lo < 0) continue;
            if (hi >= lo + 2) return ReduciblePair{spec_.flat(i, lo), spec_.flat(i, hi)};
            if (lo + 1 < spec_.block_size(i)) {
                for (int r = i + 1; r < k; ++r)
                    for (int s = spec_.block_size(r) - 1; s >= 1; --s)
                        if (mono[spec_.flat(r, s)]) return ReduciblePair{spec_.flat(i, lo), spec_.flat(r, s)};
            }
        }
        return std::nullopt;
    }

    void distribute(const std::vector<int>& support, int d, std::set<Monomial, std::greater<>>& out) const {
        std::vector<int> exps(support.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
            if (idx + 1 == support.size()) {
                exps[idx] = left;
                Monomial m(nvars());
                for (std::size_t t = 0; t < support.size(); ++t)
                    if (exps[t]) m.set(support[t], m[support[t]] + exps[t]);
                out.insert(m);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exps[idx] = e;
                rec(idx + 1, left - e);
            }
        };
        rec(0, d);
    }

    ScrollSpec spec_;
};

}  // namespace scrollres
