#pragma once

// Integer polynomials and truncated power series in one variable t.

#include <stdexcept>
#include <string>
#include <vector>

#include "coefficients.hpp"

namespace scrollres {

/// Coefficients in ascending powers of t.
using IntPoly = std::vector<BigInt>;

/// First `order + 1` coefficients c_0..c_N of a power series.
struct IntSeries {
    std::vector<BigInt> coeffs;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const BigInt& operator[](std::size_t i) const { return coeffs.at(i); }
    friend bool operator==(const IntSeries&, const IntSeries&) = default;
};

/// numerator / denominator, both in t.
struct RationalForm {
    IntPoly numerator;
    IntPoly denominator;
};

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt power(const BigInt& base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline IntPoly trimmed(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trimmed(std::move(r));
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trimmed(std::move(r));
}

inline IntPoly poly_pow(const IntPoly& a, unsigned e) {
    IntPoly r{1};
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

/// p(t) -> p(-t).
inline IntPoly poly_negate_variable(IntPoly p) {
    for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
    return p;
}

inline IntSeries series_from_poly(const IntPoly& p, int order) {
    IntSeries s;
    s.coeffs.assign(static_cast<std::size_t>(order + 1), 0);
    for (std::size_t i = 0; i < p.size() && i < s.coeffs.size(); ++i) s.coeffs[i] = p[i];
    return s;
}

inline IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    const int N = std::min(a.order(), b.order());
    IntSeries r;
    r.coeffs.assign(static_cast<std::size_t>(N + 1), 0);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) r.coeffs[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return r;
}

/// Truncated series of num / den. Exact over the integers, so the constant
/// term of the denominator must be +1 or -1.
inline IntSeries series_divide(const IntPoly& num, const IntPoly& den, int order) {
    if (order < 0) throw std::invalid_argument("series_divide: negative order");
    if (den.empty() || (den[0] != 1 && den[0] != -1))
        throw std::invalid_argument("series_divide: denominator constant term must be a unit");
    IntSeries q;
    q.coeffs.assign(static_cast<std::size_t>(order + 1), 0);
    for (int i = 0; i <= order; ++i) {
        BigInt acc = static_cast<std::size_t>(i) < num.size() ? num[static_cast<std::size_t>(i)] : BigInt(0);
        for (int j = 1; j <= i && static_cast<std::size_t>(j) < den.size(); ++j)
            acc -= den[static_cast<std::size_t>(j)] * q.coeffs[static_cast<std::size_t>(i - j)];
        q.coeffs[static_cast<std::size_t>(i)] = acc * den[0];
    }
    return q;
}

inline std::string poly_str(const IntPoly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        BigInt c = p[i];
        bool neg = c < 0;
        if (neg) c = -c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (mono.empty()) s += c.str();
        else s += (c == 1 ? "" : c.str() + "*") + mono;
    }
    return s.empty() ? "0" : s;
}

}  // namespace scrollres
