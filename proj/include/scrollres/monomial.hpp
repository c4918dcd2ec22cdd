#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scrollres {

/// Upper bound on the number of variables a monomial can carry.
inline constexpr int kMaxVars = 32;

/// Exponent vector over variables x1..xn (stored 0-based). Comparison is pure
/// lexicographic with x1 > x2 > ... > xn, no degree pre-comparison.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(int nvars) : n_(check_nvars(nvars)) {}

    static Monomial from_exponents(std::span<const int> exps) {
        Monomial m(static_cast<int>(exps.size()));
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > 0xFFFF) throw std::invalid_argument("Monomial: exponent out of range");
            m.e_[i] = static_cast<std::uint16_t>(exps[i]);
        }
        return m;
    }

    static Monomial variable(int nvars, int var, int power = 1) {
        Monomial m(nvars);
        m.set(var, power);
        return m;
    }

    int nvars() const { return n_; }

    int operator[](int var) const { return e_[static_cast<std::size_t>(var)]; }

    void set(int var, int power) {
        if (var < 0 || var >= n_) throw std::out_of_range("Monomial: variable index out of range");
        if (power < 0 || power > 0xFFFF) throw std::invalid_argument("Monomial: exponent out of range");
        e_[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(power);
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < n_; ++i) d += e_[static_cast<std::size_t>(i)];
        return d;
    }

    bool is_one() const { return degree() == 0; }

    std::vector<int> exponents() const { return {e_.begin(), e_.begin() + n_}; }

    bool divides(const Monomial& o) const {
        same_ring(o);
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<std::size_t>(i)] > o.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        same_ring(o);
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) {
            int s = e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)];
            if (s > 0xFFFF) throw std::overflow_error("Monomial: exponent overflow");
            r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(s);
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

    /// Lexicographic order; throws on mismatched variable counts.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        a.same_ring(b);
        return a.e_ <=> b.e_;
    }

    /// "x1^2*x3", or "1" for the unit monomial. Variables print 1-based.
    std::string str() const {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            int e = e_[static_cast<std::size_t>(i)];
            if (!e) continue;
            if (!s.empty()) s += '*';
            s += 'x' + std::to_string(i + 1);
            if (e > 1) s += '^' + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_);
        for (int i = 0; i < n_; ++i) h = h * 1000003u ^ e_[static_cast<std::size_t>(i)];
        return h;
    }

private:
    static std::uint8_t check_nvars(int n) {
        if (n < 0 || n > kMaxVars)
            throw std::invalid_argument("Monomial: at most " + std::to_string(kMaxVars) + " variables supported");
        return static_cast<std::uint8_t>(n);
    }
    void same_ring(const Monomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Monomial: mismatched variable counts");
    }

    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
};

inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) { return a <=> b; }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace scrollres
