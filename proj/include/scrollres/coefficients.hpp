#pragma once

// Coefficient domains for ring elements: exact rationals and prime fields.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace scrollres {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    if (q % 2 == 0) return q == 2;
    for (std::uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= q ? s - q : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return a >= b ? a - b : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) + q - b);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t q) {
    std::uint32_t r = 1 % q;
    while (e) {
        if (e & 1) r = mul_mod(r, a, q);
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
    if (a % q == 0) throw std::domain_error("inverse of zero in prime field");
    return pow_mod(a, q - 2, q);
}

/// Element of the prime field F_q. The modulus travels with the value so that
/// elements from different fields are never mixed silently.
class Zp {
public:
    Zp() = default;
    Zp(std::int64_t v, std::uint32_t q) : q_(q) {
        if (q < 2) throw std::invalid_argument("Zp: modulus must be >= 2");
        std::int64_t r = v % static_cast<std::int64_t>(q);
        if (r < 0) r += q;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return q_; }

    Zp operator+(const Zp& o) const { return make(add_mod(v_, o.v_, common(o))); }
    Zp operator-(const Zp& o) const { return make(sub_mod(v_, o.v_, common(o))); }
    Zp operator*(const Zp& o) const { return make(mul_mod(v_, o.v_, common(o))); }
    Zp operator-() const { return make(v_ == 0 ? 0 : q_ - v_); }
    Zp& operator+=(const Zp& o) { return *this = *this + o; }
    Zp& operator-=(const Zp& o) { return *this = *this - o; }
    Zp& operator*=(const Zp& o) { return *this = *this * o; }
    Zp inverse() const { return make(inv_mod(v_, q_)); }

    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_ && (a.q_ == b.q_ || a.q_ == 0 || b.q_ == 0); }

private:
    std::uint32_t common(const Zp& o) const {
        // A zero built without a modulus (default-constructed) adopts the other operand's field.
        if (q_ == o.q_) return q_;
        if (q_ == 0) return o.q_;
        if (o.q_ == 0) return q_;
        throw std::domain_error("coefficient domain mismatch: F_" + std::to_string(q_) + " vs F_" +
                                std::to_string(o.q_));
    }
    Zp make(std::uint32_t v) const {
        Zp z;
        z.v_ = v;
        z.q_ = q_;
        return z;
    }

    std::uint32_t v_ = 0;
    std::uint32_t q_ = 0;
};

inline bool is_zero(const Rational& c) { return c.is_zero(); }
inline bool is_zero(const Zp& c) { return c.value() == 0; }

inline bool is_one(const Rational& c) { return c == 1; }
inline bool is_one(const Zp& c) { return c.value() == 1; }

inline bool is_minus_one(const Rational& c) { return c == -1; }
inline bool is_minus_one(const Zp& c) { return c.modulus() != 0 && c.value() == c.modulus() - 1; }

inline std::string to_string(const Rational& c) { return c.str(); }
inline std::string to_string(const Zp& c) { return std::to_string(c.value()); }

/// Reduce an exact rational into F_q; the denominator must be invertible.
inline Zp reduce_mod(const Rational& c, std::uint32_t q) {
    BigInt num = boost::multiprecision::numerator(c) % q;
    BigInt den = boost::multiprecision::denominator(c) % q;
    if (den == 0) throw std::domain_error("reduce_mod: denominator vanishes mod " + std::to_string(q));
    Zp n(num.convert_to<std::int64_t>(), q);
    Zp d(den.convert_to<std::int64_t>(), q);
    return n * d.inverse();
}

}  // namespace scrollres
