#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace scrollres;

namespace {

Monomial mono(const ScrollSpec& s, std::initializer_list<int> vars1) {
    Monomial m(s.n());
    for (int v : vars1) m.set(v - 1, m[v - 1] + 1);
    return m;
}

/// Test-only oracle: every monomial of degree d not divisible by a generator of D.
std::set<Monomial, std::greater<>> filtered_standard(const ScrollSpec& s, int d) {
    const auto gens = initial_ideal_generators(s);
    std::set<Monomial, std::greater<>> out;
    std::vector<int> e(static_cast<std::size_t>(s.n()), 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == s.n() - 1) {
            e[static_cast<std::size_t>(v)] = left;
            const Monomial m = Monomial::from_exponents(e);
            if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) out.insert(m);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[static_cast<std::size_t>(v)] = a;
            rec(v + 1, left - a);
        }
    };
    rec(0, d);
    return out;
}

Monomial random_monomial(int n, int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> var(0, n - 1);
    Monomial m(n);
    for (int t = 0; t < d; ++t) {
        const int v = var(rng);
        m.set(v, m[v] + 1);
    }
    return m;
}

Element random_element(const ScrollRing& R, int maxdeg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-3, 3), terms(1, 3);
    std::vector<std::pair<Monomial, Rational>> raw;
    for (int t = terms(rng); t > 0; --t) raw.emplace_back(random_monomial(R.nvars(), deg(rng), rng), Rational(coef(rng)));
    return R.normal_form(raw);
}

}  // namespace

TEST(LexOrder, FirstDifferingExponentDecides) {
    const ScrollSpec s({3, 3});
    EXPECT_GT(mono(s, {1}), mono(s, {2}));
    EXPECT_EQ(lex_compare(mono(s, {2, 4}), mono(s, {2, 4})), std::strong_ordering::equal);
    EXPECT_GT(mono(s, {1, 3}), mono(s, {2, 2}));
    // pure lex: no degree comparison first
    EXPECT_GT(mono(s, {1}), mono(s, {2, 2, 2}));
    EXPECT_THROW((void)(Monomial(3) < Monomial(4)), std::invalid_argument);
}

TEST(Standard, LeadTermsOfMinorsAreNotStandard) {
    const ScrollSpec s({3, 3});
    const ScrollRing R(s);
    EXPECT_FALSE(R.is_standard(mono(s, {1, 3})));
    EXPECT_TRUE(R.is_standard(mono(s, {1})));
    EXPECT_FALSE(R.is_standard(mono(s, {2, 5})));
    EXPECT_TRUE(R.is_standard(mono(s, {3, 4})));
    EXPECT_TRUE(R.is_standard(mono(s, {2, 2, 3})));
}

TEST(NormalForm, MinorRewrites) {
    const ScrollSpec s({3, 3});
    const ScrollRing R(s);
    EXPECT_EQ(R.normal_form(mono(s, {1, 3})), mono(s, {2, 2}));
    EXPECT_EQ(R.normal_form(mono(s, {1, 6})), mono(s, {3, 4}));
    EXPECT_EQ(R.normal_form(mono(s, {3, 4})), mono(s, {3, 4}));
}

TEST(NormalForm, PolynomialCancels) {
    const ScrollSpec s({3, 3});
    const ScrollRing R(s);
    const Element e = R.normal_form(std::vector<std::pair<Monomial, Rational>>{{mono(s, {1, 6}), 1}, {mono(s, {3, 4}), -1}});
    EXPECT_TRUE(e.is_zero());
    const Element f = R.normal_form(std::vector<std::pair<Monomial, Rational>>{{mono(s, {1, 6}), 1}, {mono(s, {2, 5}), -1}});
    EXPECT_TRUE(f.is_zero());
}

TEST(NormalForm, ConfluentUnderRandomRewriteOrder) {
    std::mt19937_64 rng(7);
    for (const auto& spec : testing_support::specs_up_to(3, 7)) {
        const ScrollRing R(spec);
        for (int d = 1; d <= 4; ++d)
            for (int trial = 0; trial < 25; ++trial) {
                const Monomial m = random_monomial(spec.n(), d, rng);
                const Monomial nf = R.normal_form(m);
                ASSERT_TRUE(R.is_standard(nf));
                for (int again = 0; again < 3; ++again) ASSERT_EQ(R.normal_form_random(m, rng), nf) << spec.blocks_string() << " " << m.str();
                ASSERT_EQ(R.adegree(nf), R.adegree(m));
            }
    }
}

TEST(NormalForm, ParametrizationSeparatesNormalForms) {
    // x_{i,j} -> y_i t^j: two monomials have the same image iff they have the
    // same A-degree, and that happens iff their normal forms agree.
    std::mt19937_64 rng(11);
    const std::uint32_t q = 32003;
    for (const auto& spec : testing_support::specs_up_to(3, 7)) {
        const ScrollRing R(spec);
        const auto pt = random_scroll_point(spec, q, rng);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> deg(1, 4);
            const int d = deg(rng);
            const Monomial a = random_monomial(spec.n(), d, rng), b = random_monomial(spec.n(), d, rng);
            const std::uint32_t va = evaluate(R.element(a), pt, q), vb = evaluate(R.element(b), pt, q);
            const bool same_nf = R.normal_form(a) == R.normal_form(b);
            if (same_nf) EXPECT_EQ(va, vb);
            EXPECT_EQ(same_nf, R.adegree(a) == R.adegree(b));
            // raw monomial and its normal form evaluate identically
            EXPECT_EQ(evaluate(Element::monomial(a, 1), pt, q), va);
        }
    }
}

TEST(Multiply, CommutativeAndAssociative) {
    std::mt19937_64 rng(5);
    for (const auto& spec : testing_support::specs_up_to(3, 6)) {
        const ScrollRing R(spec);
        for (int trial = 0; trial < 20; ++trial) {
            const Element a = random_element(R, 3, rng), b = random_element(R, 3, rng), c = random_element(R, 3, rng);
            EXPECT_EQ(R.multiply(a, b), R.multiply(b, a));
            EXPECT_EQ(R.multiply(R.multiply(a, b), c), R.multiply(a, R.multiply(b, c)));
            EXPECT_EQ(R.multiply(a, b + c), R.multiply(a, b) + R.multiply(a, c));
            EXPECT_EQ(R.multiply(a, R.element(R.one())), a);
        }
    }
}

TEST(Multiply, ExamplesInS22) {
    const ScrollSpec s({3, 3});
    const ScrollRing R(s);
    EXPECT_EQ(R.multiply(R.variable(0), R.variable(2)).str(), "x2^2");
    const Element e = R.variable(0);
    EXPECT_EQ((R.variable(0) - R.variable(1)).str(), "x1 - x2");
    EXPECT_EQ((-R.variable(5)).str(), "-x6");
    EXPECT_EQ(e.scaled(Rational(3, 2)).str(), "3/2*x1");
}

TEST(Coefficients, PrimeFieldArithmetic) {
    const Zp a(5, 7), b(4, 7);
    EXPECT_EQ((a + b).value(), 2u);
    EXPECT_EQ((a * b).value(), 6u);
    EXPECT_EQ((a * a.inverse()).value(), 1u);
    EXPECT_EQ((-a).value(), 2u);
    EXPECT_THROW((void)(Zp(1, 7) + Zp(1, 11)), std::domain_error);
    EXPECT_EQ(reduce_mod(Rational(1, 2), 7).value(), 4u);
    EXPECT_THROW((void)reduce_mod(Rational(1, 7), 7), std::domain_error);
    EXPECT_TRUE(is_prime(32003));
    EXPECT_FALSE(is_prime(32001));
}

TEST(Coefficients, ModPElementsMixOnlyWithinOneField) {
    const ScrollSpec s({2, 2});
    const ScrollRing R(s);
    const ElementModP a = R.variable<Zp>(0, Zp(3, 101)), b = R.variable<Zp>(0, Zp(99, 101));
    EXPECT_EQ((a + b).str(), "x1");
    const ElementModP c = R.variable<Zp>(0, Zp(3, 103));
    EXPECT_THROW((void)(a + c), std::domain_error);
}

TEST(StandardMonomials, SmallCases) {
    const ScrollRing R(ScrollSpec({3, 3}));
    EXPECT_EQ(R.standard_monomials(0).size(), 1u);
    EXPECT_EQ(R.standard_monomials(1).size(), 6u);
    EXPECT_EQ(R.standard_monomials(2).size(), 15u);
    const auto b = R.standard_monomials(2);
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end(), std::greater<>()));
}

TEST(StandardMonomials, MatchFilterOracleAndHilbertCoefficients) {
    for (const auto& spec : testing_support::specs_up_to(4, 8)) {
        const ScrollRing R(spec);
        const IntSeries h = hilbert_coeffs(spec, 6);
        for (int d = 0; d <= 6; ++d) {
            const auto shaped = R.standard_monomials(d);
            ASSERT_EQ(BigInt(shaped.size()), h[static_cast<std::size_t>(d)]) << spec.blocks_string() << " d=" << d;
            if (d <= 4) {
                const auto filtered = filtered_standard(spec, d);
                const std::set<Monomial, std::greater<>> got(shaped.begin(), shaped.end());
                ASSERT_EQ(got, filtered) << spec.blocks_string() << " d=" << d;
            }
        }
    }
}

TEST(ADegree, ColumnsOfTheToricMatrix) {
    const ScrollSpec s({3, 3});
    EXPECT_EQ(adegree(mono(s, {1}), s), (MultiDegree{1, 0, 0}));
    EXPECT_EQ(adegree(Monomial(6), s), (MultiDegree{0, 0, 0}));
    EXPECT_EQ(adegree(mono(s, {3, 4}), s), (MultiDegree{1, 1, 2}));
}

TEST(SkewDiagonal, ProductsAcrossBlocksDependOnIndexSum) {
    // one variable from each block: the product only depends on i + j
    for (const auto& spec : testing_support::two_block_specs(4, 9)) {
        const ScrollRing R(spec);
        const int n = spec.n(), m = spec.m();
        for (int i = 1; i <= m; ++i)
            for (int j = m + 1; j <= n; ++j)
                for (int k = 1; k <= m; ++k) {
                    const int l = i + j - k;
                    if (l <= m || l > n) continue;
                    const Monomial a = Monomial::variable(n, i - 1) * Monomial::variable(n, j - 1);
                    const Monomial b = Monomial::variable(n, k - 1) * Monomial::variable(n, l - 1);
                    EXPECT_EQ(R.normal_form(a), R.normal_form(b)) << spec.blocks_string() << " x" << i << "x" << j << " vs x" << k << "x" << l;
                }
    }
}
