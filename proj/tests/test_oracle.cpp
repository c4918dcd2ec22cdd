#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace scrollres;

namespace {

std::vector<BigInt> diagonal(const BettiTable& t, int imax) {
    std::vector<BigInt> out;
    for (int i = 0; i <= imax; ++i) out.push_back(t.at(i, i));
    return out;
}

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

/// Quadratic syzygies of the variables: the kernel of V (x) R_1 -> R_2 built
/// from the multiplication maps, with nothing subtracted.
std::size_t quadratic_syzygies(const ScrollSpec& spec, std::uint32_t q) {
    const int n = spec.n();
    const std::size_t r2 = graded_basis(spec, 2).size();
    DenseMatrixModP stacked(r2, static_cast<std::size_t>(n * n), q);
    for (int v = 1; v <= n; ++v) {
        const DenseMatrixModP mv = multiplication_map(spec, v, 1, q);
        for (std::size_t r = 0; r < mv.rows(); ++r)
            for (std::size_t c = 0; c < mv.cols(); ++c) stacked.at(r, static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(n) + c) = mv.at(r, c);
    }
    return stacked.cols() - stacked.rank();
}

}  // namespace

TEST(MultiplicationMap, InjectiveOnADomain) {
    for (const auto& spec : testing_support::specs_up_to(3, 7))
        for (int v = 1; v <= spec.n(); ++v)
            for (int d = 0; d <= 3; ++d) {
                const DenseMatrixModP m = multiplication_map(spec, v, d, 101);
                EXPECT_EQ(m.rows(), graded_basis(spec, d + 1).size());
                EXPECT_EQ(m.rank(), m.cols()) << spec.blocks_string() << " x" << v << " d=" << d;
            }
}

TEST(MultiplicationMap, XOneOnTheThreeThreeScroll) {
    const ScrollSpec s({3, 3});
    const DenseMatrixModP m = multiplication_map(s, 1, 1, 101);
    const GradedBasis b1 = graded_basis(s, 1), b2 = graded_basis(s, 2);
    // x1 * x6 = x3 * x4 in R
    const std::size_t col = b1.index_of(Monomial::variable(6, 5));
    const std::size_t row = b2.index_of(Monomial::variable(6, 2) * Monomial::variable(6, 3));
    EXPECT_EQ(m.at(row, col), 1u);
    EXPECT_THROW((void)multiplication_map(s, 7, 1, 101), std::out_of_range);
    EXPECT_THROW((void)b2.index_of(Monomial::variable(6, 0) * Monomial::variable(6, 2)), std::out_of_range);
}

TEST(Oracle, TwoBlockValues) {
    EXPECT_EQ(diagonal(betti_oracle(ScrollSpec({3, 3}), 4, 32003), 4), big({1, 6, 21, 64, 192}));
    EXPECT_EQ(diagonal(betti_oracle(ScrollSpec({2, 2}), 4, 32003), 4), big({1, 4, 7, 8, 8}));
    EXPECT_EQ(diagonal(betti_oracle(ScrollSpec({2, 3}), 4, 32003), 4), big({1, 5, 13, 27, 54}));
}

TEST(Oracle, OtherBlockCounts) {
    EXPECT_EQ(diagonal(betti_oracle(ScrollSpec({4}), 4, 32003), 4), big({1, 4, 9, 18, 36}));
    EXPECT_EQ(diagonal(betti_oracle(ScrollSpec({2}), 4, 32003), 4), big({1, 2, 1, 0, 0}));
    EXPECT_EQ(diagonal(betti_oracle(ScrollSpec({2, 2, 2}), 4, 32003), 4), big({1, 6, 18, 40, 81}));
}

TEST(Oracle, LinearStrandOnly) {
    const BettiTable t = betti_oracle(ScrollSpec({3, 4}), 3, 32003);
    for (const auto& e : t.entries)
        if (e.j != e.i) EXPECT_EQ(e.value, 0) << "beta(" << e.i << "," << e.j << ")";
    EXPECT_TRUE(t.has(3, 5));
    EXPECT_FALSE(t.has(3, 6));
    EXPECT_THROW((void)t.at(0, 7), std::out_of_range);
}

TEST(Oracle, QuadraticSyzygiesFromMultiplicationMaps) {
    for (const auto& spec : testing_support::specs_up_to(3, 7)) {
        const BettiTable t = betti_oracle(spec, 2, 32003);
        EXPECT_EQ(t.at(1, 1), spec.n());
        EXPECT_EQ(t.at(2, 2), BigInt(quadratic_syzygies(spec, 32003))) << spec.blocks_string();
    }
}

TEST(Oracle, AgreesWithClosedSum) {
    for (const auto& spec : testing_support::specs_up_to(3, 7)) {
        const OracleComparison c = compare_with_formula(spec, 3, 32003);
        EXPECT_TRUE(c.pass) << spec.blocks_string() << "\n" << c.details;
    }
    for (const auto& blocks : {std::vector<int>{2, 2, 3}, {3, 2, 2}, {4, 3}, {2, 5}}) {
        const OracleComparison c = compare_with_formula(ScrollSpec(blocks), 4, 32003);
        EXPECT_TRUE(c.pass) << c.details;
    }
}

TEST(Oracle, IndependentOfTheModulus) {
    const ScrollSpec s({3, 3});
    const BettiTable a = betti_oracle(s, 4, 101), b = betti_oracle(s, 4, 32003), c = betti_oracle(s, 4, 65537);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t e = 0; e < a.entries.size(); ++e) {
        EXPECT_EQ(a.entries[e].value, b.entries[e].value);
        EXPECT_EQ(b.entries[e].value, c.entries[e].value);
    }
    EXPECT_EQ(c.modulus, 65537u);
}

TEST(Oracle, RejectsNonPrimeModulus) {
    EXPECT_THROW((void)betti_oracle(ScrollSpec({3, 3}), 2, 100), std::invalid_argument);
    EXPECT_THROW((void)betti_oracle(ScrollSpec({3, 3}), 2, 1), std::invalid_argument);
    EXPECT_THROW((void)betti_oracle(ScrollSpec({3, 3}), -1, 101), std::invalid_argument);
}

TEST(Oracle, LimitsAreEnforced) {
    OracleLimits tight;
    tight.max_generators = 10;
    EXPECT_THROW((void)betti_oracle(ScrollSpec({3, 3}), 4, 101, tight), std::runtime_error);
}
