#include <nicholslab/exactnum.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nicholslab;

namespace {

// Cofactor-expansion determinant, used as an independent oracle for the Bareiss pivots.
Integer det_cofactor(const IntMatrix& a)
{
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    Integer s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[i][j]);
            minor.push_back(row);
        }
        const Integer term = a[0][c] * det_cofactor(minor);
        s += (c % 2 == 0) ? term : Integer(-term);
    }
    return s;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.size(), std::vector<Integer>(b.front().size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b.front().size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace

TEST(ExactNum, RankAndKernelOverQ)
{
    // second row is twice the first
    Matrix<RationalField> m(RationalField{}, 3, 3);
    const long v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
    const auto rk = rank_and_kernel(m);
    EXPECT_EQ(rk.rank, 2u);
    ASSERT_EQ(rk.kernel_basis.size(), 1u);
    const auto image = m.apply(rk.kernel_basis[0]);
    for (const auto& x : image) EXPECT_EQ(x, 0);
}

TEST(ExactNum, FractionsStayExact)
{
    Matrix<RationalField> m(RationalField{}, 2, 2);
    m(0, 0) = Rational(1, 3);
    m(0, 1) = Rational(1, 6);
    m(1, 0) = Rational(2, 3);
    m(1, 1) = Rational(1, 3);
    EXPECT_EQ(rank_and_kernel(m).rank, 1u);
}

TEST(ExactNum, BareissLastPivotIsDeterminant)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a(4, std::vector<Integer>(4));
        Matrix<RationalField> m(RationalField{}, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                a[i][j] = dist(rng);
                m(i, j) = Rational(a[i][j]);
            }
        const Integer det = det_cofactor(a);
        const auto rk = rank_and_kernel(m);
        if (det == 0) {
            EXPECT_LT(rk.rank, 4u);
        } else {
            ASSERT_EQ(rk.rank, 4u);
            ASSERT_EQ(rk.bareiss_pivots.size(), 4u);
            // row swaps may flip the sign
            EXPECT_EQ(abs(rk.bareiss_pivots.back()), abs(det));
        }
    }
}

TEST(ExactNum, PrimeFieldArithmetic)
{
    const PrimeField f(7);
    EXPECT_EQ(f.mul(3, f.inv(3)), 1u);
    EXPECT_EQ(f.from_int(-1), 6u);
    EXPECT_EQ(f.from_rational(Rational(1, 2)), 4u);
    EXPECT_THROW(PrimeField(8), std::invalid_argument);
}

TEST(ExactNum, RankDropsModP)
{
    IntMatrix a{{1, 1}, {1, 3}};  // det 2
    EXPECT_EQ(rank_mod_p(a, 3), 2u);
    EXPECT_EQ(rank_mod_p(a, 2), 1u);
}

TEST(ExactNum, MixedFieldsRejected)
{
    std::vector<Scalar> entries{Scalar(1L), Scalar(2u, 5u)};
    EXPECT_THROW(ExactMatrix(1, 2, entries), FieldMismatch);
    std::vector<Scalar> two_primes{Scalar(1u, 3u), Scalar(2u, 5u)};
    EXPECT_THROW(ExactMatrix(1, 2, two_primes), FieldMismatch);
}

TEST(ExactNum, SmithFormOfKnownMatrix)
{
    // classic example: invariant factors 2, 6, 12
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto s = smith_normal_form(a);
    EXPECT_EQ(s.rank, 3u);
    EXPECT_EQ(s.invariant(0), 2);
    EXPECT_EQ(s.invariant(1), 6);
    EXPECT_EQ(s.invariant(2), 12);
    EXPECT_EQ(mul(mul(s.left, a), s.right), s.diagonal);
    EXPECT_EQ(mul(s.right, s.right_inverse), int_identity(3));
}

TEST(ExactNum, SmithTransformsOnRandomMatrices)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix a(3, std::vector<Integer>(4));
        for (auto& row : a)
            for (auto& x : row) x = dist(rng);
        const auto s = smith_normal_form(a);
        EXPECT_EQ(mul(mul(s.left, a), s.right), s.diagonal);
        for (std::size_t i = 0; i + 1 < s.rank; ++i) {
            EXPECT_GT(s.invariant(i), 0);
            EXPECT_EQ(s.invariant(i + 1) % s.invariant(i), 0);
        }
    }
}

TEST(ExactNum, HermiteFormIsEchelonAndReduced)
{
    IntMatrix a{{4, 6, 2}, {2, 3, 1}, {0, 2, 8}};
    const auto h = hermite_normal_form(a);
    ASSERT_EQ(h.size(), 2u);  // one dependent row
    EXPECT_GT(h[0][0], 0);
    EXPECT_EQ(h[1][0], 0);
    EXPECT_GT(h[1][1], 0);
    EXPECT_GE(h[0][1], 0);
    EXPECT_LT(h[0][1], h[1][1]);
}

TEST(ExactNum, SaturationAddsMissingPoints)
{
    // span of (2, 4) meets Z^2 in Z(1, 2)
    const auto lat = saturate_lattice({{Rational(2), Rational(4)}}, 2);
    ASSERT_EQ(lat.rank(), 1u);
    EXPECT_TRUE(lat.contains({1, 2}));
    EXPECT_FALSE(lat.contains({1, 1}));
    // fractional input
    const auto lat2 = saturate_lattice({{Rational(1, 2), Rational(3, 4)}}, 2);
    EXPECT_TRUE(lat2.contains({2, 3}));
}

TEST(ExactNum, SignCharacterExistence)
{
    // Z/4 with generator value -1: fine; Z/3 cannot send the generator to -1
    EXPECT_TRUE(character_exists({{4}}, {2}));
    EXPECT_FALSE(character_exists({{3}}, {2}));
    // x = y forces equal values
    EXPECT_TRUE(character_exists({{1, -1}}, {2, 2}));
    EXPECT_FALSE(character_exists({{1, -1}}, {2, 1}));
    EXPECT_THROW(character_exists({{4}}, {4}), std::invalid_argument);
}
