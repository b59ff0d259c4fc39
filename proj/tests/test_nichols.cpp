#include <nicholslab/nichols.hpp>
#include <nicholslab/ydbraiding.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nicholslab;

namespace {

Cocycle<RationalField> cocycle(const std::string& rack, const std::string& rho,
                               Gauge gauge = Gauge::degree_normalized)
{
    return cocycle_from_character(builtin_rack(rack), CharacterSpec::parse(rho), RationalField{}, gauge);
}

// Fomin–Kirillov cocycle on the transpositions of S_4, listed as the elements of A:
// q(a, b) = 1 if σ(a) < σ(b) and -1 otherwise, with σ the first moved point ordering.
Cocycle<RationalField> fomin_kirillov_A()
{
    const std::vector<std::pair<int, int>> tr{{3, 4}, {2, 3}, {2, 4}, {1, 2}, {1, 3}, {1, 4}};
    const Rack a = builtin_rack("A");
    std::vector<std::vector<Rational>> q(6, std::vector<Rational>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            // (a b) with a < b: σ(i) = a acting on b decides the sign
            const auto [x, y] = tr[i];
            const auto [u, v] = tr[j];
            auto img = [&](int p) { return p == x ? y : p == y ? x : p; };
            q[i][j] = img(u) < img(v) ? 1 : -1;
        }
    return Cocycle<RationalField>(a, RationalField{}, q);
}

FreeElement<RationalField> times(const FreeElement<RationalField>& a, const FreeElement<RationalField>& b)
{
    FreeElement<RationalField> out;
    for (const auto& [u, x] : a)
        for (const auto& [w, y] : b) {
            Word uw = u;
            uw.insert(uw.end(), w.begin(), w.end());
            out[uw] += x * y;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

void add_into(FreeElement<RationalField>& a, const FreeElement<RationalField>& b)
{
    for (const auto& [w, x] : b) a[w] += x;
    for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
}

}  // namespace

TEST(Nichols, ParseMonomialAndChain)
{
    EXPECT_EQ(parse_monomial("v1v2v10"), (Word{0, 1, 9}));
    EXPECT_EQ(parse_monomial("1,2,3"), (Word{0, 1, 2}));
    EXPECT_EQ(word_to_string({0, 9}), "v1v10");
    EXPECT_EQ(parse_chain("2,1,4"), (std::vector<std::uint32_t>{1, 0, 3}));
    EXPECT_THROW(parse_monomial("v0"), std::invalid_argument);
}

TEST(Nichols, DerivationOnD3)
{
    const auto c = cocycle("D3", "x1=-1");
    // ∂_1(v1 v2) = g_1(v2) = q_{12} v_{1⊳2}
    const auto d = derive(c, Word{0, 1}, 0);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.begin()->first, (Word{c.rack().op(0, 1)}));
    EXPECT_EQ(d.begin()->second, c.q(0, 1));
    // ∂_2(v1 v2) = v1
    const auto d2 = derive(c, Word{0, 1}, 1);
    ASSERT_EQ(d2.size(), 1u);
    EXPECT_EQ(d2.begin()->first, (Word{0}));
    EXPECT_EQ(d2.begin()->second, 1);
    EXPECT_TRUE(derive(c, Word{0, 1}, 2).empty());
}

TEST(Nichols, SkewLeibnizRule)
{
    // ∂_j(u w) = ∂_j(u) g_j(w) + u ∂_j(w)
    const auto c = cocycle("T", "x1=-1,x4x2=1");
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> letter(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        Word u(1 + trial % 3), w(2 + trial % 2);
        for (auto& a : u) a = letter(rng);
        for (auto& a : w) a = letter(rng);
        Word uw = u;
        uw.insert(uw.end(), w.begin(), w.end());
        for (std::uint32_t j = 0; j < 4; ++j) {
            const auto [gw, s] = twist(c, j, w);
            FreeElement<RationalField> rhs = times(derive(c, u, j), {{gw, s}});
            add_into(rhs, times({{u, 1}}, derive(c, w, j)));
            EXPECT_EQ(derive(c, uw, j), rhs);
        }
    }
}

TEST(Nichols, D3DimensionsOverQAndF7)
{
    const auto b = graded_dims(cocycle("D3", "x1=-1"));
    EXPECT_EQ(b.dims(), (std::vector<std::size_t>{1, 3, 4, 3, 1}));
    EXPECT_TRUE(b.finite());
    const auto b7 = graded_dims(cocycle("D3", "x1=-1").reduce_to(PrimeField(7)));
    EXPECT_EQ(b7.total(), 12u);
}

TEST(Nichols, TruncationIsFlagged)
{
    const auto b = graded_dims(cocycle("T", "x1=-1,x4x2=1"), std::size_t{3});
    EXPECT_FALSE(b.finite());
    EXPECT_TRUE(b.truncated());
    EXPECT_EQ(b.dims(), (std::vector<std::size_t>{1, 4, 8, 11}));
}

TEST(Nichols, DimensionCapThrows)
{
    EngineOptions o;
    o.max_dim = 5;
    EXPECT_THROW(graded_dims(cocycle("T", "x1=-1,x4x2=1"), o), ResourceCapExceeded);
}

TEST(Nichols, SymmetrizerMatchesEngine)
{
    for (const auto& [rack, rho] : std::vector<std::pair<std::string, std::string>>{{"D3", "x1=-1"}, {"T", "x1=-1,x4x2=1"}}) {
        const auto c = cocycle(rack, rho);
        const auto b = graded_dims(c);
        for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(symmetrizer_rank(c, n), b.dim(n)) << rack << " degree " << n;
    }
    EXPECT_THROW(symmetrizer_rank(cocycle("D3", "x1=-1"), 7), SymmetrizerGuard);
}

TEST(Nichols, HilbertFactorisation)
{
    const std::vector<std::size_t> t = expand_blocks({2, 2, 3, 6});
    EXPECT_EQ(t, (std::vector<std::size_t>{1, 4, 8, 11, 12, 12, 11, 8, 4, 1}));
    EXPECT_EQ(hilbert_factor(t), (std::vector<std::size_t>{2, 2, 3, 6}));
    EXPECT_EQ(blocks_to_string({2, 2, 3, 6}), "(2)^2(3)(6)");
    EXPECT_FALSE(hilbert_factor({1, 3, 1}).has_value());
    const auto h = HilbertSeries::of(t);
    EXPECT_TRUE(h.palindromic());
    EXPECT_EQ(h.total(), 72u);
}

TEST(Nichols, IntegralOfD3)
{
    const auto b = graded_dims(cocycle("D3", "x1=-1"));
    const auto rep = verify_integral(b, parse_monomial("v1v2v1v3"));
    EXPECT_EQ(b.top_degree(), 4u);
    // v1v2v1v3 may or may not be nonzero; the top degree is one-dimensional either way
    EXPECT_TRUE(rep.top_dim_one);
    EXPECT_TRUE(rep.top_degree);
}

TEST(Nichols, ChainInBasisAgreesWithFreeEvaluation)
{
    const auto c = cocycle("T", "x1=-1,x4x2=1");
    const auto b = graded_dims(c);
    const Word m = parse_monomial("v1v2v1v3v2v4v1v2v1");
    ASSERT_EQ(m.size(), b.top_degree());
    std::mt19937 rng(5);
    std::vector<std::uint32_t> chain(m.size());
    for (int trial = 0; trial < 20; ++trial) {
        for (auto& a : chain) a = rng() % 4;
        EXPECT_EQ(b.evaluate_chain_in_basis(m, chain), evaluate_chain(c, m, chain));
    }
}

TEST(Nichols, FominKirillovCocycleOnA)
{
    // a second, explicit cocycle on A: same algebra, and the integral chain gives -1
    const auto fk = fomin_kirillov_A();
    EXPECT_TRUE(braid_equation_holds(fk));
    const auto b = graded_dims(fk);
    EXPECT_EQ(b.total(), 576u);
    const Word m = parse_monomial("v1v2v1v3v4v2v1v3v4v5v1v6");
    EXPECT_EQ(evaluate_chain(fk, m, parse_chain("4,2,4,1,2,4,3,4,2,5,6,5")), -1);
}

TEST(Nichols, ChainValueDependsOnSection)
{
    const Word m = parse_monomial("v1v2v1v3v4v2v1v3v4v5v1v6");
    const auto chain = parse_chain("4,2,4,1,2,4,3,4,2,5,6,5");
    EXPECT_EQ(evaluate_chain(cocycle("A", "x1=-1,x4=1", Gauge::generator_words), m, chain), -1);
    EXPECT_EQ(evaluate_chain(cocycle("A", "x1=-1,x4=1", Gauge::degree_normalized), m, chain), 1);
}

TEST(Nichols, FieldChangeForT)
{
    const auto rep = tau_p_compare(cocycle("T", "x1=-1,x4x2=1"), 2, 12);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.total_q, 72u);
    EXPECT_EQ(rep.total_p, 36u);
    EXPECT_TRUE(rep.first_strict_drop.has_value());
    const auto rep3 = tau_p_compare(cocycle("T", "x1=-1,x4x2=1"), 3, 12);
    EXPECT_EQ(rep3.total_p, 72u);
}

TEST(Nichols, CharacteristicTwoBasis)
{
    const auto rep = char2_basis_check();
    EXPECT_TRUE(rep.dims_match);
    EXPECT_TRUE(rep.relations_hold_in_nichols);
    EXPECT_EQ(rep.nichols_dims, (std::vector<std::size_t>{1, 4, 8, 10, 8, 4, 1}));
}
