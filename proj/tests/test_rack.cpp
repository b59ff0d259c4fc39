#include <nicholslab/enumerate.hpp>
#include <nicholslab/rack.hpp>

#include <gtest/gtest.h>

using namespace nicholslab;

namespace {

// Brute-force self-distributivity, independent of Rack::validate.
bool self_distributive(const Rack& r)
{
    const auto d = static_cast<std::uint32_t>(r.size());
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
            for (std::uint32_t k = 0; k < d; ++k)
                if (r.op(i, r.op(j, k)) != r.op(r.op(i, j), r.op(i, k))) return false;
    return true;
}

bool is_hom(const Rack& a, const Rack& b, const std::vector<std::uint32_t>& f)
{
    for (std::uint32_t i = 0; i < a.size(); ++i)
        for (std::uint32_t j = 0; j < a.size(); ++j)
            if (f[a.op(i, j)] != b.op(f[i], f[j])) return false;
    return true;
}

}  // namespace

TEST(Rack, BuiltinsAreIndecomposableQuandles)
{
    for (const auto& name : builtin_rack_names()) {
        SCOPED_TRACE(name);
        const Rack r = builtin_rack(name);
        EXPECT_TRUE(self_distributive(r));
        const auto p = properties(r);
        EXPECT_TRUE(p.quandle);
        EXPECT_TRUE(p.crossed_set);
        EXPECT_TRUE(p.indecomposable);
    }
}

TEST(Rack, BuiltinSizes)
{
    const std::map<std::string, std::size_t> sizes{{"D3", 3},       {"T", 4},        {"Aff(5,2)", 5},
                                                   {"Aff(5,3)", 5}, {"A", 6},        {"B", 6},
                                                   {"Aff(7,3)", 7}, {"Aff(7,5)", 7}, {"C", 10}};
    EXPECT_EQ(builtin_rack_names().size(), 9u);
    for (const auto& [n, d] : sizes) EXPECT_EQ(builtin_rack(n).size(), d) << n;
}

TEST(Rack, DihedralD3IsTranspositionClass)
{
    const Rack d3 = builtin_rack("D3");
    EXPECT_EQ(d3.phi(0).to_string(), "(2 3)");
    EXPECT_TRUE(properties(d3).involutive);
    EXPECT_EQ(inner_group(d3).order(), 6u);
}

TEST(Rack, InnerGroupOfC)
{
    // C is the class of transpositions in S_5
    EXPECT_EQ(inner_group(builtin_rack("C")).order(), 120u);
}

TEST(Rack, AffineLabelling)
{
    // label i is the residue i-1 and i ⊳ j = (1-α) i + α j
    const Rack r = builtin_rack("Aff(5,2)");
    for (std::uint32_t i = 0; i < 5; ++i)
        for (std::uint32_t j = 0; j < 5; ++j) EXPECT_EQ(r.op(i, j), ((1 + 5 - 2) * i + 2 * j) % 5);
}

TEST(Rack, InvalidTablesAreRejected)
{
    // not a permutation in row 1
    EXPECT_THROW(Rack::from_table({{1, 1}, {1, 2}}), RackValidationError);
    // rows are permutations but self-distributivity fails
    EXPECT_THROW(Rack::from_table({{2, 3, 1}, {1, 2, 3}, {1, 2, 3}}), RackValidationError);
    EXPECT_THROW(Rack::from_table({{1, 4}, {1, 2}}), std::invalid_argument);
}

TEST(Rack, NotInjectiveExampleIsDecomposable)
{
    const Rack r = Rack::from_table({{1, 2, 3}, {1, 2, 3}, {2, 1, 3}});
    const auto p = properties(r);
    EXPECT_TRUE(p.quandle);
    EXPECT_FALSE(p.indecomposable);
    EXPECT_EQ(inner_orbits(r).size(), 2u);
}

TEST(Rack, IsomorphismMapsAreHomomorphisms)
{
    const auto f = isomorphism(builtin_rack("Aff(5,2)"), builtin_rack("Aff(5,3)"));
    EXPECT_FALSE(f.has_value());  // different orbit structure
    const Rack d3 = builtin_rack("D3");
    const Rack relabelled = Rack::from_table({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
    const auto g = isomorphism(d3, relabelled);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(is_hom(d3, relabelled, *g));
}

TEST(Rack, AAndBAreNotIsomorphic) { EXPECT_FALSE(isomorphism(builtin_rack("A"), builtin_rack("B")).has_value()); }

TEST(Rack, ClassificationStepTableIsA)
{
    // the six-element quandle reached in the k_3 >= 2 case of the classification
    const Rack x = Rack::from_phi_cycles({{{2, 3}, {4, 5}},
                                          {{1, 3}, {4, 6}},
                                          {{1, 2}, {5, 6}},
                                          {{1, 5}, {2, 6}},
                                          {{1, 4}, {3, 6}},
                                          {{2, 4}, {3, 5}}});
    const Rack a = builtin_rack("A");
    ASSERT_TRUE(isomorphism(x, a).has_value());
    // i ↦ π_{p(i)} with p = (1 2)(4 5)
    EXPECT_TRUE(is_hom(x, a, {1, 0, 2, 4, 3, 5}));
}

TEST(Rack, CanonicalTableIsRelabellingInvariant)
{
    const Rack t = builtin_rack("T");
    const Perm p = Perm::from_cycles(4, {{1, 3, 2}});
    Rack::Table moved(4, std::vector<std::uint32_t>(4));
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j) moved[p(i)][p(j)] = p(t.op(i, j));
    EXPECT_EQ(canonical_table(t), canonical_table(Rack::from_zero_based(moved)));
}

TEST(Rack, EnumerationSmallSizes)
{
    const auto one = enumerate_quandles(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].size(), 1u);

    const auto three = enumerate_quandles(3);
    ASSERT_EQ(three.size(), 2u);  // singleton and D3
    EXPECT_TRUE(isomorphism(three[1], builtin_rack("D3")).has_value());
}

TEST(Rack, EnumerationCountsPerSize)
{
    // indecomposable quandles are 1, 0, 1, 1, 3, 2 for sizes 1..6, all injective
    std::vector<std::size_t> counts(7, 0);
    for (const auto& r : enumerate_quandles(6)) ++counts[r.size()];
    EXPECT_EQ(counts, (std::vector<std::size_t>{0, 1, 0, 1, 1, 3, 2}));
}

TEST(Rack, EnumerationCapIsEnforced)
{
    EXPECT_THROW(enumerate_quandles(9), EnumerationCapExceeded);
    EnumerationLimits lim;
    lim.max_size_cap = 4;
    EXPECT_THROW(enumerate_quandles(5, lim), EnumerationCapExceeded);
}
