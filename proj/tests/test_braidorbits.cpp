#include <nicholslab/braidorbits.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace nicholslab;

namespace {

// Orbit of (i, j) under the braid map, counted by iterating until the start recurs.
std::size_t naive_orbit(const Rack& r, std::uint32_t i, std::uint32_t j)
{
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::pair<std::uint32_t, std::uint32_t> p{i, j};
    while (seen.insert(p).second) p = {r.op(p.first, p.second), p.first};
    return seen.size();
}

struct Row {
    const char* name;
    std::size_t d, k2, k3, k4;
    long s_num, s_den;
};

}  // namespace

TEST(BraidOrbits, TableTwoProfiles)
{
    const Row rows[] = {{"D3", 3, 0, 2, 0, 1, 3},       {"T", 4, 0, 3, 0, 1, 2},        {"Aff(5,2)", 5, 0, 0, 4, 1, 1},
                        {"Aff(5,3)", 5, 0, 0, 4, 1, 1}, {"A", 6, 1, 4, 0, 2, 3},        {"B", 6, 1, 4, 0, 2, 3},
                        {"Aff(7,3)", 7, 0, 6, 0, 1, 1}, {"Aff(7,5)", 7, 0, 6, 0, 1, 1}, {"C", 10, 3, 6, 0, 1, 1}};
    for (const auto& row : rows) {
        SCOPED_TRACE(row.name);
        const auto p = profile(builtin_rack(row.name));
        EXPECT_EQ(p.d, row.d);
        EXPECT_EQ(p.k_at(2), row.k2);
        EXPECT_EQ(p.k_at(3), row.k3);
        EXPECT_EQ(p.k_at(4), row.k4);
        EXPECT_EQ(p.S, mpq_class(row.s_num, row.s_den));
        EXPECT_TRUE(p.condition_holds);
        EXPECT_FALSE(p.advisory);
    }
}

TEST(BraidOrbits, OrbitSizesAgreeWithIteration)
{
    for (const auto& name : builtin_rack_names()) {
        const Rack r = builtin_rack(name);
        for (std::uint32_t i = 0; i < r.size(); ++i)
            for (std::uint32_t j = 0; j < r.size(); ++j) EXPECT_EQ(orbit_size(r, i, j), naive_orbit(r, i, j)) << name;
    }
}

TEST(BraidOrbits, OrbitsPartitionPairs)
{
    const Rack r = builtin_rack("C");
    std::size_t total = 0;
    for (const auto& o : braid_orbits(r)) total += o.size();
    EXPECT_EQ(total, 100u);
}

TEST(BraidOrbits, FixedPairsOfAQuandle)
{
    // (i, i) is fixed; one orbit of size 1 per element
    const Rack r = builtin_rack("T");
    std::size_t singletons = 0;
    for (const auto& o : braid_orbits(r)) singletons += o.size() == 1;
    EXPECT_EQ(singletons, 4u);
}

TEST(BraidOrbits, IteratedTriangle)
{
    // in D3, x ▶_3 y = x ⊳ (y ⊳ x) = y for x != y
    const Rack r = builtin_rack("D3");
    EXPECT_EQ(iterate_triangle(r, 0, 1, 1), 0u);
    EXPECT_EQ(iterate_triangle(r, 0, 1, 2), r.op(0, 1));
    EXPECT_EQ(iterate_triangle(r, 0, 1, 3), r.op(0, r.op(1, 0)));
    EXPECT_THROW(iterate_triangle(r, 0, 1, 0), std::invalid_argument);
}

TEST(BraidOrbits, DihedralFiveFailsCondition)
{
    const auto p = profile(dihedral_rack(5));
    EXPECT_EQ(p.S, mpq_class(6, 5));
    EXPECT_FALSE(p.condition_holds);
    const auto c = classify(dihedral_rack(5));
    EXPECT_FALSE(c.match.has_value());
    EXPECT_FALSE(c.counterexample);
}

TEST(BraidOrbits, ClassifyMatchesBuiltins)
{
    for (const auto& name : builtin_rack_names()) EXPECT_EQ(classify(builtin_rack(name)).match, name);
}

TEST(BraidOrbits, DecomposableInputGetsAdvisory)
{
    const auto p = profile(trivial_rack(2));
    EXPECT_TRUE(p.advisory);
    EXPECT_THROW(classify(trivial_rack(2)), std::invalid_argument);
}
