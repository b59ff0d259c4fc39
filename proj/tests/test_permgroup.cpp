#include <nicholslab/permgroup.hpp>

#include <gtest/gtest.h>

using namespace nicholslab;

TEST(PermGroup, CompositionIsRightToLeft)
{
    const Perm a = Perm::from_cycles(3, {{1, 2}});
    const Perm b = Perm::from_cycles(3, {{2, 3}});
    // (a*b)(x) = a(b(x)): 1 -> 1 -> 2, 2 -> 3 -> 3
    EXPECT_EQ((a * b)(1), 2u);
    EXPECT_EQ((a * b).to_string(), "(1 2 3)");
}

TEST(PermGroup, CycleTypeAndOrder)
{
    const Perm p = Perm::from_cycles(6, {{1, 2, 3}, {4, 5}});
    EXPECT_EQ(p.order(), 6u);
    EXPECT_EQ(p.fixed_points(), 1u);
    EXPECT_EQ(p * p.inverse(), Perm::identity(6));
}

TEST(PermGroup, SymmetricGroupClosure)
{
    const auto s4 = FinGroup::closure(4, {Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{1, 2, 3, 4}})});
    EXPECT_EQ(s4.order(), 24u);
    EXPECT_FALSE(s4.is_abelian());
    EXPECT_EQ(s4.center().order(), 1u);
    EXPECT_EQ(s4.conjugacy_classes().size(), 5u);
    EXPECT_EQ(s4.derived_subgroup().order(), 12u);
    EXPECT_EQ(s4.centralizer(Perm::from_cycles(4, {{1, 2}})).order(), 4u);
}

TEST(PermGroup, ClosureRespectsLimit)
{
    const std::vector<Perm> gens{Perm::from_cycles(6, {{1, 2}}), Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}})};
    EXPECT_THROW(FinGroup::closure(6, gens, GroupLimits{100}), GroupTooLarge);
}

TEST(PermGroup, AbelianizationOfS3)
{
    const auto s3 = FinGroup::closure(3, {Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{2, 3}})});
    const auto ab = s3.abelianization({Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{2, 3}})});
    EXPECT_EQ(ab.coset_exponents.size(), 2u);
    // Z^2 / relations has order 2: both transpositions map to the same generator
    const auto s = smith_normal_form(ab.relations);
    Integer order = 1;
    for (std::size_t i = 0; i < s.rank; ++i) order *= s.invariant(i);
    EXPECT_EQ(s.rank, 2u);
    EXPECT_EQ(order, 2);
}
