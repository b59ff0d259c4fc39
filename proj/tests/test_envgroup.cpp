#include <nicholslab/envgroup.hpp>

#include <gtest/gtest.h>

using namespace nicholslab;

namespace {

// Every relator must evaluate to the identity in the permutation representation.
void expect_relators_hold(const QuotientGroup& q)
{
    for (const auto& w : q.presentation().relators) EXPECT_TRUE(q.evaluate(w).is_identity()) << w.to_string();
}

std::size_t count_of_order(const FinGroup& g, std::size_t o)
{
    std::size_t n = 0;
    for (const auto& e : g.elements()) n += e.order() == o;
    return n;
}

}  // namespace

TEST(EnvGroup, ParseWord)
{
    EXPECT_EQ(parse_word("x1^2 x3^-1").to_string(), "x1^2 x3^-1");
    EXPECT_EQ(parse_word("(x4x2)^2").degree(), 4);
    EXPECT_EQ(parse_word("x1").inverse().degree(), -1);
    EXPECT_THROW(parse_word("y1"), std::invalid_argument);
}

TEST(EnvGroup, PresentationShape)
{
    const Rack r = builtin_rack("D3");
    const auto p = make_presentation(r, 1);
    EXPECT_EQ(p.relators.size(), 9u + 1u);
    ASSERT_EQ(p.power.size(), 1u);
    EXPECT_EQ(p.power[0], 2u);
    EXPECT_EQ(make_presentation(r, 2).power[0], 4u);
}

TEST(EnvGroup, BarGroupOfD3IsS3)
{
    const auto q = bar_group(builtin_rack("D3"));
    EXPECT_EQ(q.order(), 6u);
    EXPECT_FALSE(q.group().is_abelian());
    EXPECT_EQ(count_of_order(q.group(), 2), 3u);
    expect_relators_hold(q);
}

TEST(EnvGroup, BarGroupOfAff52IsFrobenius)
{
    const auto q = bar_group(builtin_rack("Aff(5,2)"));
    EXPECT_EQ(q.order(), 20u);
    EXPECT_EQ(q.group().center().order(), 1u);
    EXPECT_EQ(count_of_order(q.group(), 5), 4u);
    EXPECT_EQ(count_of_order(q.group(), 4), 10u);
    expect_relators_hold(q);
}

TEST(EnvGroup, BarGroupOfT)
{
    const auto q = bar_group(builtin_rack("T"));
    EXPECT_EQ(q.order(), 24u);
    expect_relators_hold(q);
    // centralizer index equals the class size of x1
    EXPECT_EQ(q.group().centralizer(q.image(0)).order() * 4, 24u);
}

TEST(EnvGroup, HatGroupDoublesPowerRelators)
{
    const auto bar = bar_group(builtin_rack("D3"));
    const auto hat = hat_group(builtin_rack("D3"));
    EXPECT_EQ(hat.order(), 2 * bar.order());
    expect_relators_hold(hat);
}

TEST(EnvGroup, TrivialRackGivesAbelianGroup)
{
    const auto q = bar_group(trivial_rack(2));
    EXPECT_TRUE(q.group().is_abelian());
    EXPECT_TRUE(injectivity(trivial_rack(2)));
}

TEST(EnvGroup, NotInjectiveExample)
{
    const Rack r = Rack::from_table({{1, 2, 3}, {1, 2, 3}, {2, 1, 3}});
    EXPECT_FALSE(injectivity(r));
    const auto q = bar_group(r);
    EXPECT_EQ(q.image(0), q.image(1));
}

TEST(EnvGroup, BuiltinsAreInjective)
{
    for (const auto& name : builtin_rack_names()) EXPECT_TRUE(injectivity(builtin_rack(name))) << name;
}

TEST(EnvGroup, CosetLimitIsEnforced)
{
    EXPECT_THROW(bar_group(builtin_rack("C"), CosetLimits{10}), CosetEnumerationFailed);
}

TEST(EnvGroup, CentralizerRelations)
{
    const auto rep = centralizer_report(builtin_rack("T"), {parse_word("x1"), parse_word("x4x2")},
                                        {{parse_word("(x4x2)^2"), parse_word("x1^4")}});
    EXPECT_TRUE(rep.certified());
    EXPECT_EQ(rep.centralizer_order, 6u);
    ASSERT_EQ(rep.relations.size(), 1u);
    EXPECT_TRUE(rep.relations[0].holds);
}

TEST(EnvGroup, FalseRelationIsReported)
{
    // x1^2 = x4^2 holds, x1 = x4 does not
    const auto rep = centralizer_report(builtin_rack("A"), {parse_word("x1"), parse_word("x4")},
                                        {{parse_word("x1^2"), parse_word("x4^2")}, {parse_word("x1"), parse_word("x4")}});
    ASSERT_EQ(rep.relations.size(), 2u);
    EXPECT_TRUE(rep.relations[0].holds);
    EXPECT_FALSE(rep.relations[1].holds);
    EXPECT_FALSE(rep.certified());
}

TEST(EnvGroup, InsufficientGeneratorsAreReported)
{
    const auto rep = centralizer_report(builtin_rack("T"), {parse_word("x1")});
    EXPECT_FALSE(rep.generates);
    EXPECT_EQ(rep.generated_order, 3u);
}
