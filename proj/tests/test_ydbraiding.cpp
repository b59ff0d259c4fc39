#include <nicholslab/nichols.hpp>
#include <nicholslab/ydbraiding.hpp>

#include <gtest/gtest.h>

using namespace nicholslab;

namespace {

using QMat = Matrix<RationalField>;

QMat mat_mul(const QMat& a, const QMat& b)
{
    QMat c(RationalField{}, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

QMat kron(const QMat& a, const QMat& b)
{
    QMat c(RationalField{}, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return c;
}

// Braid equation with dense Kronecker products, independent of the monomial shortcut.
bool dense_braid_equation(const Cocycle<RationalField>& c)
{
    const QMat m = braiding_matrix(c);
    const QMat id = QMat::identity(RationalField{}, c.size());
    const QMat c12 = kron(m, id), c23 = kron(id, m);
    const QMat lhs = mat_mul(c12, mat_mul(c23, c12));
    const QMat rhs = mat_mul(c23, mat_mul(c12, c23));
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j)) return false;
    return true;
}

Cocycle<RationalField> builtin(const std::string& label)
{
    for (const auto& bc : builtin_characters())
        if (bc.label == label) return cocycle_from_character(builtin_rack(bc.rack), bc.spec, RationalField{});
    throw std::invalid_argument(label);
}

}  // namespace

TEST(YDBraiding, CharacterSpecParsing)
{
    const auto s = CharacterSpec::parse("x1=-1, x4x2=1");
    EXPECT_EQ(s.value_of("x1"), -1);
    EXPECT_EQ(s.value_of("x4x2"), 1);
    EXPECT_EQ(s.to_string(), "x1=-1,x4x2=1");
    EXPECT_THROW(s.value_of("x9"), std::out_of_range);
    EXPECT_THROW(CharacterSpec::parse("x1"), std::invalid_argument);
}

TEST(YDBraiding, BuiltinCocyclesSatisfyBraidEquation)
{
    for (const auto& bc : builtin_characters()) {
        SCOPED_TRACE(bc.label);
        const auto c = cocycle_from_character(builtin_rack(bc.rack), bc.spec, RationalField{});
        EXPECT_TRUE(braid_equation_holds(c));
        // ρ(x_1) = -1 forces q_{ii} = -1
        for (std::uint32_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.q(i, i), -1);
    }
}

TEST(YDBraiding, DenseBraidCheckSmallRacks)
{
    for (const char* label : {"D3", "T", "Aff(5,2)", "Aff(5,3)"}) EXPECT_TRUE(dense_braid_equation(builtin(label))) << label;
}

TEST(YDBraiding, GaugesDifferByCoboundary)
{
    // both sections give cocycles that satisfy the braid equation and agree on q_{ii}
    const Rack a = builtin_rack("A");
    const auto spec = CharacterSpec::parse("x1=-1,x4=1");
    const auto n = cocycle_from_character(a, spec, RationalField{}, Gauge::degree_normalized);
    const auto g = cocycle_from_character(a, spec, RationalField{}, Gauge::generator_words);
    EXPECT_TRUE(braid_equation_holds(g));
    for (std::uint32_t i = 0; i < 6; ++i) EXPECT_EQ(n.q(i, i), g.q(i, i));
    EXPECT_EQ(parse_gauge("generators"), Gauge::generator_words);
    EXPECT_EQ(gauge_name(Gauge::degree_normalized), "normalized");
    EXPECT_THROW(parse_gauge("other"), std::invalid_argument);
}

TEST(YDBraiding, InvalidCharacterValuesRejected)
{
    EXPECT_THROW(sign_cocycle_from_character(builtin_rack("D3"), CharacterSpec::parse("x1=2")), CharacterError);
}

TEST(YDBraiding, CocycleIdentityIsChecked)
{
    const Rack r = builtin_rack("D3");
    std::vector<std::vector<Rational>> q(3, std::vector<Rational>(3, Rational(1)));
    q[0][1] = -1;
    EXPECT_THROW(Cocycle<RationalField>(r, RationalField{}, q), std::invalid_argument);
    EXPECT_NO_THROW(Cocycle<RationalField>::constant(r, RationalField{}, -1));
}

TEST(YDBraiding, ReductionToPrimeField)
{
    const auto cq = builtin("T");
    const PrimeField f5(5);
    const auto c5 = cq.reduce_to(f5);
    EXPECT_EQ(c5.q(0, 0), 4u);
    EXPECT_TRUE(braid_equation_holds(c5));
}

TEST(YDBraiding, QuadraticRelationsFromOrbits)
{
    // dim B_2 is the t^2 coefficient of each Hilbert series
    const std::map<std::string, std::vector<std::size_t>> blocks{
        {"D3", {2, 2, 3}}, {"T", {2, 2, 3, 6}}, {"Aff(5,2)", {4, 4, 4, 4, 5}}, {"A+", {2, 2, 3, 3, 4, 4}}};
    for (const auto& [label, b] : blocks) {
        SCOPED_TRACE(label);
        const auto qp = quad_profile(builtin(label));
        EXPECT_TRUE(qp.consistent());
        EXPECT_EQ(qp.dim_B2, expand_blocks(b)[2]);
        EXPECT_TRUE(qp.condition);
    }
}

TEST(YDBraiding, QuadraticBoundThreshold)
{
    const auto b = quadratic_bound(builtin_rack("Aff(5,2)"), 1);
    EXPECT_TRUE(b.holds);
    EXPECT_TRUE(b.boundary);
    const auto b2 = quadratic_bound(builtin_rack("D3"), 2);
    EXPECT_TRUE(b2.holds);
    EXPECT_FALSE(quadratic_bound(builtin_rack("T"), 3).holds);
    EXPECT_THROW(quadratic_bound(builtin_rack("T"), 0), std::invalid_argument);
}
