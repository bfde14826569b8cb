#include <gtest/gtest.h>

#include "jetspace/catalog.hpp"
#include "jetspace/errors.hpp"
#include "jetspace/jets.hpp"
#include "test_support.hpp"

using namespace jt;

namespace {

VarietyPresentation cusp()
{
    return make_variety("cusp", BaseField(), {"x", "y"}, {poly("y^2 - x^3", {"x", "y"})}, 1);
}

VarietyPresentation whitney()
{
    const std::vector<std::string> v = {"x", "y", "z"};
    return make_variety("whitney", BaseField(), v, {poly("x*y^2 - z^2", v)}, 2);
}

}  // namespace

TEST(MakeArc, CuspMonomialArc)
{
    EXPECT_NO_THROW(make_arc(cusp(), {series_spec("t^2"), series_spec("t^3")}, 12));
}

TEST(MakeArc, NotOnVarietyReportsGeneratorAndOrder)
{
    try {
        make_arc(cusp(), {series_spec("t^2"), series_spec("t^2")}, 12);
        FAIL() << "expected NotOnVariety";
    } catch (const NotOnVariety& e) {
        EXPECT_EQ(e.generator(), 1u);
        EXPECT_EQ(e.order(), 4u);
        EXPECT_EQ(e.name(), "NotOnVariety");
    }
}

TEST(MakeArc, VanishingBeyondPrecisionIsAccepted)
{
    // y^2 - x^3 = t^6 - t^6 - ... fails only at order 8: x = t^2, y = t^3 + t^5.
    EXPECT_NO_THROW(make_arc(cusp(), {series_spec("t^2"), series_spec("t^3 + t^5")}, 8));
    EXPECT_THROW(make_arc(cusp(), {series_spec("t^2"), series_spec("t^3 + t^5")}, 9), NotOnVariety);
}

TEST(MakeArc, WhitneySingularLine)
{
    EXPECT_NO_THROW(make_arc(whitney(), {series_spec("t"), series_spec("0"), series_spec("0")}, 8));
}

TEST(MakeArc, WrongComponentCount)
{
    EXPECT_THROW(make_arc(cusp(), {series_spec("t")}, 8), InvalidArgument);
}

TEST(OrdIdeal, Examples)
{
    const std::vector<std::string> xy = {"x", "y"};
    const auto a = make_arc(cusp(), {series_spec("t^2"), series_spec("t^3")}, 12);
    EXPECT_EQ(ord_ideal(a, {poly("-3*x^2", xy), poly("2*y", xy)}), OrderValue::finite(3));
    EXPECT_EQ(ord_ideal(a, {poly("1", xy)}), OrderValue::finite(0));

    const std::vector<std::string> v = {"x", "y", "z"};
    const auto w = make_arc(whitney(), {series_spec("t"), series_spec("0"), series_spec("0")}, 8);
    EXPECT_EQ(ord_ideal(w, {poly("y^2", v), poly("2*x*y", v), poly("-2*z", v)}), OrderValue::at_least(8));
}

TEST(OrdIdeal, MonotoneUnderInclusion)
{
    const std::vector<std::string> xy = {"x", "y"};
    const auto a2 = make_variety("A2", BaseField(), xy, {});
    const auto a = make_arc(a2, {series_spec("t^2 + t^4"), generic_spec("w", {0, 0, 0})}, 12);
    const std::vector<SparsePolynomial> gens = {poly("x^3", xy), poly("x*y", xy), poly("y^4", xy), poly("x - y", xy)};
    std::vector<SparsePolynomial> acc;
    auto previous = OrderValue::at_least(12);
    for (const auto& g : gens) {
        acc.push_back(g);
        const auto now = ord_ideal(a, acc);
        EXPECT_EQ(min(now, previous), now);
        previous = now;
    }
}

TEST(Truncate, CuspConstantCoefficients)
{
    const auto a = make_arc(cusp(), {series_spec("t^2"), series_spec("t^3")}, 12);
    const auto j = truncate(a, 3);
    EXPECT_EQ(j.level, 3u);
    ASSERT_EQ(j.coordinates.size(), 2u);
    EXPECT_EQ(j.coordinates[0], (std::vector<FieldElement>{q(0), q(0), q(1), q(0)}));
    EXPECT_EQ(j.coordinates[1], (std::vector<FieldElement>{q(0), q(0), q(0), q(1)}));
    EXPECT_EQ(j.residue_dim, 0u);
}

TEST(Truncate, GenericLine)
{
    const auto a1 = make_variety("A1", BaseField(), {"x"}, {});
    const auto a = make_arc(a1, {generic_spec("u")}, 8);
    EXPECT_EQ(truncate(a, 2).residue_dim, 3u);
    EXPECT_EQ(a.components()[0][2], sym("u_2"));
}

TEST(Truncate, ConstantTranscendentals)
{
    const auto a2 = make_variety("A2", BaseField(), {"y1", "y2"}, {});
    const auto a = make_arc(a2, {series_spec("u*t", {"u", "v"}), series_spec("v", {"u", "v"})}, 8);
    EXPECT_EQ(truncate(a, 1).residue_dim, 2u);
    EXPECT_EQ(truncate(a, 0).residue_dim, 1u);
}

TEST(Truncate, PrecisionTooLow)
{
    const auto a = make_arc(cusp(), {series_spec("t^2"), series_spec("t^3")}, 6);
    EXPECT_THROW(truncate(a, 6), PrecisionTooLow);
    EXPECT_THROW(jet_coordinates(a, 7), PrecisionTooLow);
    EXPECT_NO_THROW(truncate(a, 5));
}

TEST(Truncate, CoordinatesLieOnTheJetScheme)
{
    for (const auto& cv : catalog_varieties(16)) {
        for (const auto& ca : cv.arcs) {
            for (std::size_t n = 0; n <= 3; ++n) {
                EXPECT_NO_THROW(jet_jacobian_corank(cv.variety, n, jet_coordinates(ca.arc, n)))
                    << cv.name << "/" << ca.name;
            }
        }
    }
}

TEST(ArcProperties, RaisingPrecisionKeepsTruncations)
{
    const auto a = make_arc(cusp(), {series_spec("t^2/(1-t)^2"), series_spec("t^3/(1-t)^3")}, 6);
    const auto b = a.with_precision(20);
    EXPECT_EQ(b.precision(), 20u);
    for (std::size_t n = 0; n < 6; ++n) {
        EXPECT_EQ(truncate(a, n).coordinates, truncate(b, n).coordinates);
    }
}

TEST(ArcProperties, KPointsHaveResidueDimZero)
{
    const auto a = make_arc(cusp(), {series_spec("4*t^2/(1+t)^2"), series_spec("8*t^3/(1+t)^3")}, 10);
    for (std::size_t n = 0; n < 10; ++n) {
        EXPECT_EQ(truncate(a, n).residue_dim, 0u);
    }
}

TEST(ArcProperties, RawSeriesAreCapped)
{
    const auto a2 = make_variety("A2", BaseField(), {"x", "y"}, {});
    const auto a = make_arc(a2, {ints({0, 1, 2, 3, 4, 5}), series_spec("t")}, 6);
    EXPECT_FALSE(a.can_reach(7));
    EXPECT_TRUE(a.can_reach(6));
    EXPECT_THROW((void)a.with_precision(12), PrecisionTooLow);
    const auto lower = a.with_precision(4);
    EXPECT_EQ(lower.components()[0], ints({0, 1, 2, 3}));
}

TEST(ArcProperties, PullBack)
{
    const auto a = make_arc(cusp(), {series_spec("t^2"), series_spec("t^3")}, 10);
    EXPECT_EQ(a.pull_back(poly("x*y", {"x", "y"})), ser("t^5", 10));
}

TEST(Pushforward, NormalizationOfTheCusp)
{
    const auto f = cusp_normalization();
    const auto beta = make_arc(f.source, {generic_spec("s", {0})}, 10);
    EXPECT_NO_THROW(validate_morphism_on_arc(f, beta));
    const auto alpha = pushforward(f, beta);
    EXPECT_EQ(alpha.precision(), 10u);
    const auto s1 = sym("s_1");
    EXPECT_EQ(alpha.components()[0][2], s1 * s1);
    EXPECT_EQ(alpha.components()[1][3], s1 * s1 * s1);
    // Re-expansion goes through beta's source.
    EXPECT_EQ(alpha.with_precision(20).precision(), 20u);
}

TEST(Pushforward, InvalidMorphismOnArc)
{
    const auto src = make_variety("A1", BaseField(), {"s"}, {});
    const auto bad = make_morphism(src, cusp(), {poly("s^2", {"s"}), poly("s^2", {"s"})});
    const auto beta = make_arc(src, {series_spec("t")}, 10);
    EXPECT_THROW(validate_morphism_on_arc(bad, beta), MorphismInvalidOnArc);
    EXPECT_THROW(pushforward(bad, beta), MorphismInvalidOnArc);
}
