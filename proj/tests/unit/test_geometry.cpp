#include <gtest/gtest.h>

#include <random>

#include "jetspace/analysis.hpp"
#include "jetspace/catalog.hpp"
#include "jetspace/errors.hpp"
#include "jetspace/geometry.hpp"
#include "jetspace/invariant_factors.hpp"
#include "test_support.hpp"

using namespace jt;

namespace {

VarietyPresentation plane(const std::string& name, const std::vector<std::string>& vars)
{
    return make_variety(name, BaseField(), vars, {});
}

MorphismPresentation plane_map(const std::vector<std::string>& src, const std::vector<std::string>& tgt,
                               const std::vector<std::string>& comps)
{
    std::vector<SparsePolynomial> c;
    for (const auto& text : comps) {
        c.push_back(poly(text, src));
    }
    return make_morphism(plane("Y", src), plane("X", tgt), std::move(c));
}

std::vector<std::string> rename(const std::vector<std::string>& comps, const std::string& from0,
                                const std::string& from1, const std::string& to0, const std::string& to1)
{
    std::vector<std::string> out;
    for (auto c : comps) {
        std::string r;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c.compare(i, from0.size(), from0) == 0) {
                r += to0;
                i += from0.size() - 1;
            } else if (c.compare(i, from1.size(), from1) == 0) {
                r += to1;
                i += from1.size() - 1;
            } else {
                r += c[i];
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST(OmegaPresentation, CuspGradient)
{
    const auto cusp = make_variety("cusp", BaseField(), {"x", "y"}, {poly("y^2 - x^3", {"x", "y"})});
    const auto p = omega_presentation(cusp);
    ASSERT_EQ(p.num_relations(), 1u);
    ASSERT_EQ(p.num_columns(), 2u);
    EXPECT_EQ(p.relations[0][0], poly("-3*x^2", {"x", "y"}));
    EXPECT_EQ(p.relations[0][1], poly("2*y", {"x", "y"}));
}

TEST(OmegaPresentation, AffinePlaneIsFree)
{
    const auto p = omega_presentation(plane("A2", {"x", "y"}));
    EXPECT_EQ(p.num_relations(), 0u);
    EXPECT_EQ(p.num_columns(), 2u);
}

TEST(OmegaPresentation, WhitneyGradient)
{
    const std::vector<std::string> v = {"x", "y", "z"};
    const auto w = make_variety("whitney", BaseField(), v, {poly("x*y^2 - z^2", v)});
    const auto p = omega_presentation(w);
    ASSERT_EQ(p.num_relations(), 1u);
    EXPECT_EQ(p.relations[0][0], poly("y^2", v));
    EXPECT_EQ(p.relations[0][1], poly("2*x*y", v));
    EXPECT_EQ(p.relations[0][2], poly("-2*z", v));
}

TEST(RelativeOmega, BlowupChart)
{
    const auto f = plane_map({"u", "v"}, {"x", "y"}, {"u", "u*v"});
    const auto p = relative_omega_presentation(f);
    ASSERT_EQ(p.num_relations(), 2u);
    const std::vector<std::string> uv = {"u", "v"};
    EXPECT_EQ(p.relations[0][0], poly("1", uv));
    EXPECT_EQ(p.relations[0][1], poly("0", uv));
    EXPECT_EQ(p.relations[1][0], poly("v", uv));
    EXPECT_EQ(p.relations[1][1], poly("u", uv));
}

TEST(RelativeOmega, IdentityHasUnitJacobian)
{
    const auto f = identity_morphism(1);
    const auto p = relative_omega_presentation(f);
    ASSERT_EQ(p.num_relations(), 1u);
    EXPECT_EQ(p.relations[0][0], SparsePolynomial(BaseField(), 1));
    const auto beta = make_arc(f.source, {generic_spec("a")}, 8);
    EXPECT_EQ(ord_jacobian(f, beta, 64), OrderValue::finite(0));
}

TEST(RelativeOmega, SquaringMap)
{
    const auto f = make_morphism(plane("Y", {"u"}), plane("X", {"x"}), {poly("u^2", {"u"})});
    const auto p = relative_omega_presentation(f);
    ASSERT_EQ(p.num_relations(), 1u);
    EXPECT_EQ(p.relations[0][0], poly("2*u", {"u"}));
}

TEST(RelativeOmega, SourceRelationsComeFirst)
{
    const auto src = make_variety("Y", BaseField(), {"s", "r"}, {poly("r - s^2", {"s", "r"})});
    const auto f = make_morphism(src, plane("X", {"x"}), {poly("s", {"s", "r"})});
    const auto p = relative_omega_presentation(f);
    ASSERT_EQ(p.num_relations(), 2u);
    EXPECT_EQ(p.relations[0][0], poly("-2*s", {"s", "r"}));
    EXPECT_EQ(p.relations[1][0], poly("1", {"s", "r"}));
}

TEST(Geometry, Validation)
{
    EXPECT_THROW(make_variety("bad", BaseField(), {"x"}, {poly("x*y", {"x", "y"})}), UnknownVariable);
    EXPECT_THROW(make_morphism(plane("Y", {"u"}), plane("X", {"x", "y"}), {poly("u", {"u"})}), InvalidArgument);
}

TEST(Geometry, PulledBackGeneratorsVanishOnNormalization)
{
    const auto f = cusp_normalization();
    for (const auto& g : pulled_back_generators(f)) {
        EXPECT_TRUE(g.is_zero());
    }
    const auto w = whitney_normalization();
    for (const auto& g : pulled_back_generators(w)) {
        EXPECT_TRUE(g.is_zero());
    }
}

TEST(Geometry, DivisorMapsToPoint)
{
    EXPECT_TRUE(divisor_maps_to_point(blowup_chart(2), 0));
    EXPECT_TRUE(divisor_maps_to_point(blowup_chart(3), 0));
    EXPECT_FALSE(divisor_maps_to_point(blowup_chart(2), 1));
    EXPECT_FALSE(divisor_maps_to_point(identity_morphism(2), 0));
    EXPECT_THROW(divisor_maps_to_point(identity_morphism(2), 5), InvalidArgument);
}

TEST(GeometryProperties, AffineSpaceOmegaIsFreeAlongEveryArc)
{
    std::mt19937 rng(3);
    const std::vector<std::string> v = {"x", "y", "z"};
    const auto a3 = plane("A3", v);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ComponentSpec> comps;
        for (int i = 0; i < 3; ++i) {
            comps.emplace_back(random_series(rng, 5, 10, 0.5));
        }
        const auto arc = make_arc(a3, comps, 10);
        const auto prof = profile_of_omega(arc, std::nullopt);
        EXPECT_EQ(prof.betti, 3u);
        EXPECT_TRUE(prof.factors.empty());
        EXPECT_FALSE(prof.precision_limited);
        for (std::size_t n = 0; n < 6; ++n) {
            EXPECT_EQ(profile_of_omega(arc, n).betti, 3u);
        }
    }
}

TEST(GeometryProperties, JacobianOrdersAreAdditiveUnderComposition)
{
    // Maps A^2 -> A^2 written in the variables (a, b); all have nonzero
    // Jacobian determinant.
    const std::vector<std::vector<std::string>> maps = {
        {"a", "a*b"}, {"a*b", "b"}, {"a", "b + a^2"}, {"a + b^2", "b"}, {"a^2", "b"}, {"a*b", "a + b"}, {"a", "b^3"}};
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    std::uniform_int_distribution<int> lead(0, 2);
    for (int trial = 0; trial < 12; ++trial) {
        const auto& fm = maps[pick(rng)];
        const auto& gm = maps[pick(rng)];
        const auto f = plane_map({"y1", "y2"}, {"x1", "x2"}, rename(fm, "a", "b", "y1", "y2"));
        const auto g = plane_map({"x1", "x2"}, {"z1", "z2"}, rename(gm, "a", "b", "x1", "x2"));

        std::map<Symbol, SparsePolynomial> subst;
        for (std::size_t i = 0; i < 2; ++i) {
            subst.emplace(f.target.variables[i], f.components[i]);
        }
        std::vector<SparsePolynomial> composed;
        for (const auto& c : g.components) {
            composed.push_back(c.substitute(subst));
        }
        const auto gf = make_morphism(f.source, g.target, composed);

        std::vector<ComponentSpec> comps;
        for (const char* prefix : {"p", "r"}) {
            comps.push_back(generic_spec(prefix, std::vector<long>(lead(rng), 0)));
        }
        const auto beta = make_arc(f.source, comps, 16);
        const auto alpha = pushforward(f, beta);

        const auto lhs = ord_jacobian(gf, beta, 64);
        const auto rhs = ord_jacobian(g, alpha, 64) + ord_jacobian(f, beta, 64);
        ASSERT_TRUE(lhs.is_finite());
        EXPECT_EQ(lhs, rhs) << "f = (" << fm[0] << ", " << fm[1] << "), g = (" << gm[0] << ", " << gm[1] << ")";
    }
}
