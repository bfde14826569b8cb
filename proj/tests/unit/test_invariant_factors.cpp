#include <gtest/gtest.h>

#include <random>

#include "jetspace/catalog.hpp"
#include "jetspace/errors.hpp"
#include "jetspace/invariant_factors.hpp"
#include "test_support.hpp"

using namespace jt;

namespace {

SeriesMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t precision)
{
    std::uniform_real_distribution<double> bias(0.2, 0.9);
    std::uniform_int_distribution<std::size_t> deg(0, 5);
    SeriesMatrix m(rows);
    for (auto& row : m) {
        for (std::size_t j = 0; j < cols; ++j) {
            row.push_back(random_series(rng, deg(rng), precision, bias(rng)));
        }
    }
    return m;
}

// Random unit of L[t]/(t^P): nonzero constant term.
TruncatedSeries random_unit(std::mt19937& rng, std::size_t precision)
{
    auto s = random_series(rng, 3, precision, 0.4);
    auto c = s.coefficients();
    if (c[0].is_zero()) {
        c[0] = q(-2);
    }
    return TruncatedSeries(c);
}

// Applies random elementary row and column operations with unit pivots.
SeriesMatrix scramble(std::mt19937& rng, SeriesMatrix m, std::size_t columns, std::size_t precision)
{
    const std::size_t rows = m.size();
    std::uniform_int_distribution<int> kind(0, 3);
    for (int step = 0; step < 8; ++step) {
        const int k = kind(rng);
        if (k == 0 && rows > 1) {
            std::uniform_int_distribution<std::size_t> r(0, rows - 1);
            const auto a = r(rng);
            const auto b = r(rng);
            if (a != b) {
                const auto c = random_series(rng, 3, precision, 0.3);
                for (std::size_t j = 0; j < columns; ++j) {
                    m[a][j] = m[a][j] + c * m[b][j];
                }
            }
        } else if (k == 1 && columns > 1) {
            std::uniform_int_distribution<std::size_t> r(0, columns - 1);
            const auto a = r(rng);
            const auto b = r(rng);
            if (a != b) {
                const auto c = random_series(rng, 3, precision, 0.3);
                for (auto& row : m) {
                    row[a] = row[a] + c * row[b];
                }
            }
        } else if (k == 2 && rows > 0) {
            std::uniform_int_distribution<std::size_t> r(0, rows - 1);
            const auto u = random_unit(rng, precision);
            for (auto& entry : m[r(rng)]) {
                entry = u * entry;
            }
        } else if (columns > 0) {
            std::uniform_int_distribution<std::size_t> r(0, columns - 1);
            const auto u = random_unit(rng, precision);
            const auto j = r(rng);
            for (auto& row : m) {
                row[j] = u * row[j];
            }
        }
    }
    return m;
}

SeriesMatrix diag_t_t2(std::size_t precision)
{
    return {{ser("t", precision), ser("0", precision)}, {ser("0", precision), ser("t^2", precision)}};
}

}  // namespace

TEST(SmithOrders, CuspRow)
{
    const SeriesMatrix m = {{ser("-3*t^4", 12), ser("2*t^3", 12)}};
    const auto p = smith_orders(m, 2, 12);
    EXPECT_EQ(p.betti, 1u);
    EXPECT_EQ(p.factors, (std::vector<std::uint64_t>{3}));
    EXPECT_EQ(p.c(0), OrderValue::at_least(12));
    EXPECT_EQ(p.c(1), OrderValue::finite(3));
    EXPECT_EQ(p.c(2), OrderValue::finite(0));
    // One relation and two generators: the free summand is genuine.
    EXPECT_FALSE(p.precision_limited);
    EXPECT_EQ(p.e(0), OrderValue::at_least(12));
    EXPECT_EQ(p.e(1), OrderValue::finite(3));
    EXPECT_EQ(to_string(p), "d=1 e=[3] c=[>=12,3,0]");
}

TEST(SmithOrders, EmptyMatrixIsFree)
{
    const auto p = smith_orders({}, 2, 10);
    EXPECT_EQ(p.betti, 2u);
    EXPECT_TRUE(p.factors.empty());
    EXPECT_FALSE(p.precision_limited);
    EXPECT_EQ(p.c(2), OrderValue::finite(0));
}

TEST(SmithOrders, Diagonal)
{
    const auto p = smith_orders(diag_t_t2(10), 2, 10);
    EXPECT_EQ(p.betti, 0u);
    EXPECT_EQ(p.factors, (std::vector<std::uint64_t>{2, 1}));
    EXPECT_EQ(p.c(0), OrderValue::finite(3));
    EXPECT_EQ(p.c(1), OrderValue::finite(1));
    EXPECT_FALSE(p.precision_limited);
}

TEST(SmithOrders, FiniteLevelCapsFactors)
{
    const SeriesMatrix m = {{ser("-3*t^4", 12), ser("2*t^3", 12)}};
    const auto p1 = smith_orders(m, 2, 12, 1);
    EXPECT_EQ(p1.betti, 2u);
    EXPECT_EQ(p1.c(0), OrderValue::finite(2));
    EXPECT_EQ(p1.c(2), OrderValue::finite(0));
    EXPECT_FALSE(p1.precision_limited);
    const auto p5 = smith_orders(m, 2, 12, 5);
    EXPECT_EQ(p5.betti, 1u);
    EXPECT_EQ(p5.factors, (std::vector<std::uint64_t>{3}));
    EXPECT_EQ(p5.c(0), OrderValue::finite(6));
    EXPECT_EQ(p5.c(1), OrderValue::finite(3));
    EXPECT_THROW(smith_orders(m, 2, 12, 12), PrecisionTooLow);
}

TEST(SmithOrders, ShapeErrors)
{
    EXPECT_THROW(smith_orders({{ser("t", 4)}}, 2, 4), InvalidArgument);
    EXPECT_THROW(smith_orders({{ser("t", 4)}}, 1, 8), PrecisionTooLow);
}

TEST(FittingMinorOracle, Examples)
{
    const auto d = diag_t_t2(10);
    EXPECT_EQ(fitting_minor_oracle(d, 2, 10, 0), OrderValue::finite(3));
    EXPECT_EQ(fitting_minor_oracle(d, 2, 10, 1), OrderValue::finite(1));
    EXPECT_EQ(fitting_minor_oracle(d, 2, 10, 2), OrderValue::finite(0));
    EXPECT_EQ(fitting_minor_oracle(d, 2, 10, 7), OrderValue::finite(0));
    EXPECT_EQ(fitting_minor_oracle({}, 2, 10, 0), OrderValue::at_least(10));
}

TEST(FittingMinorOracle, MatrixTooLarge)
{
    SeriesMatrix big(7, std::vector<TruncatedSeries>(7, ser("1", 4)));
    EXPECT_THROW(fitting_minor_oracle(big, 7, 4, 0), MatrixTooLarge);
}

TEST(InvariantFactorProperties, FittingInvariantsMatchMinorOracle)
{
    std::mt19937 rng(123);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const std::size_t precision = 16;
    for (int trial = 0; trial < 80; ++trial) {
        const auto rows = dim(rng);
        const auto cols = dim(rng);
        const auto m = random_matrix(rng, rows, cols, precision);
        const auto p = smith_orders(m, cols, precision);
        for (std::size_t i = 0; i <= cols; ++i) {
            EXPECT_EQ(p.c(i), fitting_minor_oracle(m, cols, precision, i)) << "trial " << trial << " i=" << i;
        }
    }
}

TEST(InvariantFactorProperties, FiniteLevelsMatchMinorOracle)
{
    std::mt19937 rng(321);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto rows = dim(rng);
        const auto cols = dim(rng);
        const auto m = random_matrix(rng, rows, cols, 12);
        for (std::size_t n = 0; n < 6; ++n) {
            const auto p = smith_orders(m, cols, 12, n);
            for (std::size_t i = 0; i <= cols; ++i) {
                // At level n both sides are known modulo t^{n+1}.
                EXPECT_EQ(p.c(i).value(), fitting_minor_oracle(m, cols, n + 1, i).value());
            }
        }
    }
}

TEST(InvariantFactorProperties, UnimodularInvariance)
{
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const std::size_t precision = 14;
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = dim(rng);
        const auto cols = dim(rng);
        const auto m = random_matrix(rng, rows, cols, precision);
        const auto before = smith_orders(m, cols, precision);
        const auto after = smith_orders(scramble(rng, m, cols, precision), cols, precision);
        EXPECT_EQ(before.betti, after.betti);
        EXPECT_EQ(before.factors, after.factors);
        EXPECT_EQ(before.fitting, after.fitting);
        EXPECT_EQ(before.precision_limited, after.precision_limited);
    }
}

TEST(InvariantFactorProperties, TruncationCompatibility)
{
    std::mt19937 rng(8);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const auto rows = dim(rng);
        const auto cols = dim(rng);
        const auto m = random_matrix(rng, rows, cols, 10);
        for (std::size_t top = 1; top <= 8; ++top) {
            const auto pm = smith_orders(m, cols, 10, top);
            for (std::size_t n = 0; n < top; ++n) {
                const auto pn = smith_orders(m, cols, 10, n);
                for (std::size_t i = 0; i < cols; ++i) {
                    EXPECT_EQ(pn.e(i), min(OrderValue::finite(n + 1), pm.e(i)));
                }
                EXPECT_GE(pn.betti, pm.betti);
            }
        }
    }
}

TEST(ProfileOfOmega, Examples)
{
    const auto a3 = make_variety("A3", BaseField(), {"x", "y", "z"}, {});
    const auto free_arc = make_arc(a3, {series_spec("t"), generic_spec("u"), series_spec("0")}, 10);
    const auto pf = profile_of_omega(free_arc, std::nullopt);
    EXPECT_EQ(pf.betti, 3u);
    EXPECT_TRUE(pf.factors.empty());

    const auto cusp = make_variety("cusp", BaseField(), {"x", "y"}, {poly("y^2 - x^3", {"x", "y"})});
    const auto ca = make_arc(cusp, {series_spec("t^2"), series_spec("t^3")}, 12);
    const auto pc = profile_of_omega(ca, std::nullopt);
    EXPECT_EQ(pc.betti, 1u);
    EXPECT_EQ(pc.factors, (std::vector<std::uint64_t>{3}));

    const std::vector<std::string> v = {"x", "y", "z"};
    const auto w = make_variety("whitney", BaseField(), v, {poly("x*y^2 - z^2", v)});
    const auto wa = make_arc(w, {series_spec("t"), series_spec("0"), series_spec("0")}, 8);
    const auto pw = profile_of_omega(wa, std::nullopt);
    EXPECT_EQ(pw.betti, 3u);
    EXPECT_TRUE(pw.precision_limited);
    EXPECT_EQ(pw.c(0), OrderValue::at_least(8));
}

TEST(RefinedProfile, DoublesUpToTheCap)
{
    const std::vector<std::string> v = {"x", "y", "z"};
    const auto w = make_variety("whitney", BaseField(), v, {poly("x*y^2 - z^2", v)});
    const auto wa = make_arc(w, {series_spec("t"), series_spec("0"), series_spec("0")}, 8);
    const auto r = refined_profile(omega_presentation(w), wa, 40);
    EXPECT_EQ(r.arc.precision(), 40u);
    EXPECT_TRUE(r.profile.precision_limited);

    // y = t^20 makes the relation t^40 visible once P > 40.
    const auto late = make_arc(w, {series_spec("0"), series_spec("t^20"), series_spec("0")}, 8);
    const auto rl = refined_profile(omega_presentation(w), late, 192);
    EXPECT_FALSE(rl.profile.precision_limited);
    EXPECT_EQ(rl.arc.precision(), 64u);
    EXPECT_EQ(rl.profile.betti, 2u);
    EXPECT_EQ(rl.profile.factors, (std::vector<std::uint64_t>{40}));
}

TEST(RefinedProfile, RawSeriesStopAtTheirPrecision)
{
    const std::vector<std::string> v = {"x", "y", "z"};
    const auto w = make_variety("whitney", BaseField(), v, {poly("x*y^2 - z^2", v)});
    const auto wa = make_arc(w, {ints({0, 1, 0, 0, 0, 0}), ints({0, 0, 0, 0, 0, 0}), ints({0, 0, 0, 0, 0, 0})}, 6);
    const auto r = refined_profile(omega_presentation(w), wa, 192);
    EXPECT_EQ(r.arc.precision(), 6u);
    EXPECT_TRUE(r.profile.precision_limited);
}
