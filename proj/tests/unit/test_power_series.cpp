#include <gtest/gtest.h>

#include <random>

#include "jetspace/errors.hpp"
#include "test_support.hpp"

using namespace jt;

namespace {

// Power-series long division over Q: c_k = (n_k - sum_{j>=1} d_j c_{k-j}) / d_0.
std::vector<mpq_class> long_division(const std::vector<mpq_class>& num, const std::vector<mpq_class>& den,
                                     std::size_t precision)
{
    std::vector<mpq_class> c(precision, 0);
    for (std::size_t k = 0; k < precision; ++k) {
        mpq_class acc = k < num.size() ? num[k] : mpq_class(0);
        for (std::size_t j = 1; j <= k && j < den.size(); ++j) {
            acc -= den[j] * c[k - j];
        }
        c[k] = acc / den[0];
    }
    return c;
}

TruncatedSeries from_rationals(const std::vector<mpq_class>& c)
{
    std::vector<FieldElement> coeffs;
    for (const auto& v : c) {
        coeffs.emplace_back(Scalar(BaseField(), v));
    }
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace

TEST(SeriesArith, Examples)
{
    EXPECT_EQ(series_arith(ints({1, 1, 0}), ints({1, -1, 0}), SeriesOp::Mul), ints({1, 0, -1}));
    EXPECT_EQ(series_arith(ints({0, 0, 1}), ints({0, 0, 0, 1}).truncated(3), SeriesOp::Add), ints({0, 0, 1}));
    EXPECT_EQ(ser("t^2 + t^3", 3), ints({0, 0, 1}));

    const auto u1 = sym("u_1");
    const auto u2 = sym("u_2");
    const auto a = TruncatedSeries::monomial(u1, 1, 4);
    const auto b = TruncatedSeries::monomial(u2, 1, 4);
    EXPECT_EQ(series_arith(a, b, SeriesOp::Mul), TruncatedSeries::monomial(u1 * u2, 2, 4));
}

TEST(SeriesArith, PrecisionIsTheMinimum)
{
    const auto r = series_arith(ints({1, 2, 3, 4, 5}), ints({1, 1}), SeriesOp::Add);
    EXPECT_EQ(r.precision(), 2u);
    EXPECT_EQ(r, ints({2, 3}));
    EXPECT_EQ(series_arith(ints({1, 2, 3}), ints({1, 1, 1, 1}), SeriesOp::Sub), ints({0, 1, 2}));
}

TEST(SeriesInvert, Examples)
{
    EXPECT_EQ(series_invert(ints({1, -1, 0})), ints({1, 1, 1}));
    EXPECT_EQ(series_invert(ints({2, 0})), TruncatedSeries({q(1, 2), q(0)}));
    EXPECT_THROW(series_invert(ints({0, 1})), NotAUnit);
    EXPECT_THROW(series_invert(ints({0, 0, 0})), NotAUnit);
}

TEST(SeriesInvert, SymbolicUnit)
{
    const auto u = sym("u");
    const auto a = TruncatedSeries({u, q(1), q(0), q(0)});
    const auto inv = series_invert(a);
    EXPECT_EQ(a * inv, TruncatedSeries::constant(q(1), 4));
    EXPECT_EQ(inv[0], q(1) / u);
    EXPECT_EQ(inv[1], -(q(1) / (u * u)));
}

TEST(Expand, Examples)
{
    EXPECT_EQ(ser("1/(1-t)", 4), ints({1, 1, 1, 1}));
    const auto s = ser("t^2/1", 2);
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(order(s), OrderValue::at_least(2));
}

TEST(Expand, LongDivisionOracle)
{
    const auto expected = long_division({0, 1, 1}, {1, 1}, 5);
    EXPECT_EQ(ser("(t+t^2)/(1+t)", 5), from_rationals(expected));
    EXPECT_EQ(ser("(t+t^2)/(1+t)", 5), ints({0, 1, 0, 0, 0}));

    const auto e2 = long_division({3, 0, -1, 2}, {2, -5, 1}, 9);
    EXPECT_EQ(ser("(3 - t^2 + 2*t^3)/(2 - 5*t + t^2)", 9), from_rationals(e2));
}

TEST(Expand, RandomQuotientsMatchLongDivision)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<long> nonzero(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<mpq_class> num(4), den(3);
        std::string ntext = "0", dtext;
        for (std::size_t i = 0; i < num.size(); ++i) {
            num[i] = coeff(rng);
            ntext += " + (" + num[i].get_str() + ")*t^" + std::to_string(i);
        }
        for (std::size_t i = 0; i < den.size(); ++i) {
            den[i] = i == 0 ? nonzero(rng) : coeff(rng);
            dtext += (i ? " + (" : "(") + den[i].get_str() + ")*t^" + std::to_string(i);
        }
        EXPECT_EQ(ser("(" + ntext + ")/(" + dtext + ")", 8), from_rationals(long_division(num, den, 8)));
    }
}

TEST(Expand, DenominatorNotUnit)
{
    EXPECT_THROW(parse_series("1/t", BaseField(), {}), DenominatorNotUnit);
    EXPECT_THROW(parse_series("1/(t + t^2)", BaseField(), {}), DenominatorNotUnit);
    // A common power of t cancels first.
    EXPECT_EQ(ser("t/(t + t^2)", 3), ints({1, -1, 1}));
    EXPECT_THROW(SeriesExpression({q(1)}, {q(0), q(1)}), DenominatorNotUnit);
}

TEST(Order, Examples)
{
    EXPECT_EQ(order(ints({0, 0, 0, 2, 1, 0})), OrderValue::finite(3));
    EXPECT_EQ(order(ints({0, 0, 0, 0, 0, 0})), OrderValue::at_least(6));
    const auto u1 = sym("u_1");
    const auto a = TruncatedSeries::monomial(u1, 1, 2);
    EXPECT_EQ(order(a - a), OrderValue::at_least(2));
}

TEST(OrderValue, SaturatingArithmetic)
{
    using O = OrderValue;
    EXPECT_EQ(O::finite(2) + O::finite(3), O::finite(5));
    EXPECT_EQ(O::finite(2) + O::at_least(6), O::at_least(8));
    EXPECT_EQ(min(O::finite(4), O::at_least(3)), O::at_least(3));
    EXPECT_EQ(min(O::finite(2), O::at_least(3)), O::finite(2));
    EXPECT_EQ(saturate(O::finite(7), 5), O::at_least(5));
    EXPECT_EQ(saturate(O::at_least(9), 5), O::at_least(5));
    EXPECT_EQ(saturate(O::finite(4), 5), O::finite(4));
    EXPECT_EQ(O::at_least(24).to_string(), ">=24");
    EXPECT_EQ(O::finite(3).to_string(), "3");
}

TEST(SeriesProperties, OrderOfProductIsSaturatingSum)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(rng, 6, 8, 0.6);
        const auto b = random_series(rng, 6, 8, 0.6);
        const auto lhs = order(a * b);
        const auto rhs = saturate(order(a) + order(b), 8);
        EXPECT_EQ(lhs, rhs) << a.to_string() << " * " << b.to_string();
    }
}

TEST(SeriesProperties, ExpansionPrefixesAgree)
{
    const std::vector<std::string> exprs = {"1/(1-t)", "(1+2*t)/(3-t+t^2)", "t^3/(1-t)^2", "(u + t)/(1 - u*t)"};
    for (const auto& e : exprs) {
        const auto big = ser(e, 12, {"u"});
        for (std::size_t p = 1; p <= 12; ++p) {
            EXPECT_EQ(big.truncated(p), ser(e, p, {"u"})) << e << " at P=" << p;
        }
    }
}

TEST(SeriesProperties, DoubleInversionIsIdentity)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_series(rng, 7, 8, 0.3);
        auto coeffs = a.coefficients();
        if (coeffs[0].is_zero()) {
            coeffs[0] = q(1 + trial % 4);
        }
        a = TruncatedSeries(coeffs);
        const auto inv = series_invert(a);
        EXPECT_EQ(series_invert(inv), a);
        EXPECT_EQ(a * inv, TruncatedSeries::constant(q(1), 8));
    }
}

TEST(SeriesProperties, ShiftAndEvaluate)
{
    const auto s = ints({0, 0, 3, 1, 4});
    EXPECT_EQ(s.shifted_down(2), ints({3, 1, 4}));
    EXPECT_THROW((void)s.shifted_down(3), InvalidArgument);

    const auto x = Symbol::intern("x");
    const auto y = Symbol::intern("y");
    const auto f = poly("y^2 - x^3", {"x", "y"});
    const auto r = evaluate(f, {{x, ser("t^2", 10)}, {y, ser("t^3", 10)}}, 10);
    EXPECT_TRUE(r.is_zero());
}
