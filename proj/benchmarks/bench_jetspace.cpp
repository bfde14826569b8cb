#include <benchmark/benchmark.h>

#include <random>

#include "jetspace/analysis.hpp"
#include "jetspace/catalog.hpp"
#include "jetspace/expression_parser.hpp"
#include "jetspace/invariant_factors.hpp"
#include "jetspace/jets.hpp"
#include "jetspace/linear_algebra.hpp"

using namespace jetspace;

namespace {

TruncatedSeries random_series(std::mt19937& rng, std::size_t precision)
{
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<FieldElement> c;
    for (std::size_t k = 0; k < precision; ++k) {
        c.emplace_back(BaseField(), k < 6 ? coeff(rng) : 0);
    }
    return TruncatedSeries(std::move(c));
}

SeriesMatrix random_matrix(std::size_t dim, std::size_t precision)
{
    std::mt19937 rng(static_cast<unsigned>(dim));
    SeriesMatrix m(dim);
    for (auto& row : m) {
        for (std::size_t j = 0; j < dim; ++j) {
            row.push_back(random_series(rng, precision));
        }
    }
    return m;
}

VarietyPresentation cusp()
{
    return make_variety("cusp", BaseField(), {"x", "y"}, {parse_polynomial("y^2 - x^3", BaseField(), {"x", "y"})}, 1);
}

}  // namespace

static void BM_SeriesMultiply(benchmark::State& state)
{
    const auto p = static_cast<std::size_t>(state.range(0));
    const auto a = expand(parse_series("1/(1 - u*t)", BaseField(), {"u"}), p);
    const auto b = expand(parse_series("(1 + t)/(1 - t)", BaseField(), {}), p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(12)->Arg(24)->Arg(48);

static void BM_SmithOrders(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(dim, 24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_orders(m, dim, 24));
    }
}
BENCHMARK(BM_SmithOrders)->DenseRange(2, 6, 2);

static void BM_FittingMinorOracle(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(dim, 24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fitting_minor_oracle(m, dim, 24, 0));
    }
}
BENCHMARK(BM_FittingMinorOracle)->DenseRange(2, 4, 1);

static void BM_JetJacobianCorank(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = cusp();
    const auto arc = make_arc(x, {parse_series("t^2", BaseField(), {}), parse_series("t^3", BaseField(), {})}, 24);
    const auto point = jet_coordinates(arc, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(jet_jacobian_corank(x, n, point));
    }
}
BENCHMARK(BM_JetJacobianCorank)->DenseRange(2, 6, 2);

static void BM_FiberDimFormula(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto arc = make_arc(cusp(), {parse_series("t^2", BaseField(), {}), parse_series("t^3", BaseField(), {})}, 24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fiber_dim_formula(arc, n, 192));
    }
}
BENCHMARK(BM_FiberDimFormula)->DenseRange(2, 6, 2);

static void BM_TranscendenceDegree(benchmark::State& state)
{
    const auto d = divisorial_arc(blowup_chart(2), 0, 1, 24);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<FieldElement> coeffs;
    for (const auto& c : jet_coordinates(d.alpha, n)) {
        coeffs.insert(coeffs.end(), c.begin(), c.end());
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(transcendence_degree(coeffs));
    }
}
BENCHMARK(BM_TranscendenceDegree)->Arg(4)->Arg(8)->Arg(12);

static void BM_MatherCheck(benchmark::State& state)
{
    const auto q = static_cast<std::size_t>(state.range(0));
    const auto f = blowup_chart(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mather_discrepancy_check(f, 0, q, AnalysisOptions()));
    }
}
BENCHMARK(BM_MatherCheck)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Catalog(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_catalog(AnalysisOptions()));
    }
}
BENCHMARK(BM_Catalog)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
