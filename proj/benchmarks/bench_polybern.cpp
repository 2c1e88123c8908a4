#include <benchmark/benchmark.h>

#include <polybern/bernoulli.hpp>
#include <polybern/combinatorics.hpp>
#include <polybern/polybernoulli.hpp>
#include <polybern/series.hpp>

using namespace polybern;

namespace
{

RationalSeries dense_series(std::size_t order)
{
	std::vector<Rational> c;
	for (std::size_t j = 0; j <= order; ++j) {
		c.emplace_back(static_cast<long>(j % 7) + 1, static_cast<long>(j % 5) + 2);
	}
	return RationalSeries::from_coeffs(std::move(c), order);
}

} // namespace

static void BM_SeriesMul(benchmark::State &state)
{
	const auto order = static_cast<std::size_t>(state.range(0));
	const auto a = dense_series(order), b = dense_series(order);
	for (auto _ : state) {
		benchmark::DoNotOptimize(a * b);
	}
	state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_SeriesDivUnit(benchmark::State &state)
{
	const auto order = static_cast<std::size_t>(state.range(0));
	const auto a = dense_series(order), b = dense_series(order);
	for (auto _ : state) {
		benchmark::DoNotOptimize(series_div_unit(a, b));
	}
}
BENCHMARK(BM_SeriesDivUnit)->RangeMultiplier(2)->Range(8, 64);

static void BM_Compose(benchmark::State &state)
{
	const auto order = static_cast<std::size_t>(state.range(0));
	const auto inner = exp_at(Rational(1), order) - RationalSeries::one(order);
	for (auto _ : state) {
		benchmark::DoNotOptimize(series_compose(polybern::log1p(order), inner));
	}
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(8, 32);

// Generating-function route, uncached quotient: polylog of 1 - e^{-t} then division.
static void BM_PolylogQuotient(benchmark::State &state)
{
	const auto order = static_cast<std::size_t>(state.range(0));
	const int k = static_cast<int>(state.range(1));
	for (auto _ : state) {
		const auto inner = RationalSeries::one(order + 1) - exp_at(Rational(-1), order + 1);
		benchmark::DoNotOptimize(series_div_valuation(polylog_series(k, inner), polybern::log1p(order + 1), 1));
	}
}
BENCHMARK(BM_PolylogQuotient)->ArgsProduct({{10, 25}, {-5, 2, 5}});

static void BM_Theorem2Symbolic(benchmark::State &state)
{
	const int n = static_cast<int>(state.range(0));
	for (auto _ : state) {
		benchmark::DoNotOptimize(poly_b2nd_theorem2(n, 3, indeterminate_x));
	}
}
BENCHMARK(BM_Theorem2Symbolic)->Arg(10)->Arg(25);

static void BM_HigherOrderBridge(benchmark::State &state)
{
	const int n = static_cast<int>(state.range(0));
	for (auto _ : state) {
		benchmark::DoNotOptimize(check_b_equals_higher_order(n));
	}
}
BENCHMARK(BM_HigherOrderBridge)->Arg(10)->Arg(20);

static void BM_StirlingTriangle(benchmark::State &state)
{
	const int n = static_cast<int>(state.range(0));
	for (auto _ : state) {
		StirlingTriangle tri(StirlingKind::second);
		benchmark::DoNotOptimize(tri.row(n));
	}
}
BENCHMARK(BM_StirlingTriangle)->Arg(30)->Arg(100);
BENCHMARK_MAIN();
