#include <polybern/bernoulli.hpp>

#include <mutex>
#include <stdexcept>
#include <string>

#include <polybern/combinatorics.hpp>
#include <polybern/series.hpp>

namespace polybern
{

namespace
{

void require_nonnegative(int n, const char *what)
{
	if (n < 0) {
		throw std::invalid_argument(std::string(what) + ": index must be non-negative, got " + std::to_string(n));
	}
}

// (e^t - 1) / t: coefficients 1 / (j + 1)!.
RationalSeries expm1_over_t(std::size_t order)
{
	std::vector<Rational> c(order + 1);
	for (std::size_t j = 0; j <= order; ++j) {
		c[j] = Rational(1) / Rational::factorial(static_cast<unsigned>(j + 1));
	}
	return RationalSeries::from_coeffs(std::move(c), order);
}

// t / (e^t - 1) truncated at order.
RationalSeries bernoulli_gf(std::size_t order)
{
	return series_div_unit(RationalSeries::one(order), expm1_over_t(order));
}

// t / log(1 + t) truncated at order.
RationalSeries second_kind_gf(std::size_t order)
{
	return series_div_valuation(RationalSeries::identity(order + 1), log1p(order + 1), 1);
}

std::vector<Rational> prefix(const std::vector<Rational> &v, int n_max)
{
	return {v.begin(), v.begin() + n_max + 1};
}

} // namespace

std::vector<Rational> BernoulliCache::classical(int n_max) const
{
	require_nonnegative(n_max, "bernoulli_numbers");
	{
		std::shared_lock lock(mutex_);
		if (static_cast<int>(classical_.size()) > n_max) {
			return prefix(classical_, n_max);
		}
	}
	auto values = egf_coefficients(bernoulli_gf(static_cast<std::size_t>(n_max)));
	std::unique_lock lock(mutex_);
	if (values.size() > classical_.size()) {
		classical_ = std::move(values);
	}
	return prefix(classical_, n_max);
}

std::vector<Rational> BernoulliCache::second_kind(int n_max) const
{
	require_nonnegative(n_max, "bernoulli2nd_numbers");
	{
		std::shared_lock lock(mutex_);
		if (static_cast<int>(second_kind_.size()) > n_max) {
			return prefix(second_kind_, n_max);
		}
	}
	auto values = egf_coefficients(second_kind_gf(static_cast<std::size_t>(n_max)));
	std::unique_lock lock(mutex_);
	if (values.size() > second_kind_.size()) {
		second_kind_ = std::move(values);
	}
	return prefix(second_kind_, n_max);
}

const BernoulliCache &bernoulli_cache()
{
	static const BernoulliCache cache;
	return cache;
}

std::vector<Rational> bernoulli_numbers(int n_max)
{
	return bernoulli_cache().classical(n_max);
}

std::vector<Rational> bernoulli2nd_numbers(int n_max)
{
	return bernoulli_cache().second_kind(n_max);
}

std::vector<Rational> gregory_coefficients(int n_max)
{
	require_nonnegative(n_max, "gregory_coefficients");
	return second_kind_gf(static_cast<std::size_t>(n_max)).coeffs();
}

Polynomial bernoulli2nd_poly(int n)
{
	require_nonnegative(n, "bernoulli2nd_poly");
	const auto b = bernoulli2nd_numbers(n);
	Polynomial p;
	for (int l = 0; l <= n; ++l) {
		p += binomial(n, l) * b[l] * falling_factorial_poly(n - l);
	}
	return p;
}

std::vector<Polynomial> bernoulli2nd_polys_gf(int n_max)
{
	require_nonnegative(n_max, "bernoulli2nd_polys_gf");
	const auto order = static_cast<std::size_t>(n_max);
	const auto gf = lift(second_kind_gf(order)) * pow1p(indeterminate_x, order);
	return egf_coefficients(gf);
}

Polynomial higher_order_bernoulli_poly(int n, int alpha)
{
	require_nonnegative(n, "higher_order_bernoulli_poly");
	if (alpha < 0) {
		throw std::invalid_argument("negative order unsupported");
	}
	const auto order = static_cast<std::size_t>(n);
	const auto power = series_pow(bernoulli_gf(order), static_cast<unsigned long>(alpha));
	return egf_coefficient(lift(power) * exp_at(indeterminate_x, order), order);
}

Rational higher_order_bernoulli(int n, int alpha, const Rational &x)
{
	require_nonnegative(n, "higher_order_bernoulli");
	if (alpha < 0) {
		throw std::invalid_argument("negative order unsupported");
	}
	const auto order = static_cast<std::size_t>(n);
	const auto power = series_pow(bernoulli_gf(order), static_cast<unsigned long>(alpha));
	return egf_coefficient(power * exp_at(x, order), order);
}

bool check_b_equals_higher_order(int n)
{
	return bernoulli2nd_poly(n) == higher_order_bernoulli_poly(n, n).shifted(Rational(1));
}

} // namespace polybern
