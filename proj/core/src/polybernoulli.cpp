#include <polybern/polybernoulli.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include <polybern/bernoulli.hpp>
#include <polybern/combinatorics.hpp>

namespace polybern
{

namespace
{

void require_nonnegative(int n, const char *what)
{
	if (n < 0) {
		throw std::invalid_argument(std::string(what) + ": n must be non-negative, got " + std::to_string(n));
	}
}

Rational polylog_weight(int m, int k)
{
	return Rational(m).pow(-static_cast<long>(k));
}

// Quotient series per k, grown monotonically.
class QuotientCache
{
public:
	RationalSeries get(int k, std::size_t order)
	{
		{
			std::shared_lock lock(mutex_);
			if (auto it = cache_.find(k); it != cache_.end() && it->second.order() >= order) {
				return it->second.truncated(order);
			}
		}
		const std::size_t n = order + 1;
		const auto inner = RationalSeries::one(n) - exp_at(Rational(-1), n);
		auto q = series_div_valuation(polylog_series(k, inner), log1p(n), 1);
		std::unique_lock lock(mutex_);
		auto [it, inserted] = cache_.try_emplace(k, q);
		if (!inserted && it->second.order() < q.order()) {
			it->second = q;
		}
		return q;
	}

private:
	std::shared_mutex mutex_;
	std::map<int, RationalSeries> cache_;
};

QuotientCache &quotient_cache()
{
	static QuotientCache cache;
	return cache;
}

class WeightCache
{
public:
	Rational get(int l, int k)
	{
		{
			std::shared_lock lock(mutex_);
			if (auto it = cache_.find({l, k}); it != cache_.end()) {
				return it->second;
			}
		}
		Rational sum;
		for (int p = 1; p <= l + 1; ++p) {
			Rational term = Rational::factorial(static_cast<unsigned>(p)) * stirling2(l + 1, p) * polylog_weight(p, k);
			if ((p + l + 1) % 2 != 0) {
				term = -term;
			}
			sum += term;
		}
		sum /= Rational(l + 1);
		std::unique_lock lock(mutex_);
		cache_.try_emplace({l, k}, sum);
		return sum;
	}

private:
	std::shared_mutex mutex_;
	std::map<std::pair<int, int>, Rational> cache_;
};

WeightCache &weight_cache()
{
	static WeightCache cache;
	return cache;
}

// sum_{m=1}^{p} (-1)^{m+p} m! S_2(p, m) / m^k, i.e. p! [t^p] Li_k(1 - e^{-t}).
Rational polylog_egf_coefficient(int p, int k)
{
	Rational sum;
	for (int m = 1; m <= p; ++m) {
		Rational term = Rational::factorial(static_cast<unsigned>(m)) * stirling2(p, m) * polylog_weight(m, k);
		if ((m + p) % 2 != 0) {
			term = -term;
		}
		sum += term;
	}
	return sum;
}

// Combines sum_l w_l b_{n-l}(x) symbolically or at a rational point.
template <typename WeightFn>
Value combine_with_second_kind(int n, const Argument &x, WeightFn weight)
{
	Polynomial acc;
	for (int l = 0; l <= n; ++l) {
		acc += weight(l) * bernoulli2nd_poly(n - l);
	}
	if (const auto *at = std::get_if<Rational>(&x)) {
		return acc.evaluate(*at);
	}
	return acc;
}

} // namespace

std::string to_string(const Argument &x)
{
	if (const auto *r = std::get_if<Rational>(&x)) {
		return r->str();
	}
	return "x";
}

std::string to_string(const Value &v)
{
	return std::visit([](const auto &value) { return value.str(); }, v);
}

std::string to_string(Route route)
{
	switch (route) {
	case Route::gf_oracle:
		return "gf-oracle";
	case Route::theorem1:
		return "theorem1";
	case Route::theorem2:
		return "theorem2";
	}
	return "unknown";
}

RationalSeries polylog_series(int k, const RationalSeries &inner)
{
	if (!inner[0].is_zero()) {
		throw std::domain_error("polylogarithm requires inner series with zero constant term");
	}
	const std::size_t n = inner.order();
	RationalSeries sum(n);
	RationalSeries power = RationalSeries::one(n);
	// inner^m has valuation >= m, so terms with m > n vanish.
	for (std::size_t m = 1; m <= n; ++m) {
		power = power * inner;
		sum += power * polylog_weight(static_cast<int>(m), k);
	}
	return sum;
}

RationalSeries poly_b2nd_quotient(int k, std::size_t order)
{
	return quotient_cache().get(k, order);
}

std::vector<PolyBernoulliResult> poly_b2nd_gf(int n_max, int k, const Argument &x)
{
	require_nonnegative(n_max, "poly_b2nd_gf");
	std::vector<PolyBernoulliResult> out;
	out.reserve(static_cast<std::size_t>(n_max) + 1);
	if (const auto *at = std::get_if<Rational>(&x)) {
		const auto values = poly_b2nd_gf_values(n_max, k, *at);
		for (int n = 0; n <= n_max; ++n) {
			out.push_back({n, k, x, values[n], Route::gf_oracle});
		}
	} else {
		const auto polys = poly_b2nd_gf_polys(n_max, k);
		for (int n = 0; n <= n_max; ++n) {
			out.push_back({n, k, x, polys[n], Route::gf_oracle});
		}
	}
	return out;
}

std::vector<Rational> poly_b2nd_gf_values(int n_max, int k, const Rational &x)
{
	require_nonnegative(n_max, "poly_b2nd_gf");
	const auto order = static_cast<std::size_t>(n_max);
	return egf_coefficients(poly_b2nd_quotient(k, order) * pow1p(x, order));
}

std::vector<Polynomial> poly_b2nd_gf_polys(int n_max, int k)
{
	require_nonnegative(n_max, "poly_b2nd_gf");
	const auto order = static_cast<std::size_t>(n_max);
	return egf_coefficients(lift(poly_b2nd_quotient(k, order)) * pow1p(indeterminate_x, order));
}

PolyBernoulliResult poly_b2nd_theorem1(int n, const Argument &x)
{
	require_nonnegative(n, "poly_b2nd_theorem1");
	const auto bern = bernoulli_numbers(n);
	auto value = combine_with_second_kind(n, x, [&](int l) { return binomial(n, l) * bern[l] / Rational(l + 1); });
	return {n, 2, x, std::move(value), Route::theorem1};
}

Rational theorem2_weight(int l, int k)
{
	require_nonnegative(l, "theorem2_weight");
	return weight_cache().get(l, k);
}

PolyBernoulliResult poly_b2nd_theorem2(int n, int k, const Argument &x)
{
	require_nonnegative(n, "poly_b2nd_theorem2");
	auto value = combine_with_second_kind(n, x, [&](int l) { return binomial(n, l) * theorem2_weight(l, k); });
	return {n, k, x, std::move(value), Route::theorem2};
}

Rational theorem3_rhs(int n, int k, const Rational &x)
{
	if (n < 1) {
		throw std::invalid_argument("forward-difference identity is stated for n >= 1");
	}
	Rational sum;
	for (int p = 1; p <= n; ++p) {
		sum += binomial(n, p) * polylog_egf_coefficient(p, k) * bernoulli2nd_poly(n - p).evaluate(x);
	}
	return sum;
}

Rational theorem4_rhs(int n, int k, const Rational &x, const Rational &y)
{
	require_nonnegative(n, "theorem4_rhs");
	const auto at_x = poly_b2nd_gf_values(n, k, x);
	Rational sum;
	for (int l = 0; l <= n; ++l) {
		sum += binomial(n, l) * at_x[n - l] * falling_factorial_at(y, l);
	}
	return sum;
}

} // namespace polybern
