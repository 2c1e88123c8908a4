#ifndef POLYBERN_BERNOULLI_HPP
#define POLYBERN_BERNOULLI_HPP

#include <shared_mutex>
#include <vector>

#include <polybern/polynomial.hpp>
#include <polybern/rational.hpp>

namespace polybern
{

/// Growable cache of classical Bernoulli numbers B_n and Bernoulli numbers of
/// the second kind b_n (exponential convention). Growing the cache recomputes
/// at the larger order; earlier entries are unchanged.
class BernoulliCache
{
public:
	/// B_0..B_{n_max} with B_1 = -1/2.
	std::vector<Rational> classical(int n_max) const;
	/// b_0..b_{n_max}, coefficients of t^n/n! in t / log(1 + t).
	std::vector<Rational> second_kind(int n_max) const;

private:
	mutable std::shared_mutex mutex_;
	mutable std::vector<Rational> classical_;
	mutable std::vector<Rational> second_kind_;
};

const BernoulliCache &bernoulli_cache();

/// B_n = n! [t^n] t / (e^t - 1) for n = 0..n_max.
std::vector<Rational> bernoulli_numbers(int n_max);

/// b_n = n! [t^n] t / log(1 + t) for n = 0..n_max.
std::vector<Rational> bernoulli2nd_numbers(int n_max);

/// Raw coefficients [t^n] t / log(1 + t) (Gregory coefficients); b_n / n!.
std::vector<Rational> gregory_coefficients(int n_max);

/// b_n(x) = sum_l C(n, l) b_l (x)_{n-l}.
Polynomial bernoulli2nd_poly(int n);

/// b_0(x)..b_{n_max}(x) read off the generating function
/// (t / log(1 + t)) (1 + t)^x over the polynomial coefficient ring.
std::vector<Polynomial> bernoulli2nd_polys_gf(int n_max);

/// B_n^{(alpha)}(x) = n! [t^n] (t / (e^t - 1))^alpha e^{x t}, integer alpha >= 0.
Polynomial higher_order_bernoulli_poly(int n, int alpha);
Rational higher_order_bernoulli(int n, int alpha, const Rational &x);

/// b_n(x) == B_n^{(n)}(x + 1) as polynomials.
bool check_b_equals_higher_order(int n);

} // namespace polybern

#endif
