#ifndef POLYBERN_POLYBERNOULLI_HPP
#define POLYBERN_POLYBERNOULLI_HPP

#include <string>
#include <variant>
#include <vector>

#include <polybern/polynomial.hpp>
#include <polybern/rational.hpp>
#include <polybern/series.hpp>

namespace polybern
{

/// Evaluation point: a rational number or the symbolic indeterminate x.
using Argument = std::variant<Rational, Indeterminate>;
/// A numeric value or a polynomial in x, matching the Argument kind.
using Value = std::variant<Rational, Polynomial>;

std::string to_string(const Argument &x);
std::string to_string(const Value &v);

enum class Route { gf_oracle, theorem1, theorem2 };

std::string to_string(Route route);

/// b_n^{(k)}(x) together with how it was obtained.
struct PolyBernoulliResult {
	int n = 0;
	int k = 0;
	Argument x = Rational{};
	Value value = Rational{};
	Route route = Route::gf_oracle;
};

/// sum_{m=1}^{N} inner^m / m^k truncated at N = inner.order(). Any integer k is
/// accepted; for k <= 0 the weights are m^{|k|}.
RationalSeries polylog_series(int k, const RationalSeries &inner);

/// Li_k(1 - e^{-t}) / log(1 + t) through t^{order}, computed at order + 1 and
/// divided with valuation 1.
RationalSeries poly_b2nd_quotient(int k, std::size_t order);

/// b_0^{(k)}(x)..b_{n_max}^{(k)}(x) from the generating function
/// Li_k(1 - e^{-t}) / log(1 + t) * (1 + t)^x.
std::vector<PolyBernoulliResult> poly_b2nd_gf(int n_max, int k, const Argument &x);

/// Numeric shortcut for the generating-function route.
std::vector<Rational> poly_b2nd_gf_values(int n_max, int k, const Rational &x);
/// Symbolic shortcut for the generating-function route.
std::vector<Polynomial> poly_b2nd_gf_polys(int n_max, int k);

/// k = 2 closed form: sum_l C(n, l) B_l b_{n-l}(x) / (l + 1).
PolyBernoulliResult poly_b2nd_theorem1(int n, const Argument &x);

/// Weight of b_{n-l}(x) in the general closed form:
/// sum_{p=1}^{l+1} (-1)^{p+l+1} p! S_2(l+1, p) / (p^k (l + 1)).
/// Memoized per (l, k).
Rational theorem2_weight(int l, int k);

/// General closed form: sum_l C(n, l) theorem2_weight(l, k) b_{n-l}(x).
PolyBernoulliResult poly_b2nd_theorem2(int n, int k, const Argument &x);

/// Right-hand side of the forward difference b_n^{(k)}(x + 1) - b_n^{(k)}(x):
/// sum_{p=1}^{n} sum_{m=1}^{p} C(n, p) (-1)^{m+p} m! S_2(p, m) b_{n-p}(x) / m^k.
/// Throws std::invalid_argument for n = 0 (the identity is stated for n >= 1).
Rational theorem3_rhs(int n, int k, const Rational &x);

/// Addition formula right-hand side: sum_l C(n, l) b_{n-l}^{(k)}(x) (y)_l, with
/// the b^{(k)} values taken from the generating-function route.
Rational theorem4_rhs(int n, int k, const Rational &x, const Rational &y);

} // namespace polybern

#endif
