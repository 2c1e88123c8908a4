#ifndef POLYBERN_SERIES_HPP
#define POLYBERN_SERIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <polybern/polynomial.hpp>
#include <polybern/rational.hpp>

namespace polybern
{

/// Tag selecting the symbolic indeterminate x instead of a rational point.
struct Indeterminate {
	friend bool operator==(Indeterminate, Indeterminate) { return true; }
};
inline constexpr Indeterminate indeterminate_x{};

template <typename Ring>
concept SeriesRing = std::is_same_v<Ring, Rational> || std::is_same_v<Ring, Polynomial>;

namespace detail
{

inline bool ring_is_zero(const Rational &r) { return r.is_zero(); }
inline bool ring_is_zero(const Polynomial &p) { return p.is_zero(); }

inline Rational divide_by_unit(const Rational &a, const Rational &unit) { return a / unit; }

// Polynomials have no division here; only nonzero constants are units.
inline Polynomial divide_by_unit(const Polynomial &a, const Polynomial &unit)
{
	if (unit.is_zero() || !unit.is_constant()) {
		throw std::domain_error("denominator not a unit; use series_div_valuation");
	}
	return a / unit.constant_term();
}

inline void require_same_order(std::size_t a, std::size_t b)
{
	if (a != b) {
		throw std::invalid_argument("series order mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
	}
}

} // namespace detail

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
///
/// The coefficient vector always has exactly order + 1 entries. Binary
/// operations require equal orders; operands are never silently re-truncated.
template <SeriesRing Ring>
class TruncatedSeries
{
public:
	using coefficient_type = Ring;

	/// The zero series of the given order.
	explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

	static TruncatedSeries from_coeffs(std::vector<Ring> coeffs, std::size_t order)
	{
		if (coeffs.size() != order + 1) {
			throw std::invalid_argument("coefficient count must equal order+1");
		}
		TruncatedSeries s(order);
		s.coeffs_ = std::move(coeffs);
		return s;
	}

	static TruncatedSeries constant(const Ring &c, std::size_t order)
	{
		TruncatedSeries s(order);
		s.coeffs_[0] = c;
		return s;
	}

	static TruncatedSeries one(std::size_t order) { return constant(Ring(1), order); }

	/// The series t (truncated to zero when order is 0).
	static TruncatedSeries identity(std::size_t order)
	{
		TruncatedSeries s(order);
		if (order >= 1) {
			s.coeffs_[1] = Ring(1);
		}
		return s;
	}

	std::size_t order() const noexcept { return coeffs_.size() - 1; }
	const std::vector<Ring> &coeffs() const noexcept { return coeffs_; }

	/// Raw coefficient of t^j; throws std::out_of_range beyond the order.
	const Ring &operator[](std::size_t j) const
	{
		if (j >= coeffs_.size()) {
			throw std::out_of_range("coefficient index " + std::to_string(j) + " exceeds series order "
			                        + std::to_string(order()));
		}
		return coeffs_[j];
	}

	/// Index of the first nonzero coefficient, or nullopt for the zero series.
	std::optional<std::size_t> valuation() const
	{
		for (std::size_t j = 0; j < coeffs_.size(); ++j) {
			if (!detail::ring_is_zero(coeffs_[j])) {
				return j;
			}
		}
		return std::nullopt;
	}

	bool is_zero() const { return !valuation().has_value(); }

	/// Drops terms above new_order (new_order <= order()).
	TruncatedSeries truncated(std::size_t new_order) const
	{
		if (new_order > order()) {
			throw std::invalid_argument("cannot extend a truncated series from order " + std::to_string(order())
			                            + " to " + std::to_string(new_order));
		}
		return from_coeffs(std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
	}

	TruncatedSeries operator-() const
	{
		TruncatedSeries r = *this;
		for (auto &c : r.coeffs_) {
			c = -c;
		}
		return r;
	}

	TruncatedSeries &operator+=(const TruncatedSeries &other)
	{
		detail::require_same_order(order(), other.order());
		for (std::size_t j = 0; j < coeffs_.size(); ++j) {
			coeffs_[j] += other.coeffs_[j];
		}
		return *this;
	}

	TruncatedSeries &operator-=(const TruncatedSeries &other)
	{
		detail::require_same_order(order(), other.order());
		for (std::size_t j = 0; j < coeffs_.size(); ++j) {
			coeffs_[j] -= other.coeffs_[j];
		}
		return *this;
	}

	TruncatedSeries &operator*=(const Rational &scalar)
	{
		for (auto &c : coeffs_) {
			c *= scalar;
		}
		return *this;
	}

	friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
	friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
	friend TruncatedSeries operator*(TruncatedSeries a, const Rational &s) { return a *= s; }
	friend TruncatedSeries operator*(const Rational &s, TruncatedSeries a) { return a *= s; }

	/// Cauchy product truncated at the common order.
	friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
	{
		detail::require_same_order(a.order(), b.order());
		const std::size_t n = a.order();
		TruncatedSeries r(n);
		for (std::size_t i = 0; i <= n; ++i) {
			if (detail::ring_is_zero(a.coeffs_[i])) {
				continue;
			}
			for (std::size_t j = 0; i + j <= n; ++j) {
				if (!detail::ring_is_zero(b.coeffs_[j])) {
					r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
				}
			}
		}
		return r;
	}

	friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
	std::vector<Ring> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PolynomialSeries = TruncatedSeries<Polynomial>;

template <SeriesRing Ring>
TruncatedSeries<Ring> series_from_coeffs(std::vector<Ring> coeffs, std::size_t order)
{
	return TruncatedSeries<Ring>::from_coeffs(std::move(coeffs), order);
}

template <SeriesRing Ring>
TruncatedSeries<Ring> series_add(const TruncatedSeries<Ring> &a, const TruncatedSeries<Ring> &b)
{
	return a + b;
}

template <SeriesRing Ring>
TruncatedSeries<Ring> series_mul(const TruncatedSeries<Ring> &a, const TruncatedSeries<Ring> &b)
{
	return a * b;
}

/// Quotient num / den where den has a unit constant term, by forward
/// substitution q_j = (num_j - sum_{i<j} q_i den_{j-i}) / den_0.
template <SeriesRing Ring>
TruncatedSeries<Ring> series_div_unit(const TruncatedSeries<Ring> &num, const TruncatedSeries<Ring> &den)
{
	detail::require_same_order(num.order(), den.order());
	if (detail::ring_is_zero(den[0])) {
		throw std::domain_error("denominator not a unit; use series_div_valuation");
	}
	const std::size_t n = num.order();
	std::vector<Ring> q(n + 1);
	for (std::size_t j = 0; j <= n; ++j) {
		Ring acc = num[j];
		for (std::size_t i = 0; i < j; ++i) {
			if (!detail::ring_is_zero(q[i]) && !detail::ring_is_zero(den[j - i])) {
				acc -= q[i] * den[j - i];
			}
		}
		q[j] = detail::divide_by_unit(acc, den[0]);
	}
	return TruncatedSeries<Ring>::from_coeffs(std::move(q), n);
}

/// Quotient of two series that both vanish to order v at t = 0. The result
/// has order N - v. The valuation is explicit and checked, never inferred.
template <SeriesRing Ring>
TruncatedSeries<Ring> series_div_valuation(const TruncatedSeries<Ring> &num, const TruncatedSeries<Ring> &den,
                                           std::size_t v)
{
	detail::require_same_order(num.order(), den.order());
	const std::size_t n = num.order();
	if (v > n) {
		throw std::invalid_argument("valuation " + std::to_string(v) + " exceeds series order " + std::to_string(n));
	}
	for (std::size_t j = 0; j < v; ++j) {
		if (!detail::ring_is_zero(num[j])) {
			throw std::domain_error("valuation precondition violated: numerator coefficient " + std::to_string(j)
			                        + " is nonzero");
		}
		if (!detail::ring_is_zero(den[j])) {
			throw std::domain_error("valuation precondition violated: denominator coefficient " + std::to_string(j)
			                        + " is nonzero");
		}
	}
	if (detail::ring_is_zero(den[v])) {
		throw std::domain_error("valuation precondition violated: denominator coefficient " + std::to_string(v)
		                        + " is zero");
	}
	const auto shift = [&](const TruncatedSeries<Ring> &s) {
		return TruncatedSeries<Ring>::from_coeffs(std::vector<Ring>(s.coeffs().begin() + v, s.coeffs().end()), n - v);
	};
	return series_div_unit(shift(num), shift(den));
}

/// outer(inner(t)) by Horner evaluation over truncated series.
template <SeriesRing Ring>
TruncatedSeries<Ring> series_compose(const TruncatedSeries<Ring> &outer, const TruncatedSeries<Ring> &inner)
{
	detail::require_same_order(outer.order(), inner.order());
	if (!detail::ring_is_zero(inner[0])) {
		throw std::domain_error("composition requires inner series with zero constant term");
	}
	const std::size_t n = outer.order();
	auto acc = TruncatedSeries<Ring>::constant(outer[n], n);
	for (std::size_t j = n; j-- > 0;) {
		acc = acc * inner;
		acc += TruncatedSeries<Ring>::constant(outer[j], n);
	}
	return acc;
}

/// s^e by binary exponentiation.
template <SeriesRing Ring>
TruncatedSeries<Ring> series_pow(TruncatedSeries<Ring> base, unsigned long exponent)
{
	auto result = TruncatedSeries<Ring>::one(base.order());
	while (exponent > 0) {
		if (exponent & 1UL) {
			result = result * base;
		}
		exponent >>= 1;
		if (exponent > 0) {
			base = base * base;
		}
	}
	return result;
}

/// n! * c_n, the coefficient of t^n / n!.
template <SeriesRing Ring>
Ring egf_coefficient(const TruncatedSeries<Ring> &s, std::size_t n)
{
	if (n > s.order()) {
		throw std::out_of_range("egf index " + std::to_string(n) + " exceeds series order " + std::to_string(s.order()));
	}
	Ring c = s[n];
	c *= Rational::factorial(static_cast<unsigned>(n));
	return c;
}

template <SeriesRing Ring>
std::vector<Ring> egf_coefficients(const TruncatedSeries<Ring> &s)
{
	std::vector<Ring> out;
	out.reserve(s.order() + 1);
	for (std::size_t n = 0; n <= s.order(); ++n) {
		out.push_back(egf_coefficient(s, n));
	}
	return out;
}

/// Embeds a rational series into the polynomial coefficient ring.
PolynomialSeries lift(const RationalSeries &s);

/// Evaluates every coefficient of a polynomial series at x = at.
RationalSeries evaluate_at(const PolynomialSeries &s, const Rational &at);

/// e^{a t}: coefficients a^j / j!.
RationalSeries exp_at(const Rational &a, std::size_t order);
/// e^{x t} with x the indeterminate: coefficients x^j / j!.
PolynomialSeries exp_at(Indeterminate, std::size_t order);

/// log(1 + t): coefficients (-1)^{j+1} / j for j >= 1.
RationalSeries log1p(std::size_t order);

/// (1 + t)^x: coefficients (x)_j / j! with (x)_j the falling factorial.
RationalSeries pow1p(const Rational &x, std::size_t order);
PolynomialSeries pow1p(Indeterminate, std::size_t order);

} // namespace polybern

#endif
