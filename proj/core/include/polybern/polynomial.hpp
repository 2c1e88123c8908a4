#ifndef POLYBERN_POLYNOMIAL_HPP
#define POLYBERN_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <polybern/rational.hpp>

namespace polybern
{

/// Univariate polynomial over Rational in the indeterminate x.
///
/// Coefficients are stored by ascending power with no trailing zeros, so the
/// zero polynomial has an empty coefficient list. Only the operations needed by
/// the series engine are provided; there is no polynomial division.
class Polynomial
{
public:
	Polynomial() = default;
	Polynomial(const Rational &constant);
	template <std::integral Int>
	explicit Polynomial(Int constant) : Polynomial(Rational(constant))
	{
	}
	explicit Polynomial(std::vector<Rational> coeffs);

	/// The polynomial x.
	static Polynomial x();
	/// c * x^power.
	static Polynomial monomial(const Rational &c, std::size_t power);

	const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
	bool is_zero() const noexcept { return coeffs_.empty(); }
	bool is_constant() const noexcept { return coeffs_.size() <= 1; }
	/// Degree; -1 for the zero polynomial.
	long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
	/// Coefficient of x^power (zero beyond the degree).
	Rational coeff(std::size_t power) const;
	Rational constant_term() const { return coeff(0); }

	Rational evaluate(const Rational &at) const;
	/// p(x + shift).
	Polynomial shifted(const Rational &shift) const;

	/// Human-readable form, highest power first, e.g. "x^2 - 1/6".
	std::string str() const;

	Polynomial operator-() const;
	Polynomial &operator+=(const Polynomial &other);
	Polynomial &operator-=(const Polynomial &other);
	Polynomial &operator*=(const Polynomial &other);
	Polynomial &operator*=(const Rational &scalar);
	/// Scalar division; throws std::domain_error on zero.
	Polynomial &operator/=(const Rational &scalar);

	friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
	friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
	friend Polynomial operator*(Polynomial a, const Rational &s) { return a *= s; }
	friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }
	friend Polynomial operator/(Polynomial a, const Rational &s) { return a /= s; }

	friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
	void trim();

	std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

} // namespace polybern

#endif
