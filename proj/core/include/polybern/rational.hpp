#ifndef POLYBERN_RATIONAL_HPP
#define POLYBERN_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polybern
{

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are always kept in canonical form: the denominator is positive,
/// numerator and denominator are coprime, and zero is stored as 0/1.
class Rational
{
public:
	Rational() = default;

	template <std::integral Int>
	Rational(Int value) : value_(static_cast<long>(value))
	{
	}

	/// Throws std::domain_error when `den` is zero.
	Rational(long num, long den);

	explicit Rational(mpq_class value);
	explicit Rational(const mpz_class &value);

	/// Parses "p", "-p" or "p/q" (q > 0, optional leading sign on p).
	/// Throws std::invalid_argument on malformed input.
	static Rational parse(std::string_view text);

	static Rational factorial(unsigned n);

	const mpq_class &value() const noexcept { return value_; }
	mpz_class numerator() const { return value_.get_num(); }
	mpz_class denominator() const { return value_.get_den(); }

	bool is_zero() const noexcept { return sgn(value_) == 0; }
	bool is_one() const noexcept { return value_ == 1; }
	bool is_integer() const noexcept { return value_.get_den() == 1; }
	int sign() const noexcept { return sgn(value_); }

	/// True when the stored representation is canonical (den > 0, gcd = 1).
	bool is_canonical() const;

	/// Integer power; negative exponents require a nonzero base.
	Rational pow(long exponent) const;

	/// "p/q", or "p" when the denominator is 1.
	std::string str() const;

	Rational operator-() const;

	Rational &operator+=(const Rational &other);
	Rational &operator-=(const Rational &other);
	Rational &operator*=(const Rational &other);
	/// Throws std::domain_error on division by zero.
	Rational &operator/=(const Rational &other);

	friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
	friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
	friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
	friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		const int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

private:
	mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace polybern

#endif
