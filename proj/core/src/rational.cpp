#include <polybern/rational.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace polybern
{

namespace
{

bool all_digits(std::string_view s)
{
	if (s.empty()) {
		return false;
	}
	for (char c : s) {
		if (!std::isdigit(static_cast<unsigned char>(c))) {
			return false;
		}
	}
	return true;
}

} // namespace

Rational::Rational(long num, long den)
{
	if (den == 0) {
		throw std::domain_error("rational with zero denominator");
	}
	value_ = mpq_class(num, 1);
	value_ /= den;
	value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
	if (value_.get_den() == 0) {
		throw std::domain_error("rational with zero denominator");
	}
	value_.canonicalize();
}

Rational::Rational(const mpz_class &value) : value_(value) {}

Rational Rational::parse(std::string_view text)
{
	std::string_view body = text;
	bool negative = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	const auto slash = body.find('/');
	const std::string_view num = body.substr(0, slash);
	const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den)) {
		throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
	}
	mpz_class n(std::string(num), 10);
	mpz_class d(std::string(den), 10);
	if (d == 0) {
		throw std::invalid_argument("zero denominator in rational literal '" + std::string(text) + "'");
	}
	if (negative) {
		n = -n;
	}
	mpq_class q(n, d);
	q.canonicalize();
	return Rational(std::move(q));
}

Rational Rational::factorial(unsigned n)
{
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(f);
}

bool Rational::is_canonical() const
{
	if (value_.get_den() <= 0) {
		return false;
	}
	mpz_class g;
	mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
	return g == 1 && (value_.get_num() != 0 || value_.get_den() == 1);
}

Rational Rational::pow(long exponent) const
{
	if (exponent < 0) {
		if (is_zero()) {
			throw std::domain_error("zero raised to a negative power");
		}
		return Rational(1) / pow(-exponent);
	}
	mpz_class n, d;
	const auto e = static_cast<unsigned long>(exponent);
	mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
	mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
	return Rational(mpq_class(n, d));
}

std::string Rational::str() const
{
	return value_.get_str(10);
}

Rational Rational::operator-() const
{
	return Rational(mpq_class(-value_));
}

Rational &Rational::operator+=(const Rational &other)
{
	value_ += other.value_;
	return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
	value_ -= other.value_;
	return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
	value_ *= other.value_;
	return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
	if (other.is_zero()) {
		throw std::domain_error("division by zero");
	}
	value_ /= other.value_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.str();
}

} // namespace polybern
