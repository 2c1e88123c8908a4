#include <polybern/polynomial.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polybern
{

Polynomial::Polynomial(const Rational &constant)
{
	if (!constant.is_zero()) {
		coeffs_.push_back(constant);
	}
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
	trim();
}

Polynomial Polynomial::x()
{
	return monomial(Rational(1), 1);
}

Polynomial Polynomial::monomial(const Rational &c, std::size_t power)
{
	if (c.is_zero()) {
		return {};
	}
	std::vector<Rational> coeffs(power + 1);
	coeffs[power] = c;
	return Polynomial(std::move(coeffs));
}

void Polynomial::trim()
{
	while (!coeffs_.empty() && coeffs_.back().is_zero()) {
		coeffs_.pop_back();
	}
}

Rational Polynomial::coeff(std::size_t power) const
{
	return power < coeffs_.size() ? coeffs_[power] : Rational{};
}

Rational Polynomial::evaluate(const Rational &at) const
{
	Rational acc;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
		acc *= at;
		acc += *it;
	}
	return acc;
}

Polynomial Polynomial::shifted(const Rational &shift) const
{
	// Horner in the polynomial ring with x -> x + shift.
	const Polynomial arg = x() + Polynomial(shift);
	Polynomial acc;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
		acc = acc * arg;
		acc += Polynomial(*it);
	}
	return acc;
}

std::string Polynomial::str() const
{
	if (coeffs_.empty()) {
		return "0";
	}
	std::ostringstream os;
	bool first = true;
	for (std::size_t i = coeffs_.size(); i-- > 0;) {
		const Rational &c = coeffs_[i];
		if (c.is_zero()) {
			continue;
		}
		const Rational mag = c.sign() < 0 ? -c : c;
		if (first) {
			if (c.sign() < 0) {
				os << '-';
			}
		} else {
			os << (c.sign() < 0 ? " - " : " + ");
		}
		first = false;
		if (i == 0 || !mag.is_one()) {
			os << mag;
			if (i > 0) {
				os << '*';
			}
		}
		if (i >= 1) {
			os << 'x';
		}
		if (i >= 2) {
			os << '^' << i;
		}
	}
	return os.str();
}

Polynomial Polynomial::operator-() const
{
	Polynomial r = *this;
	for (auto &c : r.coeffs_) {
		c = -c;
	}
	return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
	if (other.coeffs_.size() > coeffs_.size()) {
		coeffs_.resize(other.coeffs_.size());
	}
	for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
		coeffs_[i] += other.coeffs_[i];
	}
	trim();
	return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
	if (other.coeffs_.size() > coeffs_.size()) {
		coeffs_.resize(other.coeffs_.size());
	}
	for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
		coeffs_[i] -= other.coeffs_[i];
	}
	trim();
	return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
	if (a.is_zero() || b.is_zero()) {
		return {};
	}
	std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
		if (a.coeffs_[i].is_zero()) {
			continue;
		}
		for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
			out[i + j] += a.coeffs_[i] * b.coeffs_[j];
		}
	}
	return Polynomial(std::move(out));
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
	*this = *this * other;
	return *this;
}

Polynomial &Polynomial::operator*=(const Rational &scalar)
{
	if (scalar.is_zero()) {
		coeffs_.clear();
		return *this;
	}
	for (auto &c : coeffs_) {
		c *= scalar;
	}
	return *this;
}

Polynomial &Polynomial::operator/=(const Rational &scalar)
{
	if (scalar.is_zero()) {
		throw std::domain_error("polynomial divided by zero");
	}
	for (auto &c : coeffs_) {
		c /= scalar;
	}
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p)
{
	return os << p.str();
}

} // namespace polybern
