#include <polybern/series.hpp>

namespace polybern
{

PolynomialSeries lift(const RationalSeries &s)
{
	std::vector<Polynomial> coeffs;
	coeffs.reserve(s.order() + 1);
	for (const auto &c : s.coeffs()) {
		coeffs.emplace_back(c);
	}
	return PolynomialSeries::from_coeffs(std::move(coeffs), s.order());
}

RationalSeries evaluate_at(const PolynomialSeries &s, const Rational &at)
{
	std::vector<Rational> coeffs;
	coeffs.reserve(s.order() + 1);
	for (const auto &p : s.coeffs()) {
		coeffs.push_back(p.evaluate(at));
	}
	return RationalSeries::from_coeffs(std::move(coeffs), s.order());
}

RationalSeries exp_at(const Rational &a, std::size_t order)
{
	std::vector<Rational> coeffs(order + 1);
	coeffs[0] = Rational(1);
	for (std::size_t j = 1; j <= order; ++j) {
		coeffs[j] = coeffs[j - 1] * a / Rational(j);
	}
	return RationalSeries::from_coeffs(std::move(coeffs), order);
}

PolynomialSeries exp_at(Indeterminate, std::size_t order)
{
	std::vector<Polynomial> coeffs;
	coeffs.reserve(order + 1);
	Rational inv_fact(1);
	for (std::size_t j = 0; j <= order; ++j) {
		if (j > 0) {
			inv_fact /= Rational(j);
		}
		coeffs.push_back(Polynomial::monomial(inv_fact, j));
	}
	return PolynomialSeries::from_coeffs(std::move(coeffs), order);
}

RationalSeries log1p(std::size_t order)
{
	std::vector<Rational> coeffs(order + 1);
	for (std::size_t j = 1; j <= order; ++j) {
		coeffs[j] = Rational(j % 2 == 1 ? 1 : -1, static_cast<long>(j));
	}
	return RationalSeries::from_coeffs(std::move(coeffs), order);
}

RationalSeries pow1p(const Rational &x, std::size_t order)
{
	// c_j = c_{j-1} * (x - j + 1) / j
	std::vector<Rational> coeffs(order + 1);
	coeffs[0] = Rational(1);
	for (std::size_t j = 1; j <= order; ++j) {
		coeffs[j] = coeffs[j - 1] * (x - Rational(j - 1)) / Rational(j);
	}
	return RationalSeries::from_coeffs(std::move(coeffs), order);
}

PolynomialSeries pow1p(Indeterminate, std::size_t order)
{
	std::vector<Polynomial> coeffs;
	coeffs.reserve(order + 1);
	coeffs.emplace_back(1);
	for (std::size_t j = 1; j <= order; ++j) {
		Polynomial next = coeffs.back() * (Polynomial::x() - Polynomial(Rational(j - 1)));
		next /= Rational(j);
		coeffs.push_back(std::move(next));
	}
	return PolynomialSeries::from_coeffs(std::move(coeffs), order);
}

} // namespace polybern
