#include <polybern/combinatorics.hpp>

#include <mutex>
#include <stdexcept>
#include <string>

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

} // namespace

Rational binomial(int n, int k)
{
	require_nonnegative(n, "binomial");
	if (k < 0 || k > n) {
		return Rational{};
	}
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return Rational(r);
}

Polynomial falling_factorial_poly(int n)
{
	require_nonnegative(n, "falling_factorial_poly");
	Polynomial p(1);
	for (int j = 0; j < n; ++j) {
		p *= Polynomial::x() - Polynomial(Rational(j));
	}
	return p;
}

Rational falling_factorial_at(const Rational &x, int n)
{
	require_nonnegative(n, "falling_factorial_at");
	Rational r(1);
	for (int j = 0; j < n; ++j) {
		r *= x - Rational(j);
	}
	return r;
}

StirlingTriangle::StirlingTriangle(StirlingKind kind) : kind_(kind) {}

void StirlingTriangle::ensure_rows(int n) const
{
	{
		std::shared_lock lock(mutex_);
		if (static_cast<int>(rows_.size()) > n) {
			return;
		}
	}
	std::unique_lock lock(mutex_);
	if (rows_.empty()) {
		rows_.push_back({Rational(1)});
	}
	while (static_cast<int>(rows_.size()) <= n) {
		const int m = static_cast<int>(rows_.size());
		const auto &prev = rows_.back();
		std::vector<Rational> row(m + 1);
		for (int l = 1; l <= m; ++l) {
			const Rational up_left = prev[l - 1];
			const Rational up = l < m ? prev[l] : Rational{};
			if (kind_ == StirlingKind::second) {
				row[l] = Rational(l) * up + up_left;
			} else {
				row[l] = up_left - Rational(m - 1) * up;
			}
		}
		rows_.push_back(std::move(row));
	}
}

Rational StirlingTriangle::at(int n, int l) const
{
	require_nonnegative(n, "stirling");
	if (l < 0 || l > n) {
		return Rational{};
	}
	ensure_rows(n);
	std::shared_lock lock(mutex_);
	return rows_[n][l];
}

std::vector<Rational> StirlingTriangle::row(int n) const
{
	require_nonnegative(n, "stirling");
	ensure_rows(n);
	std::shared_lock lock(mutex_);
	return rows_[n];
}

const StirlingTriangle &stirling_table(StirlingKind kind)
{
	static const StirlingTriangle first(StirlingKind::first_signed);
	static const StirlingTriangle second(StirlingKind::second);
	return kind == StirlingKind::second ? second : first;
}

Rational stirling2(int n, int l)
{
	return stirling_table(StirlingKind::second).at(n, l);
}

Rational stirling1(int n, int l)
{
	return stirling_table(StirlingKind::first_signed).at(n, l);
}

std::vector<Rational> to_falling_basis(const Polynomial &p)
{
	const auto &a = p.coeffs();
	std::vector<Rational> d(a.size());
	for (std::size_t n = 0; n < a.size(); ++n) {
		if (a[n].is_zero()) {
			continue;
		}
		const auto row = stirling_table(StirlingKind::second).row(static_cast<int>(n));
		for (std::size_t l = 0; l <= n; ++l) {
			d[l] += a[n] * row[l];
		}
	}
	return d;
}

Polynomial to_monomial_basis(std::span<const Rational> d)
{
	std::vector<Rational> a(d.size());
	for (std::size_t l = 0; l < d.size(); ++l) {
		if (d[l].is_zero()) {
			continue;
		}
		const auto row = stirling_table(StirlingKind::first_signed).row(static_cast<int>(l));
		for (std::size_t m = 0; m <= l; ++m) {
			a[m] += d[l] * row[m];
		}
	}
	return Polynomial(std::move(a));
}

} // namespace polybern
