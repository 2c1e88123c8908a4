#ifndef POLYBERN_COMBINATORICS_HPP
#define POLYBERN_COMBINATORICS_HPP

#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

#include <polybern/polynomial.hpp>
#include <polybern/rational.hpp>

namespace polybern
{

/// C(n, k); zero when k < 0 or k > n. Throws std::invalid_argument for n < 0.
Rational binomial(int n, int k);

/// (x)_n = x (x - 1) ... (x - n + 1) as a polynomial; (x)_0 = 1.
Polynomial falling_factorial_poly(int n);

/// Exact value of (x)_n at a rational point.
Rational falling_factorial_at(const Rational &x, int n);

enum class StirlingKind { first_signed, second };

/// Memoized Stirling triangle, rows 0..n grown on demand.
///
/// Rows are immutable once computed and growth is monotone. Readers take a
/// shared lock, the single writer extending the table takes an exclusive one.
class StirlingTriangle
{
public:
	explicit StirlingTriangle(StirlingKind kind);

	StirlingKind kind() const noexcept { return kind_; }

	/// Entry (n, l); zero outside 0 <= l <= n. Throws for n < 0.
	Rational at(int n, int l) const;

	/// Row n, entries for l = 0..n.
	std::vector<Rational> row(int n) const;

private:
	void ensure_rows(int n) const;

	StirlingKind kind_;
	mutable std::shared_mutex mutex_;
	mutable std::vector<std::vector<Rational>> rows_;
};

/// Process-wide memo tables shared by the free functions below.
const StirlingTriangle &stirling_table(StirlingKind kind);

/// S_2(n, l): l * S_2(n-1, l) + S_2(n-1, l-1), S_2(0, 0) = 1.
Rational stirling2(int n, int l);

/// Signed S_1(n, l): S_1(n-1, l-1) - (n-1) S_1(n-1, l), the coefficient of
/// x^l in (x)_n.
Rational stirling1(int n, int l);

/// Coefficients d_l with p(x) = sum_l d_l (x)_l. Length is degree + 1.
std::vector<Rational> to_falling_basis(const Polynomial &p);

/// Expands sum_l d_l (x)_l into monomial coefficients.
Polynomial to_monomial_basis(std::span<const Rational> d);

} // namespace polybern

#endif
