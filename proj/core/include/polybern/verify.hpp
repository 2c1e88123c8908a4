#ifndef POLYBERN_VERIFY_HPP
#define POLYBERN_VERIFY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <polybern/polybernoulli.hpp>
#include <polybern/rational.hpp>

namespace polybern
{

/// Parameter ranges for an identity check.
///
/// `xs` and `symbolic_x` select evaluation points. For the two-variable
/// addition formula, `xs` and `ys` supply the grid coordinates; when fewer
/// than n + 1 are given, a default grid of distinct rationals is used.
struct RangeSpec {
	int n_max = 10;
	std::vector<int> ks;
	std::vector<Rational> xs;
	std::vector<Rational> ys;
	bool symbolic_x = false;

	std::string describe() const;
};

struct PointParams {
	int n = 0;
	std::optional<int> k;
	std::optional<Argument> x;
	std::optional<Rational> y;
	/// Column index for the Stirling inversion check.
	std::optional<int> m;

	std::string str() const;
};

/// Lexicographic (n, k, x, y, m); rational x sorts before the indeterminate.
bool operator<(const PointParams &a, const PointParams &b);

struct CheckedPoint {
	PointParams params;
	std::string lhs;
	std::string rhs;
	bool pass = false;
};

struct VerificationReport {
	std::string identity;
	RangeSpec range;
	std::vector<CheckedPoint> points;

	std::size_t total_points() const noexcept { return points.size(); }
	std::vector<CheckedPoint> failures() const;
	bool passed() const;
};

/// Produces every checked point for a range. Output order is not significant;
/// reports are sorted before being returned.
using IdentityCheck = std::function<std::vector<CheckedPoint>(const RangeSpec &)>;

class IdentityRegistry
{
public:
	/// Registry holding thm1, thm2, thm3, thm4, eq9, eq2,
	/// b-equals-higher-order and stirling-inversion.
	static IdentityRegistry builtin();

	void add(std::string name, IdentityCheck check);
	bool contains(std::string_view name) const;
	std::vector<std::string> names() const;

	/// Throws std::invalid_argument for an unknown name or a malformed range.
	VerificationReport run(std::string_view name, const RangeSpec &range) const;

private:
	std::map<std::string, IdentityCheck, std::less<>> checks_;
};

/// Runs a built-in identity over a range.
VerificationReport verify_identity(std::string_view name, const RangeSpec &range);

/// n + 1 distinct rationals used as default grid coordinates.
std::vector<Rational> default_grid(int count, int axis);

} // namespace polybern

#endif
