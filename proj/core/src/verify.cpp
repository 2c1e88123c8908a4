#include <polybern/verify.hpp>

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <polybern/bernoulli.hpp>
#include <polybern/combinatorics.hpp>

namespace polybern
{

namespace
{

std::vector<Argument> arguments(const RangeSpec &range)
{
	std::vector<Argument> out(range.xs.begin(), range.xs.end());
	if (range.symbolic_x) {
		out.emplace_back(indeterminate_x);
	}
	return out;
}

void require_ks(const RangeSpec &range, std::string_view name)
{
	if (range.ks.empty()) {
		throw std::invalid_argument(std::string(name) + ": k list must be non-empty");
	}
}

void require_arguments(const RangeSpec &range, std::string_view name)
{
	if (range.xs.empty() && !range.symbolic_x) {
		throw std::invalid_argument(std::string(name) + ": at least one x point is required");
	}
}

CheckedPoint compare(PointParams params, const Value &lhs, const Value &rhs)
{
	return {std::move(params), to_string(lhs), to_string(rhs), lhs == rhs};
}

// Evaluates fn(k) for every k concurrently and concatenates the results.
template <typename Fn>
std::vector<CheckedPoint> fan_out_over_k(const std::vector<int> &ks, Fn fn)
{
	std::vector<std::future<std::vector<CheckedPoint>>> jobs;
	jobs.reserve(ks.size());
	for (int k : ks) {
		jobs.push_back(std::async(std::launch::async, fn, k));
	}
	std::vector<CheckedPoint> out;
	for (auto &job : jobs) {
		auto part = job.get();
		out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
	}
	return out;
}

std::vector<Value> gf_values(int n_max, int k, const Argument &x)
{
	std::vector<Value> out;
	for (auto &r : poly_b2nd_gf(n_max, k, x)) {
		out.push_back(std::move(r.value));
	}
	return out;
}

std::vector<CheckedPoint> check_thm1(const RangeSpec &range)
{
	require_arguments(range, "thm1");
	std::vector<CheckedPoint> out;
	for (const auto &x : arguments(range)) {
		const auto gf = gf_values(range.n_max, 2, x);
		for (int n = 0; n <= range.n_max; ++n) {
			out.push_back(compare({n, 2, x, {}, {}}, poly_b2nd_theorem1(n, x).value, gf[n]));
		}
	}
	return out;
}

std::vector<CheckedPoint> check_thm2(const RangeSpec &range)
{
	require_ks(range, "thm2");
	require_arguments(range, "thm2");
	const auto args = arguments(range);
	return fan_out_over_k(range.ks, [&](int k) {
		std::vector<CheckedPoint> out;
		for (const auto &x : args) {
			const auto gf = gf_values(range.n_max, k, x);
			for (int n = 0; n <= range.n_max; ++n) {
				out.push_back(compare({n, k, x, {}, {}}, poly_b2nd_theorem2(n, k, x).value, gf[n]));
			}
		}
		return out;
	});
}

std::vector<CheckedPoint> check_thm3(const RangeSpec &range)
{
	require_ks(range, "thm3");
	if (range.xs.empty()) {
		throw std::invalid_argument("thm3: at least one rational x point is required");
	}
	return fan_out_over_k(range.ks, [&](int k) {
		std::vector<CheckedPoint> out;
		for (const auto &x : range.xs) {
			const auto at_x = poly_b2nd_gf_values(range.n_max, k, x);
			const auto at_x1 = poly_b2nd_gf_values(range.n_max, k, x + Rational(1));
			for (int n = 1; n <= range.n_max; ++n) {
				out.push_back(compare({n, k, x, {}, {}}, at_x1[n] - at_x[n], theorem3_rhs(n, k, x)));
			}
		}
		return out;
	});
}

std::vector<Rational> grid_axis(const std::vector<Rational> &given, int count, int axis)
{
	if (static_cast<int>(given.size()) >= count) {
		return {given.begin(), given.begin() + count};
	}
	return default_grid(count, axis);
}

std::vector<CheckedPoint> check_thm4(const RangeSpec &range)
{
	require_ks(range, "thm4");
	return fan_out_over_k(range.ks, [&](int k) {
		std::vector<CheckedPoint> out;
		for (int n = 0; n <= range.n_max; ++n) {
			const auto xs = grid_axis(range.xs, n + 1, 0);
			const auto ys = grid_axis(range.ys, n + 1, 1);
			for (const auto &x : xs) {
				for (const auto &y : ys) {
					const Rational lhs = poly_b2nd_gf_values(n, k, x + y)[n];
					out.push_back(compare({n, k, x, y, {}}, lhs, theorem4_rhs(n, k, x, y)));
				}
			}
		}
		return out;
	});
}

std::vector<CheckedPoint> check_eq9(const RangeSpec &range)
{
	require_arguments(range, "eq9");
	std::vector<CheckedPoint> out;
	for (const auto &x : arguments(range)) {
		const auto gf = gf_values(range.n_max, 1, x);
		for (int n = 0; n <= range.n_max; ++n) {
			const Polynomial b = bernoulli2nd_poly(n);
			Value rhs = b;
			if (const auto *at = std::get_if<Rational>(&x)) {
				rhs = b.evaluate(*at);
			}
			out.push_back(compare({n, 1, x, {}, {}}, gf[n], rhs));
		}
	}
	return out;
}

std::vector<CheckedPoint> check_eq2(const RangeSpec &range)
{
	const auto gf = bernoulli2nd_polys_gf(range.n_max);
	std::vector<CheckedPoint> out;
	for (int n = 0; n <= range.n_max; ++n) {
		out.push_back(compare({n, {}, Argument{indeterminate_x}, {}, {}}, bernoulli2nd_poly(n), gf[n]));
	}
	return out;
}

std::vector<CheckedPoint> check_higher_order_bridge(const RangeSpec &range)
{
	std::vector<CheckedPoint> out;
	for (int n = 0; n <= range.n_max; ++n) {
		out.push_back(compare({n, {}, Argument{indeterminate_x}, {}, {}}, bernoulli2nd_poly(n),
		                      higher_order_bernoulli_poly(n, n).shifted(Rational(1))));
	}
	return out;
}

std::vector<CheckedPoint> check_stirling_inversion(const RangeSpec &range)
{
	std::vector<CheckedPoint> out;
	for (int n = 0; n <= range.n_max; ++n) {
		for (int m = 0; m <= n; ++m) {
			Rational sum;
			for (int l = m; l <= n; ++l) {
				sum += stirling2(n, l) * stirling1(l, m);
			}
			out.push_back(compare({n, {}, {}, {}, m}, sum, Rational(n == m ? 1 : 0)));
		}
	}
	return out;
}

// Rationals order before the indeterminate.
int compare_arguments(const Argument &a, const Argument &b)
{
	const auto *ra = std::get_if<Rational>(&a);
	const auto *rb = std::get_if<Rational>(&b);
	if (ra && rb) {
		return *ra < *rb ? -1 : (*rb < *ra ? 1 : 0);
	}
	return (ra ? 0 : 1) - (rb ? 0 : 1);
}

template <typename T>
int compare_optional(const std::optional<T> &a, const std::optional<T> &b)
{
	if (a.has_value() != b.has_value()) {
		return a.has_value() ? 1 : -1;
	}
	if (!a) {
		return 0;
	}
	return *a < *b ? -1 : (*b < *a ? 1 : 0);
}

} // namespace

std::vector<Rational> default_grid(int count, int axis)
{
	// x axis: -1, -1/2, 0, 1/2, ...; y axis: 1/3, 1, 5/3, ...
	std::vector<Rational> out;
	out.reserve(static_cast<std::size_t>(count));
	for (int i = 0; i < count; ++i) {
		out.push_back(axis == 0 ? Rational(i - 2, 2) : Rational(2 * i + 1, 3));
	}
	return out;
}

std::string RangeSpec::describe() const
{
	std::ostringstream os;
	os << "n<=" << n_max;
	if (!ks.empty()) {
		os << " k=";
		for (std::size_t i = 0; i < ks.size(); ++i) {
			os << (i ? "," : "") << ks[i];
		}
	}
	if (!xs.empty() || symbolic_x) {
		os << " x=";
		bool first = true;
		for (const auto &x : xs) {
			os << (first ? "" : ",") << x;
			first = false;
		}
		if (symbolic_x) {
			os << (first ? "" : ",") << "x";
		}
	}
	if (!ys.empty()) {
		os << " y=";
		for (std::size_t i = 0; i < ys.size(); ++i) {
			os << (i ? "," : "") << ys[i];
		}
	}
	return os.str();
}

std::string PointParams::str() const
{
	std::ostringstream os;
	os << "n=" << n;
	if (k) {
		os << " k=" << *k;
	}
	if (x) {
		os << " x=" << to_string(*x);
	}
	if (y) {
		os << " y=" << *y;
	}
	if (m) {
		os << " m=" << *m;
	}
	return os.str();
}

bool operator<(const PointParams &a, const PointParams &b)
{
	if (a.n != b.n) {
		return a.n < b.n;
	}
	if (int c = compare_optional(a.k, b.k)) {
		return c < 0;
	}
	if (a.x.has_value() != b.x.has_value()) {
		return !a.x.has_value();
	}
	if (a.x) {
		if (int c = compare_arguments(*a.x, *b.x)) {
			return c < 0;
		}
	}
	if (int c = compare_optional(a.y, b.y)) {
		return c < 0;
	}
	return compare_optional(a.m, b.m) < 0;
}

std::vector<CheckedPoint> VerificationReport::failures() const
{
	std::vector<CheckedPoint> out;
	std::copy_if(points.begin(), points.end(), std::back_inserter(out), [](const auto &p) { return !p.pass; });
	return out;
}

bool VerificationReport::passed() const
{
	return std::all_of(points.begin(), points.end(), [](const auto &p) { return p.pass; });
}

IdentityRegistry IdentityRegistry::builtin()
{
	IdentityRegistry r;
	r.add("thm1", check_thm1);
	r.add("thm2", check_thm2);
	r.add("thm3", check_thm3);
	r.add("thm4", check_thm4);
	r.add("eq9", check_eq9);
	r.add("eq2", check_eq2);
	r.add("b-equals-higher-order", check_higher_order_bridge);
	r.add("stirling-inversion", check_stirling_inversion);
	return r;
}

void IdentityRegistry::add(std::string name, IdentityCheck check)
{
	checks_.insert_or_assign(std::move(name), std::move(check));
}

bool IdentityRegistry::contains(std::string_view name) const
{
	return checks_.find(name) != checks_.end();
}

std::vector<std::string> IdentityRegistry::names() const
{
	std::vector<std::string> out;
	for (const auto &entry : checks_) {
		out.push_back(entry.first);
	}
	return out;
}

VerificationReport IdentityRegistry::run(std::string_view name, const RangeSpec &range) const
{
	const auto it = checks_.find(name);
	if (it == checks_.end()) {
		throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
	}
	if (range.n_max < 0) {
		throw std::invalid_argument("n_max must be non-negative");
	}
	VerificationReport report{std::string(name), range, it->second(range)};
	std::stable_sort(report.points.begin(), report.points.end(),
	                 [](const CheckedPoint &a, const CheckedPoint &b) { return a.params < b.params; });
	return report;
}

VerificationReport verify_identity(std::string_view name, const RangeSpec &range)
{
	static const IdentityRegistry registry = IdentityRegistry::builtin();
	return registry.run(name, range);
}

} // namespace polybern
