// Acceptance suite: one line per criterion, exact comparisons only, each with
// a wall-clock budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <polybern/bernoulli.hpp>
#include <polybern/cli/commands.hpp>
#include <polybern/combinatorics.hpp>
#include <polybern/polybernoulli.hpp>
#include <polybern/series.hpp>
#include <polybern/verify.hpp>

#include "oracles.hpp"

using namespace polybern;

namespace
{

class Checker
{
public:
	void expect(bool ok, const std::string &what)
	{
		++checks_;
		if (!ok && first_failure_.empty()) {
			first_failure_ = what;
		}
		ok_ = ok_ && ok;
	}

	bool ok() const { return ok_; }
	long checks() const { return checks_; }
	const std::string &first_failure() const { return first_failure_; }

private:
	bool ok_ = true;
	long checks_ = 0;
	std::string first_failure_;
};

struct Criterion {
	int id;
	std::string name;
	double budget_seconds;
	std::function<void(Checker &)> body;
};

const std::vector<Rational> x_points{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};

struct CliRun {
	int code;
	std::string out;
};

CliRun cli(const std::vector<std::string> &args, const IdentityRegistry &registry = IdentityRegistry::builtin())
{
	std::ostringstream out, err;
	const int code = cli::run_cli(args, out, err, registry);
	return {code, out.str()};
}

std::vector<Rational> csv_values(const std::string &csv)
{
	std::istringstream in(csv);
	std::string line;
	std::getline(in, line);
	std::vector<Rational> values;
	while (std::getline(in, line)) {
		values.push_back(Rational::parse(line.substr(line.find(',') + 1)));
	}
	return values;
}

void small_values(Checker &c)
{
	const std::vector<Rational> listed{1, Rational(1, 2), Rational(-1, 12), Rational(1, 24), Rational(-19, 720),
	                                   Rational(3, 160)};
	const auto ogf = csv_values(cli({"table", "--kind", "bernoulli2nd", "-n", "5", "--convention", "ogf"}).out);
	const auto egf = csv_values(cli({"table", "--kind", "bernoulli2nd", "-n", "5", "--convention", "egf"}).out);
	c.expect(ogf.size() == 6 && egf.size() == 6, "table length");
	if (ogf.size() != 6 || egf.size() != 6) {
		return;
	}
	c.expect(egf[0] == Rational(1) && egf[1] == Rational(1, 2), "egf b_0, b_1");
	for (unsigned n = 0; n <= 5; ++n) {
		c.expect(ogf[n] == listed[n], "ogf b_" + std::to_string(n));
		c.expect(egf[n] == Rational::factorial(n) * listed[n], "egf b_" + std::to_string(n));
	}
}

void theorem1_vs_gf(Checker &c)
{
	for (const auto &x : x_points) {
		const auto gf = poly_b2nd_gf_values(25, 2, x);
		for (int n = 0; n <= 25; ++n) {
			c.expect(std::get<Rational>(poly_b2nd_theorem1(n, x).value) == gf[n],
			         "n=" + std::to_string(n) + " x=" + x.str());
		}
	}
	const auto sym = poly_b2nd_gf_polys(15, 2);
	for (int n = 0; n <= 15; ++n) {
		c.expect(std::get<Polynomial>(poly_b2nd_theorem1(n, indeterminate_x).value) == sym[n],
		         "symbolic n=" + std::to_string(n));
	}
}

void theorem2_vs_gf(Checker &c)
{
	RangeSpec range;
	range.n_max = 25;
	range.ks = {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5};
	range.xs = x_points;
	const auto report = verify_identity("thm2", range);
	c.expect(report.passed() && report.total_points() == 26 * 11 * 4, "numeric route agreement");

	RangeSpec symbolic = range;
	symbolic.n_max = 15;
	symbolic.xs.clear();
	symbolic.symbolic_x = true;
	const auto sym_report = verify_identity("thm2", symbolic);
	c.expect(sym_report.passed() && sym_report.total_points() == 16 * 11, "symbolic route agreement");

	for (int n = 0; n <= 25; ++n) {
		c.expect(poly_b2nd_theorem1(n, indeterminate_x).value == poly_b2nd_theorem2(n, 2, indeterminate_x).value,
		         "theorem1 == theorem2 at n=" + std::to_string(n));
	}
}

void theorem3(Checker &c)
{
	RangeSpec range;
	range.n_max = 20;
	range.ks = {-3, -2, -1, 0, 1, 2, 3};
	range.xs = {Rational(0), Rational(1, 2), Rational(-2)};
	const auto report = verify_identity("thm3", range);
	c.expect(report.passed() && report.total_points() == 20 * 7 * 3, "forward difference");
}

void theorem4(Checker &c)
{
	RangeSpec range;
	range.n_max = 10;
	range.ks = {-2, -1, 0, 1, 2, 3};
	const auto report = verify_identity("thm4", range);
	std::size_t expected = 0;
	for (int n = 0; n <= 10; ++n) {
		expected += static_cast<std::size_t>((n + 1) * (n + 1)) * 6;
	}
	c.expect(report.passed() && report.total_points() == expected, "addition formula on the grid");
}

void k1_reduction(Checker &c)
{
	const auto gf = poly_b2nd_gf_polys(20, 1);
	for (int n = 0; n <= 20; ++n) {
		c.expect(gf[n] == bernoulli2nd_poly(n), "n=" + std::to_string(n));
	}
}

void higher_order_bridge(Checker &c)
{
	for (int n = 0; n <= 20; ++n) {
		c.expect(bernoulli2nd_poly(n) == higher_order_bernoulli_poly(n, n).shifted(Rational(1)),
		         "n=" + std::to_string(n));
	}
}

void stirling_structure(Checker &c)
{
	for (int n = 0; n <= 30; ++n) {
		for (int m = 0; m <= n; ++m) {
			Rational sum;
			for (int l = m; l <= n; ++l) {
				sum += stirling2(n, l) * stirling1(l, m);
			}
			c.expect(sum == Rational(n == m ? 1 : 0), "inversion n=" + std::to_string(n));
		}
	}
	for (int n = 0; n <= 8; ++n) {
		for (int l = 0; l <= n; ++l) {
			c.expect(stirling2(n, l) == Rational(oracle::count_set_partitions(n, l)), "partition count");
		}
	}
	oracle::RationalGen gen(8);
	for (int degree = 0; degree <= 12; ++degree) {
		const Polynomial p = gen.polynomial(static_cast<std::size_t>(degree));
		c.expect(to_monomial_basis(to_falling_basis(p)) == p, "monomial round trip");
		const auto d = gen.coeffs(static_cast<std::size_t>(degree) + 1);
		c.expect(Polynomial(to_falling_basis(to_monomial_basis(d))) == Polynomial(d), "falling round trip");
		c.expect(falling_factorial_poly(degree).coeffs() == oracle::falling_factorial_coeffs(degree),
		         "falling factorial expansion");
	}
}

void series_soundness(Checker &c)
{
	oracle::RationalGen gen(20);
	for (std::size_t order = 0; order <= 20; ++order) {
		const auto n = RationalSeries::from_coeffs(gen.coeffs(order + 1), order);
		auto dc = gen.coeffs(order + 1);
		dc[0] = gen.next_nonzero();
		const auto d = RationalSeries::from_coeffs(dc, order);
		c.expect(series_mul(series_div_unit(n, d), d) == n, "div/mul round trip");
		c.expect(series_mul(n, d).coeffs() == oracle::mul(n.coeffs(), d.coeffs()), "product vs oracle");

		const auto expm1 = exp_at(Rational(1), order) - RationalSeries::one(order);
		c.expect(series_compose(log1p(order), expm1) == RationalSeries::identity(order), "log1p(expm1)");
		c.expect(series_compose(expm1, log1p(order)) == RationalSeries::identity(order), "expm1(log1p)");

		if (order <= 15) {
			const Rational a = gen.next(), b = gen.next();
			c.expect(pow1p(a, order) * pow1p(b, order) == pow1p(a + b, order), "pow1p product law");
		}
	}
}

void cli_end_to_end(Checker &c)
{
	auto r = cli({"table", "--kind", "poly2nd", "-k", "2", "-n", "2"});
	c.expect(r.code == 0 && r.out == "n,value\n0,1\n1,1/4\n2,-13/36\n", "table poly2nd");
	r = cli({"table", "--kind", "bernoulli", "-n", "2"});
	c.expect(r.code == 0 && r.out == "n,value\n0,1\n1,-1/2\n2,1/6\n", "table bernoulli");
	r = cli({"table", "--kind", "bernoulli2nd", "-n", "1"});
	c.expect(r.code == 0 && r.out == "n,value\n0,1\n1,1/2\n", "table bernoulli2nd");

	r = cli({"verify", "--identity", "thm2", "--n-max", "15", "--k", "-3..3"});
	c.expect(r.code == 0, "verify thm2 exit 0");

	// Fixture: the addition formula with (y)_l replaced by y^l.
	IdentityRegistry registry = IdentityRegistry::builtin();
	registry.add("thm4-rising-power", [](const RangeSpec &range) {
		std::vector<CheckedPoint> out;
		const Rational x(1, 3), y(2);
		for (int n = 0; n <= range.n_max; ++n) {
			const auto base = poly_b2nd_gf_values(n, 2, x);
			Rational wrong;
			for (int l = 0; l <= n; ++l) {
				wrong += binomial(n, l) * base[n - l] * y.pow(l);
			}
			const Rational lhs = poly_b2nd_gf_values(n, 2, x + y)[n];
			out.push_back({{n, 2, Argument{x}, y, {}}, lhs.str(), wrong.str(), lhs == wrong});
		}
		return out;
	});
	r = cli({"verify", "--identity", "thm4-rising-power", "--n-max", "5"}, registry);
	c.expect(r.code == 1 && r.out.find("counterexample: n=2") != std::string::npos, "forced failure exit 1");

	r = cli({"table", "--kind", "bernoulli", "-k", "2"});
	c.expect(r.code == 2, "usage error exit 2");
}

} // namespace

int main()
{
	const std::vector<Criterion> criteria{
	    {1, "small-value agreement (ogf list, egf = n! * ogf)", 1.0, small_values},
	    {2, "k=2 closed form == generating function, n<=25, symbolic n<=15", 10.0, theorem1_vs_gf},
	    {3, "general closed form == generating function, n<=25, k in -5..5", 60.0, theorem2_vs_gf},
	    {4, "forward difference, 1<=n<=20, k in -3..3", 30.0, theorem3},
	    {5, "addition formula on (n+1)x(n+1) grids, n<=10, k in -2..3", 30.0, theorem4},
	    {6, "k=1 reduction to b_n(x), n<=20 symbolic", 5.0, k1_reduction},
	    {7, "b_n(x) == B_n^(n)(x+1), n<=20", 10.0, higher_order_bridge},
	    {8, "Stirling inversion, partition counts, basis round trips", 5.0, stirling_structure},
	    {9, "series engine soundness at order <= 20", 5.0, series_soundness},
	    {10, "CLI end-to-end exit codes 0/1/2", 5.0, cli_end_to_end},
	};

	int failed = 0;
	for (const auto &criterion : criteria) {
		Checker checker;
		const auto start = std::chrono::steady_clock::now();
		std::string error;
		try {
			criterion.body(checker);
		} catch (const std::exception &e) {
			error = e.what();
		}
		const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		const bool in_budget = elapsed < criterion.budget_seconds;
		const bool pass = error.empty() && checker.ok() && in_budget;
		failed += pass ? 0 : 1;

		char timing[64];
		std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", elapsed, criterion.budget_seconds);
		std::cout << (pass ? "[PASS] " : "[FAIL] ") << "AC" << criterion.id << ' ' << criterion.name << " ("
		          << checker.checks() << " checks, " << timing << ')';
		if (!error.empty()) {
			std::cout << " exception: " << error;
		} else if (!checker.ok()) {
			std::cout << " first failure: " << checker.first_failure();
		} else if (!in_budget) {
			std::cout << " over budget";
		}
		std::cout << '\n';
	}
	std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
	          << '\n';
	return failed == 0 ? 0 : 1;
}
