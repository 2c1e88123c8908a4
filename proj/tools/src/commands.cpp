#include <polybern/cli/commands.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <polybern/bernoulli.hpp>
#include <polybern/cli/expr.hpp>
#include <polybern/combinatorics.hpp>
#include <polybern/polybernoulli.hpp>

namespace polybern::cli
{

namespace
{

class UsageError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

std::string convention_name(Convention c)
{
	return c == Convention::egf ? "egf" : "ogf";
}

void fill_entries(SequenceTable &table, const std::vector<Rational> &values)
{
	for (std::size_t n = 0; n < values.size(); ++n) {
		table.entries.emplace_back(static_cast<int>(n), values[n]);
	}
}

std::vector<Rational> parse_rational_list(const std::string &text, bool &symbolic)
{
	std::vector<Rational> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		const auto first = item.find_first_not_of(' ');
		const auto last = item.find_last_not_of(' ');
		item = first == std::string::npos ? std::string{} : item.substr(first, last - first + 1);
		if (item == "x") {
			symbolic = true;
			continue;
		}
		out.push_back(Rational::parse(item));
	}
	return out;
}

struct VerifyOptions {
	std::string identity;
	int n_max = 10;
	std::string k = "-2..3";
	std::optional<std::string> x;
	std::string format = "text";
};

RangeSpec build_range(const VerifyOptions &opts)
{
	RangeSpec range;
	range.n_max = opts.n_max;
	if (range.n_max < 0) {
		throw UsageError("--n-max must be non-negative");
	}
	range.ks = parse_k_range(opts.k);

	const bool rational_only = opts.identity == "thm3" || opts.identity == "thm4";
	std::string x_text;
	if (opts.x) {
		x_text = *opts.x;
	} else if (opts.identity == "thm3") {
		x_text = "0,1/2,-2";
	} else if (opts.identity == "thm4") {
		x_text = "";
	} else {
		x_text = "0,1,-1,1/2,x";
	}
	try {
		range.xs = parse_rational_list(x_text, range.symbolic_x);
	} catch (const std::invalid_argument &e) {
		throw UsageError(std::string("--x: ") + e.what());
	}
	if (rational_only && range.symbolic_x) {
		throw UsageError("--x: the symbolic point 'x' is not supported by " + opts.identity);
	}
	if (opts.identity == "thm4" && !range.xs.empty()) {
		range.ys = range.xs;
	}
	const bool k_free = opts.identity == "thm1" || opts.identity == "eq9" || opts.identity == "eq2"
	                    || opts.identity == "b-equals-higher-order" || opts.identity == "stirling-inversion";
	if (k_free) {
		range.ks.clear();
	}
	if (opts.identity == "eq2" || opts.identity == "b-equals-higher-order" || opts.identity == "stirling-inversion") {
		range.xs.clear();
		range.symbolic_x = false;
	}
	return range;
}

void print_report_text(const VerificationReport &report, std::ostream &out)
{
	const auto failures = report.failures();
	if (!failures.empty()) {
		const auto &first = failures.front();
		out << "counterexample: " << first.params.str() << "\n  lhs = " << first.lhs << "\n  rhs = " << first.rhs
		    << '\n';
	}
	out << report.identity << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.total_points()
	    << " points, " << failures.size() << " failures; " << report.range.describe() << ")\n";
}

void print_report_json(const VerificationReport &report, std::ostream &out)
{
	nlohmann::json failures = nlohmann::json::array();
	for (const auto &f : report.failures()) {
		failures.push_back({{"params", f.params.str()}, {"lhs", f.lhs}, {"rhs", f.rhs}});
	}
	nlohmann::json doc = {
	    {"identity", report.identity},
	    {"range", report.range.describe()},
	    {"total", report.total_points()},
	    {"status", report.passed() ? "pass" : "fail"},
	    {"failures", std::move(failures)},
	};
	out << doc.dump(2) << '\n';
}

} // namespace

std::vector<int> parse_k_range(const std::string &text)
{
	const auto parse_int = [&](const std::string &s) {
		std::size_t used = 0;
		int v = 0;
		try {
			v = std::stoi(s, &used);
		} catch (const std::exception &) {
			throw UsageError("malformed k value '" + text + "'");
		}
		if (used != s.size()) {
			throw UsageError("malformed k value '" + text + "'");
		}
		return v;
	};
	const auto dots = text.find("..");
	if (dots == std::string::npos) {
		return {parse_int(text)};
	}
	const int lo = parse_int(text.substr(0, dots));
	const int hi = parse_int(text.substr(dots + 2));
	if (lo > hi) {
		throw UsageError("empty k range '" + text + "'");
	}
	std::vector<int> out;
	for (int k = lo; k <= hi; ++k) {
		out.push_back(k);
	}
	return out;
}

SequenceTable build_table(const TableRequest &req)
{
	if (req.n_max < 0) {
		throw UsageError("--n-max must be non-negative");
	}
	if (req.k && req.kind != "poly2nd") {
		throw UsageError("-k applies only to --kind poly2nd");
	}
	if (req.convention && req.kind != "bernoulli2nd") {
		throw UsageError("--convention applies only to --kind bernoulli2nd");
	}
	if (req.x && (req.kind == "bernoulli" || req.kind == "stirling1" || req.kind == "stirling2")) {
		throw UsageError("--x does not apply to --kind " + req.kind);
	}

	SequenceTable table;
	table.sequence = req.kind;
	const Rational x = req.x.value_or(Rational{});
	const int n_max = req.n_max;

	if (req.kind == "bernoulli") {
		fill_entries(table, bernoulli_numbers(n_max));
	} else if (req.kind == "bernoulli2nd") {
		const Convention conv = req.convention.value_or(Convention::egf);
		table.params = {{"convention", convention_name(conv)}, {"x", x.str()}};
		std::vector<Rational> values;
		for (int n = 0; n <= n_max; ++n) {
			Rational v = bernoulli2nd_poly(n).evaluate(x);
			if (conv == Convention::ogf) {
				v /= Rational::factorial(static_cast<unsigned>(n));
			}
			values.push_back(std::move(v));
		}
		fill_entries(table, values);
	} else if (req.kind == "poly2nd") {
		if (!req.k) {
			throw UsageError("--kind poly2nd requires -k");
		}
		table.params = {{"k", std::to_string(*req.k)}, {"x", x.str()}};
		fill_entries(table, poly_b2nd_gf_values(n_max, *req.k, x));
	} else if (req.kind == "stirling1" || req.kind == "stirling2") {
		const auto kind = req.kind == "stirling1" ? StirlingKind::first_signed : StirlingKind::second;
		table.params = {{"layout", "triangle-row-major"}};
		std::vector<Rational> values;
		for (int n = 0; n <= n_max; ++n) {
			const auto row = stirling_table(kind).row(n);
			values.insert(values.end(), row.begin(), row.end());
		}
		fill_entries(table, values);
	} else if (req.kind == "higher-order") {
		table.params = {{"alpha", "n"}, {"x", x.str()}};
		std::vector<Rational> values;
		for (int n = 0; n <= n_max; ++n) {
			values.push_back(higher_order_bernoulli(n, n, x));
		}
		fill_entries(table, values);
	} else {
		throw UsageError("unknown --kind '" + req.kind + "'");
	}
	return table;
}

std::string render_csv(const SequenceTable &table)
{
	std::ostringstream os;
	os << "n,value\n";
	for (const auto &[n, v] : table.entries) {
		os << n << ',' << v << '\n';
	}
	return os.str();
}

std::string render_json(const SequenceTable &table)
{
	nlohmann::ordered_json params = nlohmann::ordered_json::object();
	for (const auto &[key, value] : table.params) {
		params[key] = value;
	}
	nlohmann::ordered_json entries = nlohmann::ordered_json::array();
	for (const auto &[n, v] : table.entries) {
		entries.push_back({{"n", n}, {"value", v.str()}});
	}
	nlohmann::ordered_json doc;
	doc["sequence"] = table.sequence;
	doc["params"] = std::move(params);
	doc["entries"] = std::move(entries);
	return doc.dump() + "\n";
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const IdentityRegistry &registry)
{
	CLI::App app{"Exact poly-Bernoulli numbers of the second kind and related sequences", "polybern"};
	app.require_subcommand(1);

	TableRequest table_req;
	std::optional<int> table_k;
	std::optional<std::string> table_x;
	std::optional<std::string> table_convention;
	std::string table_format = "csv";
	auto *table = app.add_subcommand("table", "Print a sequence table");
	table->add_option("--kind", table_req.kind, "Sequence kind")
	    ->required()
	    ->check(CLI::IsMember({"bernoulli", "bernoulli2nd", "poly2nd", "stirling1", "stirling2", "higher-order"}));
	table->add_option("-n,--n-max", table_req.n_max, "Largest index")->capture_default_str();
	table->add_option("-k", table_k, "Polylogarithm order (poly2nd)");
	table->add_option("--x", table_x, "Evaluation point p/q");
	table->add_option("--convention", table_convention, "egf or ogf (bernoulli2nd)")
	    ->check(CLI::IsMember({"egf", "ogf"}));
	table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

	VerifyOptions verify_opts;
	auto *verify = app.add_subcommand("verify", "Check an identity exactly over a parameter range");
	verify->add_option("--identity", verify_opts.identity, "Identity name")->required();
	verify->add_option("--n-max", verify_opts.n_max, "Largest index")->capture_default_str();
	verify->add_option("--k", verify_opts.k, "k or a..b")->capture_default_str();
	verify->add_option("--x", verify_opts.x, "Comma list of rationals; 'x' selects the symbolic point");
	verify->add_option("--format", verify_opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));

	std::string expr_text;
	std::size_t eval_order = 10;
	bool eval_egf = false;
	auto *eval = app.add_subcommand("eval", "Expand a generating-function expression in t");
	eval->add_option("--expr", expr_text, "Expression")->required();
	eval->add_option("--order", eval_order, "Truncation order")->capture_default_str();
	eval->add_flag("--egf", eval_egf, "Also print n! * c_n");

	std::vector<std::string> argv_storage{"polybern"};
	argv_storage.insert(argv_storage.end(), args.begin(), args.end());
	std::vector<char *> argv;
	for (auto &a : argv_storage) {
		argv.push_back(a.data());
	}

	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return exit_ok;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << '\n' << app.help();
		return exit_usage;
	}

	if (table->parsed()) {
		try {
			table_req.k = table_k;
			if (table_x) {
				try {
					table_req.x = Rational::parse(*table_x);
				} catch (const std::invalid_argument &e) {
					throw UsageError(std::string("--x: ") + e.what());
				}
			}
			if (table_convention) {
				table_req.convention = *table_convention == "ogf" ? Convention::ogf : Convention::egf;
			}
			const auto result = build_table(table_req);
			out << (table_format == "json" ? render_json(result) : render_csv(result));
			return exit_ok;
		} catch (const UsageError &e) {
			err << "error: " << e.what() << '\n' << table->help();
			return exit_usage;
		}
	}

	if (verify->parsed()) {
		RangeSpec range;
		try {
			if (!registry.contains(verify_opts.identity)) {
				throw UsageError("unknown identity '" + verify_opts.identity + "'");
			}
			range = build_range(verify_opts);
		} catch (const UsageError &e) {
			err << "error: " << e.what() << '\n' << verify->help();
			return exit_usage;
		}
		VerificationReport report;
		try {
			report = registry.run(verify_opts.identity, range);
		} catch (const std::invalid_argument &e) {
			err << "error: " << e.what() << '\n';
			return exit_usage;
		}
		if (verify_opts.format == "json") {
			print_report_json(report, out);
		} else {
			print_report_text(report, out);
		}
		return report.passed() ? exit_ok : exit_failure;
	}

	try {
		const auto ast = parse_expr(expr_text);
		const auto series = eval_expr(ast, eval_order);
		out << "# raw coefficients c_n\n";
		for (std::size_t n = 0; n <= series.order(); ++n) {
			out << n << ": " << series[n] << '\n';
		}
		if (eval_egf) {
			out << "# egf coefficients n! * c_n\n";
			for (std::size_t n = 0; n <= series.order(); ++n) {
				out << n << ": " << egf_coefficient(series, n) << '\n';
			}
		}
		return exit_ok;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << '\n';
		return exit_failure;
	}
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	static const IdentityRegistry registry = IdentityRegistry::builtin();
	return run_cli(args, out, err, registry);
}

} // namespace polybern::cli
