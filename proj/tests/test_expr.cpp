#include <doctest.h>

#include <random>
#include <string>

#include <polybern/cli/expr.hpp>
#include <polybern/polybernoulli.hpp>

using namespace polybern;
using namespace polybern::cli;

namespace
{

std::vector<Rational> coeffs(const std::string &text, std::size_t order)
{
	return eval_expr(parse_expr(text), order).coeffs();
}

} // namespace

TEST_CASE("parse_expr shapes")
{
	const auto ast = parse_expr("t / log1p(t)");
	CHECK(ast.kind == ExprAst::Kind::div);
	CHECK(ast.children[0].kind == ExprAst::Kind::var_t);
	CHECK(ast.children[1].kind == ExprAst::Kind::call);
	CHECK(ast.children[1].name == "log1p");

	const auto li = parse_expr("Li(2, 1 - exp(-t)) / log1p(t)");
	CHECK(li.str() == "(Li(2, (1 - exp((-t)))) / log1p(t))");
	CHECK(li.children[0].li_order == 2);

	CHECK(parse_expr("1 - 2 - 3").str() == "((1 - 2) - 3)");
	CHECK(parse_expr("8 / 4 / 2").str() == "1");
	CHECK(parse_expr("t / 4 / 2").str() == "((t / 4) / 2)");
	CHECK(coeffs("t/4/2", 1) == std::vector<Rational>{0, Rational(1, 8)});
	CHECK(parse_expr("2^3/4").str() == "((2^3) / 4)");
	CHECK(parse_expr("-t^2").str() == "(-(t^2))");
	CHECK(parse_expr("1 + 2*t^3").str() == "(1 + (2 * (t^3)))");
	CHECK(parse_expr("3/4").kind == ExprAst::Kind::constant);
	CHECK(parse_expr("3/4").value == Rational(3, 4));
	CHECK(parse_expr("Li(-3, t)").li_order == -3);
	CHECK(parse_expr("pow1p(-1/2)").value == Rational(-1, 2));
	CHECK(parse_expr("  ( t )  ").kind == ExprAst::Kind::var_t);
}

TEST_CASE("parse_expr errors carry columns")
{
	const auto column_of = [](const std::string &text) -> std::size_t {
		try {
			parse_expr(text);
		} catch (const ParseError &e) {
			return e.column();
		}
		return 0;
	};
	CHECK_THROWS_WITH_AS(parse_expr("Li(t, t)"), "column 4: Li order must be an integer literal", ParseError);
	CHECK_THROWS_WITH_AS(parse_expr("sin(t)"), "column 1: unknown function 'sin'", ParseError);
	CHECK_THROWS_WITH_AS(parse_expr("t^t"), "column 3: exponent must be a non-negative integer literal", ParseError);
	CHECK_THROWS_AS(parse_expr("t^-1"), ParseError);
	CHECK(column_of("t +") == 4);
	CHECK(column_of("(t") == 3);
	CHECK(column_of("t t") == 3);
	CHECK(column_of("exp t") == 5);
	CHECK(column_of("") == 1);
}

TEST_CASE("fuzz corpus of malformed inputs")
{
	const std::vector<std::string> corpus{
	    "(",     ")",         "t)",        "((t)",     "+",       "*t",       "t*",      "t//t",    "t^",
	    "t^x",   "Li(",       "Li(2)",     "Li(2 t)",  "Li(, t)", "Li(1.5,t)", "exp()",  "exp(t",   "log1p",
	    "foo(t)", "pow1p(t)", "pow1p()",   "1/",       "1/-",     "t $ t",   "t..t",     "2 3",     "exp(t)(t)", "Li(2,t",
	    "t^2^",  "--",        "pow1p(1/0)", "x",        "T",       "e^t",      "t,t",     "#",       "\t)",
	};
	for (const auto &text : corpus) {
		CAPTURE(text);
		try {
			parse_expr(text);
			FAIL("accepted malformed input");
		} catch (const ParseError &e) {
			CHECK(e.column() >= 1);
			CHECK(e.column() <= text.size() + 1);
		}
	}

	// Random byte strings over the expression alphabet: parse must either
	// succeed or throw ParseError with an in-range column.
	std::mt19937 rng(1234);
	const std::string alphabet = "t0123456789+-*/^(), Liexplog1pw";
	std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
	std::uniform_int_distribution<int> len(0, 14);
	for (int i = 0; i < 3000; ++i) {
		std::string s;
		for (int j = len(rng); j > 0; --j) {
			s += alphabet[pick(rng)];
		}
		try {
			parse_expr(s);
		} catch (const ParseError &e) {
			REQUIRE(e.column() >= 1);
			REQUIRE(e.column() <= s.size() + 1);
		}
	}
}

TEST_CASE("eval_expr")
{
	CHECK(coeffs("t/log1p(t)", 2) == std::vector<Rational>{1, Rational(1, 2), Rational(-1, 12)});
	CHECK(eval_expr(parse_expr("exp(t)*exp(-t)"), 6) == RationalSeries::one(6));
	CHECK(coeffs("Li(2, 1-exp(-t))/log1p(t)", 2) == std::vector<Rational>{1, Rational(1, 4), Rational(-13, 72)});
	CHECK(coeffs("log1p(exp(t)-1)", 4) == std::vector<Rational>{0, 1, 0, 0, 0});
	CHECK(coeffs("(1+t)^3", 4) == std::vector<Rational>{1, 3, 3, 1, 0});
	CHECK(coeffs("1/(1-t)", 3) == std::vector<Rational>{1, 1, 1, 1});
	CHECK(coeffs("t^5/t^5", 2) == std::vector<Rational>{1, 0, 0});
	CHECK(coeffs("t^3/t", 3) == std::vector<Rational>{0, 0, 1, 0});
	CHECK(coeffs("pow1p(1/2)", 2) == std::vector<Rational>{1, Rational(1, 2), Rational(-1, 8)});
	CHECK(coeffs("Li(1, 1-exp(-t))", 5) == std::vector<Rational>{0, 1, 0, 0, 0, 0});
	CHECK(coeffs("t", 0) == std::vector<Rational>{0});

	CHECK_THROWS_WITH_AS(eval_expr(parse_expr("1/(t-t)"), 2), "series quotient not a power series", EvalError);
	CHECK_THROWS_WITH_AS(eval_expr(parse_expr("1/t"), 2), "series quotient not a power series", EvalError);
	CHECK_THROWS_AS(eval_expr(parse_expr("exp(1+t)"), 2), EvalError);
	CHECK_THROWS_WITH_AS(eval_expr(parse_expr("1/0"), 2), "series quotient not a power series", EvalError);
	CHECK_THROWS_AS(eval_expr(parse_expr("Li(2, exp(t))"), 2), EvalError);
}

TEST_CASE("eval_expr matches the poly-Bernoulli generating function")
{
	for (int k = -3; k <= 4; ++k) {
		const std::string text = "Li(" + std::to_string(k) + ", 1-exp(-t))/log1p(t) * pow1p(3/2)";
		const auto s = eval_expr(parse_expr(text), 8);
		REQUIRE(egf_coefficients(s) == poly_b2nd_gf_values(8, k, Rational(3, 2)));
	}
}
