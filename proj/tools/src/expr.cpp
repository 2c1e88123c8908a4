#include <polybern/cli/expr.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include <polybern/polybernoulli.hpp>

namespace polybern::cli
{

ParseError::ParseError(std::size_t column, const std::string &message)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column)
{
}

namespace
{

class Parser
{
public:
	explicit Parser(std::string_view text) : text_(text) {}

	ExprAst parse()
	{
		ExprAst e = expr();
		skip_space();
		if (!at_end()) {
			fail(std::string("unexpected '") + peek() + "'");
		}
		return e;
	}

private:
	[[noreturn]] void fail(const std::string &message) const { throw ParseError(pos_ + 1, message); }
	[[noreturn]] void fail_at(std::size_t pos, const std::string &message) const
	{
		throw ParseError(pos + 1, message);
	}

	bool at_end() const { return pos_ >= text_.size(); }
	char peek() const { return at_end() ? '\0' : text_[pos_]; }

	void skip_space()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
			++pos_;
		}
	}

	bool accept(char c)
	{
		skip_space();
		if (peek() == c) {
			++pos_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!accept(c)) {
			if (at_end()) {
				fail(std::string("expected '") + c + "' but reached end of input");
			}
			fail(std::string("expected '") + c + "' but found '" + peek() + "'");
		}
	}

	bool digit_next()
	{
		skip_space();
		return std::isdigit(static_cast<unsigned char>(peek())) != 0;
	}

	std::string digits()
	{
		skip_space();
		const std::size_t start = pos_;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
			++pos_;
		}
		return std::string(text_.substr(start, pos_ - start));
	}

	// int-literal ('/' posint-literal)?; the slash is only consumed when digits follow.
	Rational rational_literal()
	{
		const std::string num = digits();
		const std::size_t save = pos_;
		skip_space();
		if (peek() == '/') {
			++pos_;
			if (digit_next()) {
				const std::size_t den_pos = pos_;
				const std::string den = digits();
				if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
					fail_at(den_pos, "denominator of a rational literal must be positive");
				}
				return Rational::parse(num + "/" + den);
			}
		}
		pos_ = save;
		return Rational::parse(num);
	}

	std::string identifier()
	{
		const std::size_t start = pos_;
		while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
			++pos_;
		}
		return std::string(text_.substr(start, pos_ - start));
	}

	static ExprAst binary(ExprAst::Kind kind, ExprAst lhs, ExprAst rhs, std::size_t column)
	{
		ExprAst node;
		node.kind = kind;
		node.column = column;
		node.children.push_back(std::move(lhs));
		node.children.push_back(std::move(rhs));
		return node;
	}

	ExprAst expr()
	{
		ExprAst lhs = term();
		while (true) {
			skip_space();
			const std::size_t col = pos_ + 1;
			if (accept('+')) {
				lhs = binary(ExprAst::Kind::add, std::move(lhs), term(), col);
			} else if (accept('-')) {
				lhs = binary(ExprAst::Kind::sub, std::move(lhs), term(), col);
			} else {
				return lhs;
			}
		}
	}

	ExprAst term()
	{
		ExprAst lhs = factor();
		while (true) {
			skip_space();
			const std::size_t col = pos_ + 1;
			if (accept('*')) {
				lhs = binary(ExprAst::Kind::mul, std::move(lhs), factor(), col);
			} else if (accept('/')) {
				ExprAst rhs = factor();
				// int / int reads as a rational literal; folding keeps '/' left associative.
				if (lhs.kind == ExprAst::Kind::constant && rhs.kind == ExprAst::Kind::constant && !rhs.value.is_zero()) {
					lhs.value /= rhs.value;
				} else {
					lhs = binary(ExprAst::Kind::div, std::move(lhs), std::move(rhs), col);
				}
			} else {
				return lhs;
			}
		}
	}

	ExprAst factor()
	{
		skip_space();
		const std::size_t col = pos_ + 1;
		if (accept('-')) {
			ExprAst node;
			node.kind = ExprAst::Kind::neg;
			node.column = col;
			node.children.push_back(factor());
			return node;
		}
		ExprAst base = atom();
		skip_space();
		const std::size_t caret = pos_ + 1;
		if (accept('^')) {
			if (!digit_next()) {
				fail("exponent must be a non-negative integer literal");
			}
			const std::size_t exp_pos = pos_;
			const std::string e = digits();
			ExprAst node;
			node.kind = ExprAst::Kind::pow;
			node.column = caret;
			try {
				node.exponent = std::stoul(e);
			} catch (const std::exception &) {
				fail_at(exp_pos, "exponent too large");
			}
			node.children.push_back(std::move(base));
			return node;
		}
		return base;
	}

	ExprAst atom()
	{
		skip_space();
		const std::size_t col = pos_ + 1;
		if (at_end()) {
			fail("unexpected end of input");
		}
		const char c = peek();
		if (std::isdigit(static_cast<unsigned char>(c))) {
			ExprAst node;
			node.kind = ExprAst::Kind::constant;
			node.column = col;
			node.value = Rational::parse(digits());
			return node;
		}
		if (accept('(')) {
			ExprAst inner = expr();
			expect(')');
			return inner;
		}
		if (std::isalpha(static_cast<unsigned char>(c))) {
			const std::size_t start = pos_;
			const std::string name = identifier();
			if (name == "t") {
				ExprAst node;
				node.kind = ExprAst::Kind::var_t;
				node.column = col;
				return node;
			}
			if (name != "exp" && name != "log1p" && name != "Li" && name != "pow1p") {
				fail_at(start, "unknown function '" + name + "'");
			}
			return call(name, col);
		}
		fail(std::string("unexpected '") + c + "'");
	}

	ExprAst call(const std::string &name, std::size_t col)
	{
		ExprAst node;
		node.kind = ExprAst::Kind::call;
		node.name = name;
		node.column = col;
		expect('(');
		if (name == "Li") {
			skip_space();
			const std::size_t order_pos = pos_;
			const bool negative = accept('-');
			if (!digit_next()) {
				fail_at(order_pos, "Li order must be an integer literal");
			}
			const std::string d = digits();
			skip_space();
			if (peek() != ',') {
				fail_at(order_pos, "Li order must be an integer literal");
			}
			try {
				node.li_order = std::stoi(d) * (negative ? -1 : 1);
			} catch (const std::exception &) {
				fail_at(order_pos, "Li order out of range");
			}
			expect(',');
			node.children.push_back(expr());
		} else if (name == "pow1p") {
			skip_space();
			const std::size_t arg_pos = pos_;
			const bool negative = accept('-');
			if (!digit_next()) {
				fail_at(arg_pos, "pow1p argument must be a rational literal");
			}
			node.value = rational_literal();
			if (negative) {
				node.value = -node.value;
			}
		} else {
			node.children.push_back(expr());
		}
		expect(')');
		return node;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

// Signals that the working order was too small to resolve a quotient.
struct NeedMoreOrder {
};

RationalSeries at_order(const RationalSeries &s, std::size_t order)
{
	return s.order() == order ? s : s.truncated(order);
}

RationalSeries exp_series(const RationalSeries &inner)
{
	if (!inner[0].is_zero()) {
		throw EvalError("composition requires inner series with zero constant term");
	}
	return series_compose(exp_at(Rational(1), inner.order()), inner);
}

RationalSeries divide(const RationalSeries &num, const RationalSeries &den)
{
	const auto vd = den.valuation();
	if (!vd) {
		throw NeedMoreOrder{};
	}
	const auto vn = num.valuation();
	if (vn && *vn < *vd) {
		throw EvalError("series quotient not a power series");
	}
	return series_div_valuation(num, den, *vd);
}

RationalSeries eval_at(const ExprAst &node, std::size_t order)
{
	using Kind = ExprAst::Kind;
	switch (node.kind) {
	case Kind::constant:
		return RationalSeries::constant(node.value, order);
	case Kind::var_t:
		return RationalSeries::identity(order);
	case Kind::neg:
		return -eval_at(node.children[0], order);
	case Kind::pow:
		return series_pow(eval_at(node.children[0], order), node.exponent);
	case Kind::add:
	case Kind::sub:
	case Kind::mul:
	case Kind::div: {
		auto lhs = eval_at(node.children[0], order);
		auto rhs = eval_at(node.children[1], order);
		const std::size_t common = std::min(lhs.order(), rhs.order());
		lhs = at_order(lhs, common);
		rhs = at_order(rhs, common);
		if (node.kind == Kind::add) {
			return lhs + rhs;
		}
		if (node.kind == Kind::sub) {
			return lhs - rhs;
		}
		if (node.kind == Kind::mul) {
			return lhs * rhs;
		}
		return divide(lhs, rhs);
	}
	case Kind::call:
		if (node.name == "pow1p") {
			return pow1p(node.value, order);
		}
		{
			const auto arg = eval_at(node.children[0], order);
			if (!arg[0].is_zero()) {
				throw EvalError(node.name + " requires an argument with zero constant term");
			}
			if (node.name == "exp") {
				return exp_series(arg);
			}
			if (node.name == "log1p") {
				return series_compose(log1p(arg.order()), arg);
			}
			return polylog_series(node.li_order, arg);
		}
	}
	throw EvalError("unhandled expression node");
}

void render(const ExprAst &node, std::ostringstream &os)
{
	using Kind = ExprAst::Kind;
	switch (node.kind) {
	case Kind::constant:
		os << node.value;
		return;
	case Kind::var_t:
		os << 't';
		return;
	case Kind::neg:
		os << "(-";
		render(node.children[0], os);
		os << ')';
		return;
	case Kind::pow:
		os << '(';
		render(node.children[0], os);
		os << '^' << node.exponent << ')';
		return;
	case Kind::add:
	case Kind::sub:
	case Kind::mul:
	case Kind::div: {
		static constexpr const char *ops[] = {" + ", " - ", " * ", " / "};
		os << '(';
		render(node.children[0], os);
		os << ops[static_cast<int>(node.kind) - static_cast<int>(Kind::add)];
		render(node.children[1], os);
		os << ')';
		return;
	}
	case Kind::call:
		os << node.name << '(';
		if (node.name == "pow1p") {
			os << node.value;
		} else {
			if (node.name == "Li") {
				os << node.li_order << ", ";
			}
			render(node.children[0], os);
		}
		os << ')';
		return;
	}
}

} // namespace

std::string ExprAst::str() const
{
	std::ostringstream os;
	render(*this, os);
	return os.str();
}

ExprAst parse_expr(std::string_view text)
{
	return Parser(text).parse();
}

RationalSeries eval_expr(const ExprAst &ast, std::size_t order)
{
	constexpr std::size_t max_extra = 128;
	std::size_t working = order;
	while (true) {
		try {
			const auto s = eval_at(ast, working);
			if (s.order() >= order) {
				return at_order(s, order);
			}
			working += order - s.order();
		} catch (const NeedMoreOrder &) {
			working = working == 0 ? 1 : working * 2;
		}
		if (working > order + max_extra) {
			throw EvalError("series quotient not a power series");
		}
	}
}

} // namespace polybern::cli
