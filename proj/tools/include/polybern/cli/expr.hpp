#ifndef POLYBERN_CLI_EXPR_HPP
#define POLYBERN_CLI_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <polybern/rational.hpp>
#include <polybern/series.hpp>

namespace polybern::cli
{

/// Syntax error with the 1-based column where it was detected.
class ParseError : public std::runtime_error
{
public:
	ParseError(std::size_t column, const std::string &message);
	std::size_t column() const noexcept { return column_; }

private:
	std::size_t column_;
};

/// Raised when an expression parses but does not denote a power series.
class EvalError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Expression tree over the single series variable t.
///
///   constant  value
///   var_t
///   add, sub, mul, div      two children
///   neg                     one child
///   pow                     one child, literal exponent
///   call                    name in {exp, log1p, Li, pow1p}; Li carries its
///                           literal order, pow1p its literal rational argument
struct ExprAst {
	enum class Kind { constant, var_t, add, sub, mul, div, neg, pow, call };

	Kind kind = Kind::constant;
	Rational value;
	unsigned long exponent = 0;
	std::string name;
	int li_order = 0;
	std::vector<ExprAst> children;
	std::size_t column = 1;

	/// Fully parenthesised rendering, e.g. "(t / log1p(t))".
	std::string str() const;
};

/// Recursive-descent parser.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' nonneg-int)? | '-' factor
///   atom   := rational-literal | 't' | '(' expr ')' | func
///   func   := ('exp'|'log1p') '(' expr ')' | 'Li' '(' int ',' expr ')'
///           | 'pow1p' '(' ['-'] rational-literal ')'
ExprAst parse_expr(std::string_view text);

/// Evaluates to a series of exactly the requested order. Subexpressions are
/// computed at a higher working order where divisions shift the valuation.
RationalSeries eval_expr(const ExprAst &ast, std::size_t order);

} // namespace polybern::cli

#endif
