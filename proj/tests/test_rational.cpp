#include <doctest.h>

#include <stdexcept>

#include <polybern/polynomial.hpp>
#include <polybern/rational.hpp>

#include "oracles.hpp"

using polybern::Polynomial;
using polybern::Rational;

TEST_CASE("rational canonical form")
{
	CHECK(Rational(2, 4).str() == "1/2");
	CHECK(Rational(3, -6).str() == "-1/2");
	CHECK(Rational(0, 5).str() == "0");
	CHECK(Rational(0, -5).denominator() == 1);
	CHECK(Rational(6, 3).is_integer());
	CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse")
{
	CHECK(Rational::parse("-13/36") == Rational(-13, 36));
	CHECK(Rational::parse("4/8") == Rational(1, 2));
	CHECK(Rational::parse("17") == Rational(17));
	CHECK(Rational::parse("+3/4") == Rational(3, 4));
	for (const char *bad : {"", "1/", "/2", "1/0", "a", "1.5", "--1", "1/-2", " 1"}) {
		CAPTURE(bad);
		CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
	}
}

TEST_CASE("rational arithmetic")
{
	const Rational a(1, 2), b(-1, 3);
	CHECK(a + b == Rational(1, 6));
	CHECK(a - b == Rational(5, 6));
	CHECK(a * b == Rational(-1, 6));
	CHECK(a / b == Rational(-3, 2));
	CHECK(b < a);
	CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
	CHECK(Rational(-2).pow(3) == Rational(-8));
	CHECK(Rational::factorial(10) == Rational(3628800));
	CHECK_THROWS_AS(a / Rational{}, std::domain_error);
	CHECK_THROWS_AS(Rational{}.pow(-1), std::domain_error);
}

TEST_CASE("rational operations preserve canonical form")
{
	polybern::oracle::RationalGen gen(7);
	for (int i = 0; i < 500; ++i) {
		const Rational a = gen.next(), b = gen.next_nonzero();
		for (const Rational &r : {a + b, a - b, a * b, a / b, -a, a.pow(3)}) {
			REQUIRE(r.is_canonical());
		}
	}
}

TEST_CASE("polynomial basics")
{
	const Polynomial x = Polynomial::x();
	const Polynomial p = x * x - Polynomial(Rational(1, 6));
	CHECK(p.degree() == 2);
	CHECK(p.str() == "x^2 - 1/6");
	CHECK(p.evaluate(Rational(1)) == Rational(5, 6));
	CHECK((p - p).is_zero());
	CHECK((p - p).degree() == -1);
	CHECK(Polynomial(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}).degree() == 0);
	CHECK((x + Polynomial(1)).shifted(Rational(-1)) == x);
	CHECK(p.shifted(Rational(1)) == x * x + 2 * x + Polynomial(Rational(5, 6)));
	CHECK((p / Rational(2)).coeff(2) == Rational(1, 2));
	CHECK_THROWS_AS(p / Rational{}, std::domain_error);
	CHECK((-x).str() == "-x");
	CHECK((Rational(3, 2) * x).str() == "3/2*x");
}

TEST_CASE("polynomial shift agrees with evaluation")
{
	polybern::oracle::RationalGen gen(11);
	for (int i = 0; i < 50; ++i) {
		const Polynomial p = gen.polynomial(6);
		const Rational s = gen.next(), at = gen.next();
		REQUIRE(p.shifted(s).evaluate(at) == p.evaluate(at + s));
	}
}
