#include "qspt/expr.hpp"
#include "qspt/partitions.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qspt;

TEST_CASE("expression evaluation")
{
	ExprPtr e = parse_expr("eta(1)");
	QSeries<Int> s = eval_expr(*e, 7);
	CHECK(s.str() == "1,-1,-1,0,0,1,0,1");

	// jac(1,5)*jac(2,5) relates to (q;q)_inf/(q^5;q^5)_inf.
	QSeries<Int> j = eval_expr(*parse_expr("jac(1,5)*jac(2,5)"), 30);
	QSeries<Int> expect =
	    eta_product(1, 30) * eta_product(5, 30).invert();
	CHECK(j == expect);

	QSeries<Int> p = eval_expr(*parse_expr("poch(q^1,1,2)"), 10);
	CHECK(p == poch_finite(qpow(1), 1, 2, 10));

	QSeries<Int> inv = eval_expr(*parse_expr("1/poch(q^1,1,inf)"), 12);
	for (int64_t n = 0; n <= 12; ++n) CHECK(inv.coeff(n) == partition_count(n));

	QSeries<Int> pw = eval_expr(*parse_expr("(1-q^1)^2"), 6);
	CHECK(pw.coeff(0) == 1);
	CHECK(pw.coeff(1) == -2);
	CHECK(pw.coeff(2) == 1);
}

TEST_CASE("division requires a unit constant term")
{
	CHECK_THROWS(eval_expr(*parse_expr("1/(1-q^0)"), 5));
	CHECK_THROWS(eval_expr(*parse_expr("1/(2+q^1)"), 5));
	CHECK_NOTHROW(eval_expr(*parse_expr("1/(1-q^1)"), 5));
}

TEST_CASE("parse errors carry positions")
{
	CHECK_THROWS_AS(parse_expr("eta(1"), ParseError);
	CHECK_THROWS_AS(parse_expr("1 + "), ParseError);
	CHECK_THROWS_AS(parse_expr("foo(3)"), ParseError);
	CHECK_THROWS_AS(parse_expr("1 + 2 extra"), ParseError);
}

TEST_CASE("print/parse round trip")
{
	for (const char *text :
	     {"eta(1)", "jac(1,5)*jac(2,5)", "1/(1-q^2)", "poch(-q^2,3,inf)",
	      "(1+q^1)^3-q^2*eta(6)", "poch(q^1,1,4)/poch(q^2,2,2)"}) {
		ExprPtr a = parse_expr(text);
		ExprPtr b = parse_expr(print_expr(*a));
		CHECK(expr_equal(*a, *b));
		CHECK(print_expr(*a) == print_expr(*b));
	}
}
