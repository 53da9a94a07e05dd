#ifndef QSPT_EXPR_HPP
#define QSPT_EXPR_HPP

#include "qseries.hpp"

#include <cctype>
#include <memory>
#include <string>

namespace qspt {

/* A small expression language for ad-hoc q-series:
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ('^' int)?
 *   atom   := int | 'q' '^' int
 *           | 'poch(' ['-'] 'q^' int ',' int ',' (int|'inf') ')'
 *           | 'jac(' int ',' int ')' | 'eta(' int ')' | '(' expr ')'
 * eta(m) is the plain (q^m;q^m)_infty with no fractional prefactor. */
struct ExprNode {
	enum class Kind { Integer, QPow, Poch, Jac, Eta, Add, Sub, Mul, Div, Pow };
	Kind kind;
	int64_t a = 0, b = 0, c = 0; // literals / arguments
	bool negated = false;        // poch sign
	bool infinite = false;       // poch subscript
	std::unique_ptr<ExprNode> lhs, rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &msg, size_t pos)
	    : std::runtime_error(msg + " at position " + std::to_string(pos)),
	      position(pos) {}
	size_t position;
};

namespace detail_expr {

class Parser {
public:
	explicit Parser(const std::string &text) : s_(text) {}

	ExprPtr parse()
	{
		ExprPtr e = expr();
		skip_ws();
		if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
		return e;
	}

private:
	ExprPtr expr()
	{
		ExprPtr e = term();
		for (;;) {
			skip_ws();
			if (accept('+')) {
				e = binary(ExprNode::Kind::Add, std::move(e), term());
			} else if (accept('-')) {
				e = binary(ExprNode::Kind::Sub, std::move(e), term());
			} else {
				return e;
			}
		}
	}

	ExprPtr term()
	{
		ExprPtr e = factor();
		for (;;) {
			skip_ws();
			if (accept('*')) {
				e = binary(ExprNode::Kind::Mul, std::move(e), factor());
			} else if (accept('/')) {
				e = binary(ExprNode::Kind::Div, std::move(e), factor());
			} else {
				return e;
			}
		}
	}

	ExprPtr factor()
	{
		ExprPtr e = atom();
		skip_ws();
		if (accept('^')) {
			ExprPtr p = std::make_unique<ExprNode>();
			p->kind = ExprNode::Kind::Pow;
			p->a = integer();
			p->lhs = std::move(e);
			return p;
		}
		return e;
	}

	ExprPtr atom()
	{
		skip_ws();
		if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
		if (accept('(')) {
			ExprPtr e = expr();
			expect(')');
			return e;
		}
		if (match_word("poch(")) {
			ExprPtr e = std::make_unique<ExprNode>();
			e->kind = ExprNode::Kind::Poch;
			skip_ws();
			e->negated = accept('-');
			skip_ws();
			expect('q');
			expect('^');
			e->a = integer();
			expect(',');
			e->b = integer();
			expect(',');
			skip_ws();
			if (match_word("inf")) {
				e->infinite = true;
			} else {
				e->c = integer();
			}
			expect(')');
			return e;
		}
		if (match_word("jac(")) {
			ExprPtr e = std::make_unique<ExprNode>();
			e->kind = ExprNode::Kind::Jac;
			e->a = integer();
			expect(',');
			e->b = integer();
			expect(')');
			return e;
		}
		if (match_word("eta(")) {
			ExprPtr e = std::make_unique<ExprNode>();
			e->kind = ExprNode::Kind::Eta;
			e->a = integer();
			expect(')');
			return e;
		}
		if (s_[pos_] == 'q') {
			++pos_;
			ExprPtr e = std::make_unique<ExprNode>();
			e->kind = ExprNode::Kind::QPow;
			skip_ws();
			if (accept('^')) {
				e->a = integer();
			} else {
				e->a = 1;
			}
			return e;
		}
		if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
			ExprPtr e = std::make_unique<ExprNode>();
			e->kind = ExprNode::Kind::Integer;
			e->a = integer();
			return e;
		}
		throw ParseError("expected an atom", pos_);
	}

	ExprPtr binary(ExprNode::Kind k, ExprPtr l, ExprPtr r)
	{
		ExprPtr e = std::make_unique<ExprNode>();
		e->kind = k;
		e->lhs = std::move(l);
		e->rhs = std::move(r);
		return e;
	}

	int64_t integer()
	{
		skip_ws();
		bool neg = accept('-');
		if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
			throw ParseError("expected an integer", pos_);
		int64_t v = 0;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			v = v * 10 + (s_[pos_++] - '0');
		return neg ? -v : v;
	}

	void skip_ws()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip_ws();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!accept(c))
			throw ParseError(std::string("expected '") + c + "'", pos_);
	}

	bool match_word(const std::string &w)
	{
		skip_ws();
		if (s_.compare(pos_, w.size(), w) == 0) {
			pos_ += w.size();
			return true;
		}
		return false;
	}

	const std::string &s_;
	size_t pos_ = 0;
};

} // namespace detail_expr

inline ExprPtr parse_expr(const std::string &text)
{
	return detail_expr::Parser(text).parse();
}

inline std::string print_expr(const ExprNode &e)
{
	using K = ExprNode::Kind;
	switch (e.kind) {
	case K::Integer: return std::to_string(e.a);
	case K::QPow: return "q^" + std::to_string(e.a);
	case K::Poch:
		return std::string("poch(") + (e.negated ? "-" : "") + "q^" +
		       std::to_string(e.a) + "," + std::to_string(e.b) + "," +
		       (e.infinite ? "inf" : std::to_string(e.c)) + ")";
	case K::Jac:
		return "jac(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
	case K::Eta: return "eta(" + std::to_string(e.a) + ")";
	case K::Add: return "(" + print_expr(*e.lhs) + "+" + print_expr(*e.rhs) + ")";
	case K::Sub: return "(" + print_expr(*e.lhs) + "-" + print_expr(*e.rhs) + ")";
	case K::Mul: return "(" + print_expr(*e.lhs) + "*" + print_expr(*e.rhs) + ")";
	case K::Div: return "(" + print_expr(*e.lhs) + "/" + print_expr(*e.rhs) + ")";
	case K::Pow:
		return "(" + print_expr(*e.lhs) + "^" + std::to_string(e.a) + ")";
	}
	return "?";
}

inline bool expr_equal(const ExprNode &a, const ExprNode &b)
{
	if (a.kind != b.kind || a.a != b.a || a.b != b.b || a.c != b.c ||
	    a.negated != b.negated || a.infinite != b.infinite)
		return false;
	if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
	if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
	if (a.lhs && !expr_equal(*a.lhs, *b.lhs)) return false;
	if (a.rhs && !expr_equal(*a.rhs, *b.rhs)) return false;
	return true;
}

inline QSeries<Int> eval_expr(const ExprNode &e, int64_t N)
{
	using K = ExprNode::Kind;
	switch (e.kind) {
	case K::Integer: {
		QSeries<Int> s(N);
		s.add_term(0, Int(e.a));
		return s;
	}
	case K::QPow:
		if (e.a < 0) throw std::domain_error("negative q powers are not series");
		return QSeries<Int>::monomial(N, Int(1), e.a);
	case K::Poch: {
		QMonomial a(e.negated ? -1 : 1, e.a);
		if (e.b < 1) throw std::domain_error("poch modulus must be positive");
		if (e.infinite) return poch_infinite(a, e.b, N);
		if (e.c < 0) throw std::domain_error("poch length must be >= 0");
		return poch_finite(a, e.b, e.c, N);
	}
	case K::Jac: return jacprod(e.a, e.b, N);
	case K::Eta:
		if (e.a < 1) throw std::domain_error("eta modulus must be positive");
		return eta_product(e.a, N);
	case K::Add: return eval_expr(*e.lhs, N) + eval_expr(*e.rhs, N);
	case K::Sub: return eval_expr(*e.lhs, N) - eval_expr(*e.rhs, N);
	case K::Mul: return eval_expr(*e.lhs, N) * eval_expr(*e.rhs, N);
	case K::Div: return eval_expr(*e.lhs, N) * eval_expr(*e.rhs, N).invert();
	case K::Pow: {
		if (e.a < 0) throw std::domain_error("negative powers: use division");
		QSeries<Int> base = eval_expr(*e.lhs, N);
		QSeries<Int> r = QSeries<Int>::one(N);
		for (int64_t i = 0; i < e.a; ++i) r *= base;
		return r;
	}
	}
	throw std::logic_error("eval_expr: unknown node");
}

} // namespace qspt

#endif
