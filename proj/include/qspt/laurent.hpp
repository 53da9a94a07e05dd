#ifndef QSPT_LAURENT_HPP
#define QSPT_LAURENT_HPP

#include "cyclotomic.hpp"
#include "int_types.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace qspt {

/* Laurent polynomial in z with Int coefficients, stored as a sorted map from
 * exponent to coefficient. Zero coefficients are pruned on write, so equality
 * of the maps is equality of the polynomials. */
class ZLaurentPoly {
public:
	using Map = std::map<int64_t, Int>;

	ZLaurentPoly() = default;

	static ZLaurentPoly term(int64_t zexp, Int c)
	{
		ZLaurentPoly r;
		r.add_term(zexp, c);
		return r;
	}

	static ZLaurentPoly constant(Int c) { return term(0, std::move(c)); }

	/* z^a + z^b (a frequent building block). */
	static ZLaurentPoly pair(int64_t a, int64_t b)
	{
		ZLaurentPoly r;
		r.add_term(a, 1);
		r.add_term(b, 1);
		return r;
	}

	/* (1 - z^{k-1})(1 - z^k) z^{1-k} = z^{1-k} - 1 - z + z^k, the weight the
	 * paper attaches to nearly every dissected sum. */
	static ZLaurentPoly crank_weight(int64_t k)
	{
		ZLaurentPoly r;
		r.add_term(1 - k, 1);
		r.add_term(0, -1);
		r.add_term(1, -1);
		r.add_term(k, 1);
		return r;
	}

	bool is_zero() const { return c_.empty(); }

	const Map &terms() const { return c_; }

	Int coeff(int64_t zexp) const
	{
		auto it = c_.find(zexp);
		return it == c_.end() ? Int(0) : it->second;
	}

	void add_term(int64_t zexp, const Int &v)
	{
		if (v == 0) return;
		auto it = c_.find(zexp);
		if (it == c_.end()) {
			c_.emplace(zexp, v);
		} else {
			it->second += v;
			if (it->second == 0) c_.erase(it);
		}
	}

	int64_t min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
	int64_t max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

	ZLaurentPoly &operator+=(const ZLaurentPoly &b)
	{
		for (const auto &[e, v] : b.c_) add_term(e, v);
		return *this;
	}

	ZLaurentPoly &operator-=(const ZLaurentPoly &b)
	{
		for (const auto &[e, v] : b.c_) add_term(e, -v);
		return *this;
	}

	friend ZLaurentPoly operator+(ZLaurentPoly a, const ZLaurentPoly &b)
	{
		a += b;
		return a;
	}

	friend ZLaurentPoly operator-(ZLaurentPoly a, const ZLaurentPoly &b)
	{
		a -= b;
		return a;
	}

	ZLaurentPoly operator-() const
	{
		ZLaurentPoly r;
		for (const auto &[e, v] : c_) r.c_.emplace(e, -v);
		return r;
	}

	friend ZLaurentPoly operator*(const ZLaurentPoly &a, const ZLaurentPoly &b)
	{
		ZLaurentPoly r;
		for (const auto &[ea, va] : a.c_)
			for (const auto &[eb, vb] : b.c_)
				r.add_term(ea + eb, va * vb);
		return r;
	}

	ZLaurentPoly &scale(const Int &s)
	{
		if (s == 0) {
			c_.clear();
			return *this;
		}
		for (auto &[e, v] : c_) v *= s;
		return *this;
	}

	/* Multiply by z^k. */
	ZLaurentPoly shifted(int64_t k) const
	{
		ZLaurentPoly r;
		for (const auto &[e, v] : c_) r.c_.emplace(e + k, v);
		return r;
	}

	Int eval_z1() const
	{
		Int s = 0;
		for (const auto &[e, v] : c_) s += v;
		return s;
	}

	/* Substitute z = zeta_p; negative exponents go through zeta^{-1} =
	 * zeta^{p-1}; the result is reduced mod Phi_p. */
	CycInt eval_root(int p) const
	{
		CycInt s = CycInt::zero_of(p);
		for (const auto &[e, v] : c_)
			s += CycInt(v) * CycInt::zeta_pow(p, e);
		return s;
	}

	bool palindromic() const
	{
		for (const auto &[e, v] : c_)
			if (coeff(-e) != v) return false;
		return true;
	}

	friend bool operator==(const ZLaurentPoly &a, const ZLaurentPoly &b)
	{
		return a.c_ == b.c_;
	}

	friend bool operator!=(const ZLaurentPoly &a, const ZLaurentPoly &b)
	{
		return !(a == b);
	}

	std::string str() const
	{
		std::ostringstream os;
		bool first = true;
		for (const auto &[e, v] : c_) {
			os << (first ? "" : " + ") << v << "*z^" << e;
			first = false;
		}
		return first ? std::string("0") : os.str();
	}

private:
	Map c_;
};

} // namespace qspt

#endif
