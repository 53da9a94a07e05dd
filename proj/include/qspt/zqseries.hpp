#ifndef QSPT_ZQSERIES_HPP
#define QSPT_ZQSERIES_HPP

#include "laurent.hpp"
#include "qseries.hpp"

#include <vector>

namespace qspt {

/* Truncated series in q whose q^n coefficient is a Laurent polynomial in z.
 * q-truncation follows the same min-order rule as QSeries; z-support is
 * unbounded but finite at every order. */
class ZQSeries {
public:
	explicit ZQSeries(int64_t order) : c_(static_cast<size_t>(order) + 1)
	{
		if (order < 0)
			throw std::invalid_argument("ZQSeries: order must be >= 0");
	}

	static ZQSeries one(int64_t order)
	{
		ZQSeries s(order);
		s.c_[0] = ZLaurentPoly::constant(Int(1));
		return s;
	}

	static ZQSeries from_lpoly(int64_t order, const ZLaurentPoly &p)
	{
		ZQSeries s(order);
		s.c_[0] = p;
		return s;
	}

	/* 1/(1 - z^c q^e) = sum_{k>=0} z^{ck} q^{ek}; e >= 1 so the expansion is a
	 * genuine power series in q. */
	static ZQSeries geometric_factor_inverse(int c, int64_t e, int64_t order)
	{
		if (c != 1 && c != -1)
			throw std::invalid_argument("geometric_factor_inverse: z exponent must be +-1");
		if (e < 1)
			throw std::invalid_argument("geometric_factor_inverse: q exponent must be >= 1");
		ZQSeries s(order);
		for (int64_t k = 0; k * e <= order; ++k)
			s.c_[static_cast<size_t>(k * e)].add_term(c * k, Int(1));
		return s;
	}

	int64_t order() const { return static_cast<int64_t>(c_.size()) - 1; }

	const ZLaurentPoly &coeff(int64_t n) const
	{
		if (n < 0 || n > order())
			throw std::out_of_range("ZQSeries: exponent outside stored order");
		return c_[static_cast<size_t>(n)];
	}

	ZLaurentPoly &coeff_ref(int64_t n) { return c_[static_cast<size_t>(n)]; }

	/* The z^m coefficient of the q^n coefficient, i.e. M(m,n). */
	Int extract(int64_t m, int64_t n) const { return coeff(n).coeff(m); }

	bool is_zero() const
	{
		for (const auto &p : c_)
			if (!p.is_zero()) return false;
		return true;
	}

	friend ZQSeries operator+(const ZQSeries &a, const ZQSeries &b)
	{
		ZQSeries r(std::min(a.order(), b.order()));
		for (int64_t n = 0; n <= r.order(); ++n)
			r.c_[n] = a.c_[n] + b.c_[n];
		return r;
	}

	friend ZQSeries operator-(const ZQSeries &a, const ZQSeries &b)
	{
		ZQSeries r(std::min(a.order(), b.order()));
		for (int64_t n = 0; n <= r.order(); ++n)
			r.c_[n] = a.c_[n] - b.c_[n];
		return r;
	}

	ZQSeries operator-() const
	{
		ZQSeries r(order());
		for (int64_t n = 0; n <= order(); ++n) r.c_[n] = -c_[n];
		return r;
	}

	ZQSeries &operator+=(const ZQSeries &b)
	{
		if (b.order() < order()) c_.resize(static_cast<size_t>(b.order()) + 1);
		for (int64_t n = 0; n <= order(); ++n) c_[n] += b.c_[n];
		return *this;
	}

	ZQSeries &operator-=(const ZQSeries &b)
	{
		if (b.order() < order()) c_.resize(static_cast<size_t>(b.order()) + 1);
		for (int64_t n = 0; n <= order(); ++n) c_[n] -= b.c_[n];
		return *this;
	}

	friend ZQSeries operator*(const ZQSeries &a, const ZQSeries &b)
	{
		ZQSeries r(std::min(a.order(), b.order()));
		const int64_t N = r.order();
		for (int64_t i = 0; i <= std::min(a.order(), N); ++i) {
			if (a.c_[i].is_zero()) continue;
			for (int64_t j = 0; i + j <= N; ++j) {
				if (b.c_[j].is_zero()) continue;
				for (const auto &[ea, va] : a.c_[i].terms())
					for (const auto &[eb, vb] : b.c_[j].terms())
						r.c_[i + j].add_term(ea + eb, va * vb);
			}
		}
		return r;
	}

	ZQSeries &operator*=(const ZQSeries &b) { *this = *this * b; return *this; }

	ZQSeries &scale(const Int &s)
	{
		for (auto &p : c_) p.scale(s);
		return *this;
	}

	ZQSeries &mul_lpoly(const ZLaurentPoly &p)
	{
		for (auto &row : c_) row = row * p;
		return *this;
	}

	ZQSeries &mul_scalar_series(const QSeries<Int> &s)
	{
		ZQSeries r(std::min(order(), s.order()));
		for (int64_t j = 0; j <= r.order(); ++j) {
			if (s.coeff(j) == 0) continue;
			for (int64_t i = 0; i + j <= r.order(); ++i) {
				if (c_[i].is_zero()) continue;
				ZLaurentPoly t = c_[i];
				t.scale(s.coeff(j));
				r.c_[i + j] += t;
			}
		}
		*this = std::move(r);
		return *this;
	}

	/* In place *this *= (1 - c z^dir q^e); e = 0 is allowed (the (1-z) and
	 * (1-z^{-1}) factors the paper clears everywhere). */
	ZQSeries &mul_one_minus_z(int dir, int64_t e, const Int &c = Int(1))
	{
		check_dir(dir);
		if (e < 0) throw std::invalid_argument("mul_one_minus_z: e >= 0");
		if (e == 0) {
			for (auto &row : c_) {
				ZLaurentPoly shifted = row.shifted(dir);
				shifted.scale(c);
				row -= shifted;
			}
			return *this;
		}
		for (int64_t n = order(); n >= e; --n) {
			if (c_[n - e].is_zero()) continue;
			for (const auto &[m, v] : c_[n - e].terms())
				c_[n].add_term(m + dir, -(c * v));
		}
		return *this;
	}

	/* In place *this *= 1/(1 - c z^dir q^e), e >= 1. */
	ZQSeries &div_one_minus_z(int dir, int64_t e, const Int &c = Int(1))
	{
		check_dir(dir);
		if (e < 1) throw std::invalid_argument("div_one_minus_z: e >= 1");
		for (int64_t n = e; n <= order(); ++n) {
			if (c_[n - e].is_zero()) continue;
			for (const auto &[m, v] : c_[n - e].terms())
				c_[n].add_term(m + dir, c * v);
		}
		return *this;
	}

	ZQSeries &shift_q(int64_t k)
	{
		if (k < 0) throw std::invalid_argument("ZQSeries: negative shift");
		for (int64_t n = order(); n >= 0; --n)
			c_[n] = (n >= k) ? c_[n - k] : ZLaurentPoly{};
		return *this;
	}

	ZQSeries substitute_power(int64_t k) const
	{
		if (k < 1) throw std::invalid_argument("ZQSeries: power must be >= 1");
		ZQSeries r(order());
		for (int64_t n = 0; n * k <= order(); ++n)
			r.c_[n * k] = c_[n];
		return r;
	}

	QSeries<Int> eval_z1() const
	{
		QSeries<Int> r(order());
		for (int64_t n = 0; n <= order(); ++n)
			r.coeff_ref(n) = c_[n].eval_z1();
		return r;
	}

	QSeries<CycInt> eval_root(int p) const
	{
		QSeries<CycInt> r(order());
		for (int64_t n = 0; n <= order(); ++n)
			r.coeff_ref(n) = c_[n].eval_root(p);
		return r;
	}

	bool palindromic_all() const
	{
		for (const auto &row : c_)
			if (!row.palindromic()) return false;
		return true;
	}

	/* Every q^n coefficient has z-support inside [-n-B, n+B]. */
	bool support_within(int64_t B) const
	{
		for (int64_t n = 0; n <= order(); ++n) {
			if (c_[n].is_zero()) continue;
			if (c_[n].min_exp() < -n - B || c_[n].max_exp() > n + B)
				return false;
		}
		return true;
	}

	friend bool operator==(const ZQSeries &a, const ZQSeries &b)
	{
		return a.c_ == b.c_;
	}

	friend int64_t first_mismatch(const ZQSeries &a, const ZQSeries &b)
	{
		const int64_t N = std::min(a.order(), b.order());
		for (int64_t n = 0; n <= N; ++n)
			if (a.c_[n] != b.c_[n]) return n;
		return -1;
	}

private:
	static void check_dir(int dir)
	{
		if (dir != 1 && dir != -1)
			throw std::invalid_argument("ZQSeries: z exponent must be +-1");
	}

	std::vector<ZLaurentPoly> c_;
};

namespace detail {

/* Dense accumulator for the bivariate summation kernels. Row n holds the z
 * exponents -(n+PAD) .. n+PAD of the q^n coefficient; rows materialize on
 * first touch. This keeps the O(N^2 log N) Horner passes on flat arrays and
 * converts to the canonical map form once at the end. */
class BivarAccum {
public:
	static constexpr int64_t PAD = 4;

	explicit BivarAccum(int64_t order) : rows_(static_cast<size_t>(order) + 1) {}

	int64_t order() const { return static_cast<int64_t>(rows_.size()) - 1; }

	/* += sign * z^{zexp} * q^{qe} * s(q). */
	void add_scalar(int64_t qe, const QSeries<Int> &s, int sign, int64_t zexp = 0)
	{
		for (int64_t j = 0; qe + j <= order(); ++j) {
			if (j > s.order()) break;
			if (s.coeff(j) == 0) continue;
			if (sign > 0) at(qe + j, zexp) += s.coeff(j);
			else at(qe + j, zexp) -= s.coeff(j);
		}
	}

	void add_series(const ZQSeries &s, int64_t qshift = 0)
	{
		for (int64_t n = 0; n + qshift <= order() && n <= s.order(); ++n)
			for (const auto &[m, v] : s.coeff(n).terms())
				at(n + qshift, m) += v;
	}

	void add_unit(int64_t qe = 0) { at(qe, 0) += 1; }

	/* *this *= (1 - c z^dir q^e), e >= 0. */
	void multiply_one_minus(int dir, int64_t e, int c = 1)
	{
		if (e == 0) {
			for (int64_t n = 0; n <= order(); ++n) {
				Row &r = rows_[n];
				if (r.v.empty()) continue;
				/* Walk so the source entry is still unmodified. */
				if (dir > 0) {
					for (int64_t m = r.hi; m >= r.lo; --m)
						axpy(n, m + 1, -c, r.v[static_cast<size_t>(m - r.lo)]);
				} else {
					for (int64_t m = r.lo; m <= r.hi; ++m)
						axpy(n, m - 1, -c, r.v[static_cast<size_t>(m - r.lo)]);
				}
			}
			return;
		}
		for (int64_t n = order(); n >= e; --n) {
			const Row &src = rows_[n - e];
			if (src.v.empty()) continue;
			for (int64_t m = src.lo; m <= src.hi; ++m)
				axpy(n, m + dir, -c, src.v[static_cast<size_t>(m - src.lo)]);
		}
	}

	/* *this *= 1/(1 - c z^dir q^e), e >= 1 (geometric prefix pass). */
	void divide_one_minus(int dir, int64_t e, int c = 1)
	{
		if (e < 1)
			throw std::invalid_argument("BivarAccum: geometric factor needs e >= 1");
		for (int64_t n = e; n <= order(); ++n) {
			const Row &src = rows_[n - e];
			if (src.v.empty()) continue;
			for (int64_t m = src.lo; m <= src.hi; ++m)
				axpy(n, m + dir, c, src.v[static_cast<size_t>(m - src.lo)]);
		}
	}

	void scale(const Int &s)
	{
		for (auto &r : rows_)
			for (auto &v : r.v) v *= s;
	}

	ZQSeries to_series() const
	{
		ZQSeries out(order());
		for (int64_t n = 0; n <= order(); ++n) {
			const Row &r = rows_[n];
			for (int64_t m = r.lo; m <= r.hi; ++m) {
				const Int &v = r.v[static_cast<size_t>(m - r.lo)];
				if (v != 0) out.coeff_ref(n).add_term(m, v);
			}
		}
		return out;
	}

private:
	struct Row {
		int64_t lo = 0, hi = -1; // inclusive; empty when v empty
		std::vector<Int> v;
	};

	Int &at(int64_t n, int64_t m)
	{
		Row &r = rows_[static_cast<size_t>(n)];
		if (r.v.empty()) {
			int64_t w = n + PAD;
			r.lo = -w;
			r.hi = w;
			r.v.assign(static_cast<size_t>(2 * w + 1), Int(0));
		}
		if (m < r.lo || m > r.hi)
			throw std::logic_error("BivarAccum: z support exceeded row bound");
		return r.v[static_cast<size_t>(m - r.lo)];
	}

	void axpy(int64_t n, int64_t m, int c, const Int &v)
	{
		if (v == 0) return;
		if (c > 0) at(n, m) += v;
		else at(n, m) -= v;
	}

	std::vector<Row> rows_;
};

/* Same interface with z evaluated at zeta_p; rows collapse to one CycInt. */
class RootAccum {
public:
	RootAccum(int p, int64_t order)
	    : p_(p), c_(static_cast<size_t>(order) + 1, CycInt::zero_of(p)) {}

	int64_t order() const { return static_cast<int64_t>(c_.size()) - 1; }

	void add_scalar(int64_t qe, const QSeries<Int> &s, int sign, int64_t zexp = 0)
	{
		CycInt unit = CycInt::zeta_pow(p_, zexp);
		if (sign < 0) unit = -unit;
		for (int64_t j = 0; qe + j <= order(); ++j) {
			if (j > s.order()) break;
			if (s.coeff(j) == 0) continue;
			c_[qe + j] += CycInt(s.coeff(j)) * unit;
		}
	}

	void add_unit(int64_t qe = 0) { c_[qe] += CycInt(Int(1)); }

	void multiply_one_minus(int dir, int64_t e, int c = 1)
	{
		if (e == 0) {
			for (auto &v : c_) {
				CycInt t = CycInt::zero_of(p_);
				t.add_zeta_mul(v, dir);
				if (c > 0) v -= t; else v += t;
			}
			return;
		}
		for (int64_t n = order(); n >= e; --n) {
			if (c_[n - e].is_zero()) continue;
			if (c > 0) {
				CycInt t = CycInt::zero_of(p_);
				t.add_zeta_mul(c_[n - e], dir);
				c_[n] -= t;
			} else {
				c_[n].add_zeta_mul(c_[n - e], dir);
			}
		}
	}

	void divide_one_minus(int dir, int64_t e, int c = 1)
	{
		if (e < 1)
			throw std::invalid_argument("RootAccum: geometric factor needs e >= 1");
		for (int64_t n = e; n <= order(); ++n) {
			if (c_[n - e].is_zero()) continue;
			if (c > 0) {
				c_[n].add_zeta_mul(c_[n - e], dir);
			} else {
				CycInt t = CycInt::zero_of(p_);
				t.add_zeta_mul(c_[n - e], dir);
				c_[n] -= t;
			}
		}
	}

	QSeries<CycInt> to_series() const
	{
		QSeries<CycInt> out(order());
		for (int64_t n = 0; n <= order(); ++n) out.coeff_ref(n) = c_[n];
		return out;
	}

private:
	int p_;
	std::vector<CycInt> c_;
};

/* Same interface with z := 1 (the spt-type one-variable image). */
class ScalarAccum {
public:
	explicit ScalarAccum(int64_t order) : c_(static_cast<size_t>(order) + 1, Int(0)) {}

	int64_t order() const { return static_cast<int64_t>(c_.size()) - 1; }

	void add_scalar(int64_t qe, const QSeries<Int> &s, int sign, int64_t = 0)
	{
		for (int64_t j = 0; qe + j <= order(); ++j) {
			if (j > s.order()) break;
			if (s.coeff(j) == 0) continue;
			if (sign > 0) c_[qe + j] += s.coeff(j);
			else c_[qe + j] -= s.coeff(j);
		}
	}

	void add_unit(int64_t qe = 0) { c_[qe] += 1; }

	void multiply_one_minus(int /*dir*/, int64_t e, int c = 1)
	{
		if (e == 0) {
			/* Factor (1 - c z^{+-1}) at z = 1: constant 1 - c. */
			if (c == 1) {
				for (auto &v : c_) v = 0;
			} else {
				for (auto &v : c_) v *= 2;
			}
			return;
		}
		for (int64_t n = order(); n >= e; --n) {
			if (c_[n - e] == 0) continue;
			if (c > 0) c_[n] -= c_[n - e];
			else c_[n] += c_[n - e];
		}
	}

	void divide_one_minus(int /*dir*/, int64_t e, int c = 1)
	{
		if (e < 1)
			throw std::invalid_argument("ScalarAccum: geometric factor needs e >= 1");
		for (int64_t n = e; n <= order(); ++n) {
			if (c_[n - e] == 0) continue;
			if (c > 0) c_[n] += c_[n - e];
			else c_[n] -= c_[n - e];
		}
	}

	QSeries<Int> to_series() const
	{
		QSeries<Int> out(order());
		for (int64_t n = 0; n <= order(); ++n) out.coeff_ref(n) = c_[n];
		return out;
	}

private:
	std::vector<Int> c_;
};

} // namespace detail

/* (z q^a; q^m)_infty (z^{-1} q^a; q^m)_infty applied as explicit factors; with
 * a = 0 this is (z, z^{-1}; q^m)_infty including the (1-z)(1-z^{-1}) head. */
inline ZQSeries zpoch_pair_infinite(int64_t a, int64_t m, int64_t N)
{
	detail::BivarAccum acc(N);
	acc.add_unit();
	for (int64_t e = a; e <= N; e += m) {
		acc.multiply_one_minus(+1, e);
		acc.multiply_one_minus(-1, e);
	}
	return acc.to_series();
}

} // namespace qspt

#endif
