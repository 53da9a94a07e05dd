#ifndef QSPT_QSERIES_HPP
#define QSPT_QSERIES_HPP

#include "cyclotomic.hpp"
#include "int_types.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

namespace qspt {

/* +-q^e, the only shape of argument the paper ever feeds a Pochhammer symbol. */
struct QMonomial {
	int sign = 1;         // +1 or -1
	int64_t exponent = 0; // >= 0

	QMonomial(int s, int64_t e) : sign(s), exponent(e)
	{
		if (s != 1 && s != -1)
			throw std::invalid_argument("QMonomial: sign must be +-1");
		if (e < 0)
			throw std::invalid_argument("QMonomial: exponent must be >= 0");
	}
};

inline QMonomial qpow(int64_t e) { return QMonomial(1, e); }
inline QMonomial neg_qpow(int64_t e) { return QMonomial(-1, e); }

namespace detail {

inline bool ring_zero(const Int &v) { return v == 0; }
inline bool ring_zero(const CycInt &v) { return v.is_zero(); }

inline Int ring_inverse(const Int &v)
{
	if (v == 1 || v == -1) return v;
	throw std::domain_error("constant term is not a unit");
}

inline CycInt ring_inverse(const CycInt &v) { return v.inverse(); }

inline Int ring_cast(const Int &, const Int &v) { return v; }
inline CycInt ring_cast(const CycInt &, const Int &v) { return CycInt(v); }

} // namespace detail

/* Truncated formal power series sum c_n q^n, 0 <= n <= order, over an exact
 * coefficient ring (Int or CycInt). Every stored coefficient is exact; binary
 * operations truncate to the smaller order so the result never claims more
 * precision than both inputs can deliver. */
template <class R = Int>
class QSeries {
public:
	explicit QSeries(int64_t order) : c_(static_cast<size_t>(order) + 1)
	{
		if (order < 0)
			throw std::invalid_argument("QSeries: order must be >= 0");
	}

	static QSeries one(int64_t order)
	{
		QSeries s(order);
		s.c_[0] = R(Int(1));
		return s;
	}

	static QSeries monomial(int64_t order, R coeff, int64_t e)
	{
		QSeries s(order);
		if (e < 0) throw std::invalid_argument("QSeries: negative exponent");
		if (e <= order) s.c_[static_cast<size_t>(e)] = std::move(coeff);
		return s;
	}

	int64_t order() const { return static_cast<int64_t>(c_.size()) - 1; }

	const R &coeff(int64_t n) const
	{
		if (n < 0 || n > order())
			throw std::out_of_range("QSeries: exponent outside stored order");
		return c_[static_cast<size_t>(n)];
	}

	R &coeff_ref(int64_t n) { return c_[static_cast<size_t>(n)]; }

	void add_term(int64_t e, const R &v)
	{
		if (e < 0) throw std::invalid_argument("QSeries: negative exponent");
		if (e <= order()) c_[static_cast<size_t>(e)] += v;
	}

	bool is_zero() const
	{
		for (const auto &v : c_)
			if (!detail::ring_zero(v)) return false;
		return true;
	}

	/* Smallest exponent with nonzero coefficient, or order()+1 if none. */
	int64_t valuation() const
	{
		for (int64_t n = 0; n <= order(); ++n)
			if (!detail::ring_zero(c_[static_cast<size_t>(n)])) return n;
		return order() + 1;
	}

	friend QSeries operator+(const QSeries &a, const QSeries &b)
	{
		QSeries r(std::min(a.order(), b.order()));
		for (int64_t n = 0; n <= r.order(); ++n)
			r.c_[n] = a.c_[n] + b.c_[n];
		return r;
	}

	friend QSeries operator-(const QSeries &a, const QSeries &b)
	{
		QSeries r(std::min(a.order(), b.order()));
		for (int64_t n = 0; n <= r.order(); ++n)
			r.c_[n] = a.c_[n] - b.c_[n];
		return r;
	}

	QSeries operator-() const
	{
		QSeries r = *this;
		for (auto &v : r.c_) v = -v;
		return r;
	}

	QSeries &operator+=(const QSeries &b)
	{
		if (b.order() < order()) c_.resize(static_cast<size_t>(b.order()) + 1);
		for (int64_t n = 0; n <= order(); ++n) c_[n] += b.c_[n];
		return *this;
	}

	QSeries &operator-=(const QSeries &b)
	{
		if (b.order() < order()) c_.resize(static_cast<size_t>(b.order()) + 1);
		for (int64_t n = 0; n <= order(); ++n) c_[n] -= b.c_[n];
		return *this;
	}

	friend QSeries operator*(const QSeries &a, const QSeries &b)
	{
		QSeries r(std::min(a.order(), b.order()));
		const int64_t N = r.order();
		for (int64_t i = 0; i <= std::min(a.order(), N); ++i) {
			if (detail::ring_zero(a.c_[i])) continue;
			for (int64_t j = 0; i + j <= N; ++j) {
				if (detail::ring_zero(b.c_[j])) continue;
				r.c_[i + j] += a.c_[i] * b.c_[j];
			}
		}
		return r;
	}

	QSeries &operator*=(const QSeries &b) { *this = *this * b; return *this; }

	QSeries &scale(const R &s)
	{
		for (auto &v : c_) v = v * s;
		return *this;
	}

	friend QSeries operator*(const R &s, QSeries a) { a.scale(s); return a; }

	/* Multiply by q^k in place; coefficients pushed beyond the order drop. */
	QSeries &shift_up(int64_t k)
	{
		if (k < 0) throw std::invalid_argument("QSeries: negative shift");
		for (int64_t n = order(); n >= 0; --n)
			c_[n] = (n >= k) ? c_[n - k] : R{};
		return *this;
	}

	/* In place *this *= (1 - a q^e) with e >= 1 and a a ring element. */
	QSeries &mul_one_minus(const R &a, int64_t e)
	{
		if (e < 1) throw std::invalid_argument("QSeries: factor needs e >= 1");
		if (e <= order() && !detail::ring_zero(a))
			for (int64_t n = order(); n >= e; --n)
				c_[n] -= a * c_[n - e];
		return *this;
	}

	/* In place *this *= 1/(1 - a q^e) by the geometric prefix recurrence. */
	QSeries &div_one_minus(const R &a, int64_t e)
	{
		if (e < 1) throw std::invalid_argument("QSeries: factor needs e >= 1");
		if (e <= order() && !detail::ring_zero(a))
			for (int64_t n = e; n <= order(); ++n)
				c_[n] += a * c_[n - e];
		return *this;
	}

	/* Exact reciprocal by forward substitution; the constant term must be a
	 * unit of the coefficient ring. */
	QSeries invert() const
	{
		const R c0inv = detail::ring_inverse(c_[0]);
		QSeries r(order());
		r.c_[0] = c0inv;
		for (int64_t n = 1; n <= order(); ++n) {
			R acc{};
			for (int64_t k = 1; k <= n; ++k) {
				if (detail::ring_zero(c_[k])) continue;
				acc += c_[k] * r.c_[n - k];
			}
			r.c_[n] = -(c0inv * acc);
		}
		return r;
	}

	/* q -> q^k. Entries of the source beyond order/k are unused; the stated
	 * order is preserved. */
	QSeries substitute_power(int64_t k) const
	{
		if (k < 1) throw std::invalid_argument("QSeries: power must be >= 1");
		QSeries r(order());
		for (int64_t n = 0; n * k <= order(); ++n)
			r.c_[n * k] = c_[n];
		return r;
	}

	friend bool operator==(const QSeries &a, const QSeries &b)
	{
		return a.c_ == b.c_;
	}

	/* First exponent <= min order where the two disagree, or -1 if equal on
	 * the shared range. */
	friend int64_t first_mismatch(const QSeries &a, const QSeries &b)
	{
		const int64_t N = std::min(a.order(), b.order());
		for (int64_t n = 0; n <= N; ++n)
			if (!(a.c_[n] == b.c_[n])) return n;
		return -1;
	}

	std::string str(int64_t upto = -1) const
	{
		if (upto < 0 || upto > order()) upto = order();
		std::ostringstream os;
		for (int64_t n = 0; n <= upto; ++n)
			os << (n ? "," : "") << c_[static_cast<size_t>(n)];
		return os.str();
	}

private:
	std::vector<R> c_;
};

template <class R>
QSeries<R> to_ring(const QSeries<Int> &a, const R &sample)
{
	QSeries<R> r(a.order());
	for (int64_t n = 0; n <= a.order(); ++n)
		r.coeff_ref(n) = detail::ring_cast(sample, a.coeff(n));
	return r;
}

inline QSeries<CycInt> to_cyc(const QSeries<Int> &a)
{
	return to_ring<CycInt>(a, CycInt{});
}

/* (a; q^m)_n = prod_{j=0}^{n-1} (1 - a q^{jm}) with a = +-q^e. */
template <class R = Int>
QSeries<R> poch_finite(QMonomial a, int64_t m, int64_t n, int64_t N)
{
	if (m < 1) throw std::invalid_argument("poch_finite: modulus must be >= 1");
	if (n < 0) throw std::invalid_argument("poch_finite: length must be >= 0");
	if (a.exponent == 0 && a.sign == 1 && n > 0)
		throw std::invalid_argument("poch_finite: (1;q)_n vanishes");
	QSeries<R> r = QSeries<R>::one(N);
	for (int64_t j = 0; j < n; ++j) {
		const int64_t e = a.exponent + j * m;
		if (e > N) break; // remaining factors are 1 mod q^{N+1}... except sign
		if (e == 0) {
			/* a = -1 gives the constant factor (1 - (-1)) = 2. */
			r.scale(R(Int(2)));
			continue;
		}
		r.mul_one_minus(R(Int(a.sign)), e);
	}
	return r;
}

/* (a; q^m)_infty truncated at N: exactly the factors with exponent <= N are
 * multiplied; each omitted factor is 1 - a q^{e} with e > N, hence congruent
 * to 1 modulo q^{N+1} and unable to affect any stored coefficient. */
template <class R = Int>
QSeries<R> poch_infinite(QMonomial a, int64_t m, int64_t N)
{
	if (m < 1) throw std::invalid_argument("poch_infinite: modulus must be >= 1");
	if (a.exponent == 0 && a.sign == 1)
		throw std::invalid_argument("poch_infinite: (1;q)_infty has a zero factor");
	QSeries<R> r = QSeries<R>::one(N);
	if (a.exponent == 0) {
		r.scale(R(Int(2))); // leading (1 - (-1)) factor of (-1;q^m)_infty
		for (int64_t e = m; e <= N; e += m)
			r.mul_one_minus(R(Int(-1)), e);
		return r;
	}
	for (int64_t e = a.exponent; e <= N; e += m)
		r.mul_one_minus(R(Int(a.sign)), e);
	return r;
}

/* 1/(a; q^m)_infty for a = +q^e with e >= 1 (geometric expansions). */
template <class R = Int>
QSeries<R> poch_infinite_inv(QMonomial a, int64_t m, int64_t N)
{
	if (a.exponent < 1)
		throw std::invalid_argument("poch_infinite_inv: exponent must be >= 1");
	QSeries<R> r = QSeries<R>::one(N);
	for (int64_t e = a.exponent; e <= N; e += m)
		r.div_one_minus(R(Int(a.sign)), e);
	return r;
}

/* [q^a; q^m] = (q^a; q^m)_infty (q^{m-a}; q^m)_infty, 0 < a < m. */
template <class R = Int>
QSeries<R> jacprod(int64_t a, int64_t m, int64_t N)
{
	if (!(0 < a && a < m))
		throw std::invalid_argument("jacprod: need 0 < a < m");
	return poch_infinite<R>(qpow(a), m, N) * poch_infinite<R>(qpow(m - a), m, N);
}

/* (q^m; q^m)_infty, the eta-type product without the fractional prefactor. */
template <class R = Int>
QSeries<R> eta_product(int64_t m, int64_t N)
{
	return poch_infinite<R>(qpow(m), m, N);
}

/* Sum over all integers n of sign(n) q^{exponent(n)} where the exponent is a
 * quadratic with positive leading coefficient and vertex in [-2, 2]. */
template <class R = Int, class Sign, class Exp>
QSeries<R> theta_sum(int64_t N, Sign sign, Exp exponent)
{
	QSeries<R> r(N);
	for (int64_t n = 0;; ++n) {
		const int64_t e = exponent(n);
		if (e > N) {
			if (n > 2) break;
			continue;
		}
		r.add_term(e, R(Int(sign(n))));
	}
	for (int64_t n = -1;; --n) {
		const int64_t e = exponent(n);
		if (e > N) {
			if (n < -2) break;
			continue;
		}
		r.add_term(e, R(Int(sign(n))));
	}
	return r;
}

/* The two Jacobi Triple Product theta expansions at z = 1, plus Euler's
 * pentagonal expansion of (q;q)_infty:
 *   1: (q,q,q^2;q^2)_infty      = sum (-1)^n q^{n^2}
 *   2: (1,q,q;q)_infty          = sum (-1)^n q^{n(n-1)/2}  (identically 0)
 *   3: (q;q)_infty              = sum (-1)^n q^{n(3n-1)/2}
 */
inline QSeries<Int> theta_jtp(int variant, int64_t N)
{
	auto alt = [](int64_t n) { return (n % 2 == 0) ? 1 : -1; };
	switch (variant) {
	case 1:
		return theta_sum(N, alt, [](int64_t n) { return n * n; });
	case 2:
		return theta_sum(N, alt, [](int64_t n) { return n * (n - 1) / 2; });
	case 3:
		return theta_sum(N, alt, [](int64_t n) { return n * (3 * n - 1) / 2; });
	default:
		throw std::invalid_argument("theta_jtp: unknown variant");
	}
}

/* sum over n of (-1)^n q^{A(n)} / (1 - q^{B(n)}), truncated at N. Terms with
 * B(n) < 0 are first rewritten through 1/(1-q^{-b}) = -q^b/(1-q^b); B(n) = 0
 * anywhere in the summation range is rejected. The range includes every n
 * whose canonical leading exponent A(n) (or A(n)+|B(n)|) is <= N; padding the
 * range further cannot change any stored coefficient. */
template <class R = Int, class FA, class FB>
QSeries<R> lambert_sum(int64_t N, FA A, FB B, bool alternating = true)
{
	QSeries<R> r(N);
	auto add_term = [&](int64_t n) -> bool {
		const int64_t a = A(n);
		if (a > N) return false;
		const int64_t b = B(n);
		if (b == 0)
			throw std::invalid_argument("lambert_sum: zero denominator exponent");
		int sgn = (alternating && mod_nonneg(n, 2) == 1) ? -1 : 1;
		int64_t lead = a;
		int64_t step = b;
		if (b < 0) {
			step = -b;
			lead = a + step;
			sgn = -sgn;
		}
		if (lead > N) return false;
		for (int64_t e = lead; e <= N; e += step)
			r.add_term(e, R(Int(sgn)));
		return true;
	};
	for (int64_t n = 0;; ++n)
		if (!add_term(n) && n > 2) break;
	for (int64_t n = -1;; --n)
		if (!add_term(n) && n < -2) break;
	return r;
}

} // namespace qspt

#endif
