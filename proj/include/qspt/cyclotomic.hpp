#ifndef QSPT_CYCLOTOMIC_HPP
#define QSPT_CYCLOTOMIC_HPP

#include "int_types.hpp"

#include <ostream>
#include <sstream>
#include <vector>

namespace qspt {

/* An element of Z[zeta_p] for prime p in {3,5,7}, stored in the power basis
 * zeta^0..zeta^{p-2} and kept reduced via zeta^{p-1} = -(1+zeta+...+zeta^{p-2}).
 * Since 1+x+...+x^{p-1} is the minimal polynomial of zeta_p, this form is
 * canonical and an element is zero exactly when all basis coefficients are.
 *
 * Elements with order 0 represent plain rational integers; they embed into any
 * Z[zeta_p] and binary operations promote them to the other operand's order.
 * This keeps value-initialized CycInt() usable as a universal zero. */
class CycInt {
public:
	CycInt() : p_(0), c_(1) {}

	explicit CycInt(Int v) : p_(0), c_(1) { c_[0] = std::move(v); }

	explicit CycInt(long v) : p_(0), c_(1) { c_[0] = v; }

	CycInt(int order, std::vector<Int> coeffs) : p_(order), c_(std::move(coeffs))
	{
		check_order(order);
		if (c_.size() != basis_size())
			throw std::invalid_argument("CycInt: coefficient count must be p-1");
	}

	/* zeta_p^k, any integer k. */
	static CycInt zeta_pow(int p, int64_t k)
	{
		check_order(p);
		CycInt r;
		r.p_ = p;
		r.c_.assign(p - 1, Int(0));
		int64_t e = mod_nonneg(k, p);
		if (e == p - 1) {
			for (auto &ci : r.c_) ci = -1;
		} else {
			r.c_[static_cast<size_t>(e)] = 1;
		}
		return r;
	}

	static CycInt zero_of(int p)
	{
		check_order(p);
		CycInt r;
		r.p_ = p;
		r.c_.assign(p - 1, Int(0));
		return r;
	}

	int order() const { return p_; }

	bool is_integer() const { return p_ == 0; }

	bool is_zero() const
	{
		for (const auto &v : c_)
			if (v != 0) return false;
		return true;
	}

	/* Basis coefficient of zeta^i (for order 0, i must be 0). */
	const Int &coeff(size_t i) const { return c_.at(i); }

	const std::vector<Int> &coeffs() const { return c_; }

	friend bool operator==(const CycInt &a, const CycInt &b)
	{
		if (a.p_ == b.p_) return a.c_ == b.c_;
		if (a.p_ == 0) return promoted(a, b.p_).c_ == b.c_;
		if (b.p_ == 0) return a.c_ == promoted(b, a.p_).c_;
		return false;
	}

	friend bool operator!=(const CycInt &a, const CycInt &b) { return !(a == b); }

	CycInt operator-() const
	{
		CycInt r = *this;
		for (auto &v : r.c_) v = -v;
		return r;
	}

	CycInt &operator+=(const CycInt &b)
	{
		align_with(b);
		if (b.p_ == 0) {
			c_[0] += b.c_[0];
		} else {
			for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
		}
		return *this;
	}

	CycInt &operator-=(const CycInt &b)
	{
		align_with(b);
		if (b.p_ == 0) {
			c_[0] -= b.c_[0];
		} else {
			for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
		}
		return *this;
	}

	friend CycInt operator+(CycInt a, const CycInt &b) { a += b; return a; }
	friend CycInt operator-(CycInt a, const CycInt &b) { a -= b; return a; }

	friend CycInt operator*(const CycInt &a, const CycInt &b)
	{
		if (a.p_ == 0 && b.p_ == 0) return CycInt(a.c_[0] * b.c_[0]);
		if (a.p_ == 0) return scaled(b, a.c_[0]);
		if (b.p_ == 0) return scaled(a, b.c_[0]);
		if (a.p_ != b.p_)
			throw std::invalid_argument("CycInt: order mismatch");

		/* Schoolbook product of degree <= p-2 polynomials, then one pass of
		 * zeta^{p-1+j} = -(zeta^j + zeta^{j+1} + ... + zeta^{j+p-2}). */
		const int p = a.p_;
		const size_t m = static_cast<size_t>(p - 1);
		std::vector<Int> prod(2 * m - 1);
		for (size_t i = 0; i < m; ++i) {
			if (a.c_[i] == 0) continue;
			for (size_t j = 0; j < m; ++j) {
				if (b.c_[j] == 0) continue;
				prod[i + j] += a.c_[i] * b.c_[j];
			}
		}
		CycInt r = zero_of(p);
		for (size_t i = 0; i < m; ++i) r.c_[i] = prod[i];
		for (size_t d = m; d < prod.size(); ++d) {
			if (prod[d] == 0) continue;
			/* zeta^d with d = (p-1) + (d-m): rotate via zeta^p = 1 first. */
			size_t e = d % static_cast<size_t>(p);
			if (e == m) {
				for (size_t i = 0; i < m; ++i) r.c_[i] -= prod[d];
			} else {
				r.c_[e] += prod[d];
			}
		}
		return r;
	}

	CycInt &operator*=(const CycInt &b) { *this = *this * b; return *this; }

	/* dst += zeta^k * src, fused to avoid temporaries in series kernels. */
	void add_zeta_mul(const CycInt &src, int64_t k)
	{
		if (src.is_zero()) return;
		const int p = p_ != 0 ? p_ : src.p_;
		if (p == 0)
			throw std::invalid_argument("CycInt: zeta power needs an order");
		if (src.p_ == 0) {
			*this += zeta_pow(p, k) * src;
			return;
		}
		align_with(src);
		const size_t m = static_cast<size_t>(p - 1);
		const size_t e = static_cast<size_t>(mod_nonneg(k, p));
		for (size_t i = 0; i < m; ++i) {
			if (src.c_[i] == 0) continue;
			size_t d = (i + e) % static_cast<size_t>(p);
			if (d == m) {
				for (size_t j = 0; j < m; ++j) c_[j] -= src.c_[i];
			} else {
				c_[d] += src.c_[i];
			}
		}
	}

	/* Exact inverse when the element is a unit of Z[zeta_p]; rejects otherwise.
	 * Solves M x = e_0 by integer Cramer, where M is the multiplication-by-a
	 * matrix in the power basis; a unit is exactly an integrally solvable M. */
	CycInt inverse() const
	{
		if (p_ == 0) {
			if (c_[0] == 1 || c_[0] == -1) return *this;
			throw std::domain_error("CycInt: integer is not a unit");
		}
		const size_t m = basis_size();
		std::vector<std::vector<Int>> M(m, std::vector<Int>(m));
		for (size_t j = 0; j < m; ++j) {
			CycInt col = *this * zeta_pow(p_, static_cast<int64_t>(j));
			for (size_t i = 0; i < m; ++i) M[i][j] = col.c_[i];
		}
		Int det = determinant(M);
		if (det == 0) throw std::domain_error("CycInt: not invertible");
		CycInt r = zero_of(p_);
		for (size_t j = 0; j < m; ++j) {
			auto Mj = M;
			for (size_t i = 0; i < m; ++i) Mj[i][j] = (i == 0) ? Int(1) : Int(0);
			Int num = determinant(Mj);
			if (num % det != 0)
				throw std::domain_error("CycInt: not a unit in Z[zeta_p]");
			r.c_[j] = num / det;
		}
		return r;
	}

	std::string str() const
	{
		std::ostringstream os;
		os << *this;
		return os.str();
	}

	friend std::ostream &operator<<(std::ostream &os, const CycInt &v)
	{
		if (v.p_ == 0) return os << v.c_[0];
		os << "[";
		for (size_t i = 0; i < v.c_.size(); ++i)
			os << (i ? "," : "") << v.c_[i];
		return os << "]_z" << v.p_;
	}

private:
	static void check_order(int p)
	{
		if (p != 3 && p != 5 && p != 7)
			throw std::invalid_argument("CycInt: order must be 3, 5 or 7");
	}

	size_t basis_size() const { return p_ == 0 ? 1 : static_cast<size_t>(p_ - 1); }

	static CycInt promoted(const CycInt &a, int p)
	{
		CycInt r = zero_of(p);
		r.c_[0] = a.c_[0];
		return r;
	}

	static CycInt scaled(const CycInt &a, const Int &s)
	{
		CycInt r = a;
		for (auto &v : r.c_) v *= s;
		return r;
	}

	void align_with(const CycInt &b)
	{
		if (p_ == 0 && b.p_ != 0) *this = promoted(*this, b.p_);
		else if (p_ != 0 && b.p_ != 0 && p_ != b.p_)
			throw std::invalid_argument("CycInt: order mismatch");
	}

	static Int determinant(std::vector<std::vector<Int>> a)
	{
		/* Fraction-free Gaussian elimination (Bareiss); dimensions <= 6. */
		const size_t n = a.size();
		Int prev(1);
		int sign = 1;
		for (size_t k = 0; k + 1 < n; ++k) {
			if (a[k][k] == 0) {
				size_t s = k + 1;
				while (s < n && a[s][k] == 0) ++s;
				if (s == n) return Int(0);
				std::swap(a[k], a[s]);
				sign = -sign;
			}
			for (size_t i = k + 1; i < n; ++i)
				for (size_t j = k + 1; j < n; ++j)
					a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
			prev = a[k][k];
		}
		return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
	}

	int p_;
	std::vector<Int> c_;
};

} // namespace qspt

#endif
