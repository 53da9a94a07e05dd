#ifndef QSPT_SPT_HPP
#define QSPT_SPT_HPP

#include "bailey.hpp"
#include "partitions.hpp"
#include "qseries.hpp"
#include "zqseries.hpp"

#include <map>
#include <optional>
#include <string>

namespace qspt {

/* Summation blueprint shared by every spt-crank-type function in the paper:
 *
 *   sum_{n>=1} sign(n) q^{min_exp(n)} A_n(q) / (z q^{mn}, z^{-1} q^{mn}; q^m)_infty
 *
 * with m = qmod and A_n the family's numerator product. The same blueprint is
 * evaluated with z a formal Laurent variable, z = zeta_p, or z = 1, by
 * instantiating the accumulation kernel accordingly. */
struct SumSpec {
	int64_t qmod = 1;
	std::function<int64_t(int64_t)> min_exp;
	std::function<int(int64_t)> sign;
	/* A_n at truncation N. */
	std::function<QSeries<Int>(int64_t, int64_t)> numerator_at;
	/* Factors (c, e), meaning (1 - c q^e), present in A_n but not A_{n+1}. */
	std::function<std::vector<std::pair<int, int64_t>>(int64_t)> step_factors;
};

inline const SumSpec &sum_spec(SptKind kind)
{
	static const std::map<SptKind, SumSpec> specs = [] {
		std::map<SptKind, SumSpec> m;
		auto plus = [](int64_t) { return 1; };

		auto a_num = [](int64_t n, int64_t N) {
			return poch_infinite(qpow(2 * n + 1), 1, N);
		};
		auto a_step = [](int64_t n) {
			return std::vector<std::pair<int, int64_t>>{{1, 2 * n + 1}, {1, 2 * n + 2}};
		};
		auto c_num = [](int64_t n, int64_t N) {
			return poch_infinite(qpow(2 * n + 1), 2, N) *
			       poch_infinite(qpow(n + 1), 1, N);
		};
		auto c_step = [](int64_t n) {
			return std::vector<std::pair<int, int64_t>>{{1, 2 * n + 1}, {1, n + 1}};
		};
		auto e_num = [](int64_t n, int64_t N) {
			return poch_infinite(qpow(2 * n + 2), 2, N);
		};
		auto e_step = [](int64_t n) {
			return std::vector<std::pair<int, int64_t>>{{1, 2 * n + 2}};
		};

		m[SptKind::A1] = {1, [](int64_t n) { return n; }, plus, a_num, a_step};
		m[SptKind::A3] = {1, [](int64_t n) { return 2 * n; }, plus, a_num, a_step};
		m[SptKind::A5] = {1, [](int64_t n) { return n * n + n; }, plus, a_num, a_step};
		m[SptKind::A7] = {1, [](int64_t n) { return n * n; }, plus, a_num, a_step};
		m[SptKind::C1] = {1, [](int64_t n) { return n; }, plus, c_num, c_step};
		m[SptKind::C5] = {1, [](int64_t n) { return (n * n + n) / 2; }, plus, c_num, c_step};
		m[SptKind::E2] = {1, [](int64_t n) { return n; },
		                  [](int64_t n) { return n % 2 == 0 ? 1 : -1; }, e_num, e_step};
		m[SptKind::E4] = {1, [](int64_t n) { return 2 * n; }, plus, e_num, e_step};
		/* S(z,q), the AGL spt-crank. */
		m[SptKind::Plain] = {1, [](int64_t n) { return n; }, plus,
		                     [](int64_t n, int64_t N) {
			                     return poch_infinite(qpow(n + 1), 1, N);
		                     },
		                     [](int64_t n) {
			                     return std::vector<std::pair<int, int64_t>>{{1, n + 1}};
		                     }};
		/* Sbar(z,q), overpartition spt-crank. */
		m[SptKind::Bar] = {1, [](int64_t n) { return n; }, plus,
		                   [](int64_t n, int64_t N) {
			                   return poch_infinite(neg_qpow(n + 1), 1, N) *
			                          poch_infinite(qpow(n + 1), 1, N);
		                   },
		                   [](int64_t n) {
			                   return std::vector<std::pair<int, int64_t>>{
			                       {-1, n + 1}, {1, n + 1}};
		                   }};
		/* S2(z,q), M2spt crank, everything in steps of q^2. */
		m[SptKind::M2] = {2, [](int64_t n) { return 2 * n; }, plus,
		                  [](int64_t n, int64_t N) {
			                  return poch_infinite(neg_qpow(2 * n + 1), 2, N) *
			                         poch_infinite(qpow(2 * n + 2), 2, N);
		                  },
		                  [](int64_t n) {
			                  return std::vector<std::pair<int, int64_t>>{
			                      {-1, 2 * n + 1}, {1, 2 * n + 2}};
		                  }};
		return m;
	}();
	return specs.at(kind);
}

/* P_X(q), the prefactor of the first displayed forms. */
inline QSeries<Int> family_prefactor(SptKind kind, int64_t N)
{
	switch (kind) {
	case SptKind::A1: case SptKind::A3: case SptKind::A5: case SptKind::A7:
	case SptKind::Plain:
		return poch_infinite(qpow(1), 1, N);
	case SptKind::C1: case SptKind::C5:
		return poch_infinite(qpow(1), 2, N) * poch_infinite(qpow(1), 1, N);
	case SptKind::E2: case SptKind::E4:
		return poch_infinite(qpow(2), 2, N);
	case SptKind::Bar:
		return poch_infinite(neg_qpow(1), 1, N) * poch_infinite(qpow(1), 1, N);
	case SptKind::M2:
		return poch_infinite(neg_qpow(1), 2, N) * poch_infinite(qpow(2), 2, N);
	}
	throw std::invalid_argument("family_prefactor: unknown kind");
}

/* The Bailey pair a family's first form sums over (the eight named pairs). */
inline const BaileyPair &family_pair(SptKind kind)
{
	switch (kind) {
	case SptKind::A1: return bailey_lookup("A1");
	case SptKind::A3: return bailey_lookup("A3");
	case SptKind::A5: return bailey_lookup("A5");
	case SptKind::A7: return bailey_lookup("A7");
	case SptKind::C1: return bailey_lookup("C1");
	case SptKind::C5: return bailey_lookup("C5");
	case SptKind::E2: return bailey_lookup("E2");
	case SptKind::E4: return bailey_lookup("E4");
	default:
		throw std::invalid_argument("family_pair: kind has no registered pair");
	}
}

namespace detail {

/* Horner pass over nested kernels: accumulates
 *   sum_{n>=1} sign(n) q^{e(n)} A_n prod_{j>=n} 1/((1-z q^{mj})(1-z^{-1} q^{mj}))
 * via V <- G_n (V + P_n) for n ascending. */
template <class Accum>
void accumulate_crank_sum(Accum &acc, const SumSpec &f, int64_t N)
{
	const int64_t J = N / f.qmod;
	QSeries<Int> A = f.numerator_at(1, N);
	for (int64_t n = 1; n <= J; ++n) {
		if (f.min_exp(n) <= N)
			acc.add_scalar(f.min_exp(n), A, f.sign(n));
		acc.divide_one_minus(+1, f.qmod * n);
		acc.divide_one_minus(-1, f.qmod * n);
		for (const auto &[c, e] : f.step_factors(n))
			A.div_one_minus(Int(c), e);
	}
}

/* Horner pass over cleared kernels: accumulates
 *   sum_{n>=1} sign(n) q^{e(n)} A_n (z, z^{-1}; q^m)_n,
 * i.e. (z,z^{-1};q^m)_infty times the kernel sum above. */
template <class Accum>
void accumulate_cleared_sum(Accum &acc, const SumSpec &f, int64_t N)
{
	int64_t top = 0;
	while (f.min_exp(top + 1) <= N) ++top;
	if (top == 0) return; // the sum starts at n = 1 and is 0 to this order
	QSeries<Int> A = f.numerator_at(top, N);
	for (int64_t n = top;; --n) {
		acc.add_scalar(f.min_exp(n), A, f.sign(n));
		acc.multiply_one_minus(+1, f.qmod * (n - 1));
		acc.multiply_one_minus(-1, f.qmod * (n - 1));
		if (n == 1) break;
		for (const auto &[c, e] : f.step_factors(n - 1))
			A.mul_one_minus(Int(c), e);
	}
}

} // namespace detail

/* S_X(z,q) from the second displayed forms (the production path). */
inline ZQSeries spt_crank_series(SptKind X, int64_t N)
{
	detail::BivarAccum acc(N);
	detail::accumulate_crank_sum(acc, sum_spec(X), N);
	return acc.to_series();
}

/* S_X(zeta_p, q) evaluated at the root during construction. */
inline QSeries<CycInt> spt_crank_root_series(SptKind X, int p, int64_t N)
{
	detail::RootAccum acc(p, N);
	detail::accumulate_crank_sum(acc, sum_spec(X), N);
	return acc.to_series();
}

/* S_X(q) = S_X(1,q) as a one-variable construction (never via eval of the
 * bivariate series; that equality is a test). */
inline QSeries<Int> spt_series(SptKind X, int64_t N)
{
	detail::ScalarAccum acc(N);
	detail::accumulate_crank_sum(acc, sum_spec(X), N);
	return acc.to_series();
}

/* (z, z^{-1}; q^m)_infty S_X(z,q): the infinite kernels cancel against the
 * cleared product, leaving finite Pochhammers. The agreement of this object
 * with zpoch_pair_infinite * spt_crank_series is asserted in the test suite. */
inline ZQSeries cleared_crank_series(SptKind X, int64_t N)
{
	detail::BivarAccum acc(N);
	detail::accumulate_cleared_sum(acc, sum_spec(X), N);
	return acc.to_series();
}

/* The literal z = 1 displayed forms, term by term, exactly as printed:
 * e.g. S_A1(q) = sum q^n / ((1-q^n)^2 (q^{n+1};q)_infty (q^{n+1};q)_n) or
 * S_E4(q) = sum q^{2n} (-q^{n+1};q)_infty / ((1-q^n)^2 (q^{n+1};q)_infty).
 * Used as an independent oracle against the production builder. */
inline QSeries<Int> spt_series_literal(SptKind X, int64_t N)
{
	const SumSpec &f = sum_spec(X);
	QSeries<Int> total(N);
	for (int64_t n = 1; f.min_exp(n) <= N; ++n) {
		QSeries<Int> t = QSeries<Int>::one(N);
		switch (X) {
		case SptKind::A1: case SptKind::A3: case SptKind::A5: case SptKind::A7:
			t.div_one_minus(Int(1), n);
			t.div_one_minus(Int(1), n);
			for (int64_t j = n + 1; j <= N; ++j) t.div_one_minus(Int(1), j);
			for (int64_t j = n + 1; j <= 2 * n; ++j) t.div_one_minus(Int(1), j);
			break;
		case SptKind::C1: case SptKind::C5:
			t.div_one_minus(Int(1), n);
			t.div_one_minus(Int(1), n);
			for (int64_t j = n + 1; j <= 2 * n; ++j) t.div_one_minus(Int(1), j);
			for (int64_t j = 2 * n + 2; j <= N; j += 2) t.div_one_minus(Int(1), j);
			break;
		case SptKind::E2: case SptKind::E4:
			t = poch_infinite(neg_qpow(n + 1), 1, N);
			t.div_one_minus(Int(1), n);
			t.div_one_minus(Int(1), n);
			for (int64_t j = n + 1; j <= N; ++j) t.div_one_minus(Int(1), j);
			break;
		case SptKind::Plain:
			t.div_one_minus(Int(1), n);
			t.div_one_minus(Int(1), n);
			for (int64_t j = n + 1; j <= N; ++j) t.div_one_minus(Int(1), j);
			break;
		case SptKind::Bar:
			t = poch_infinite(neg_qpow(n + 1), 1, N);
			t.div_one_minus(Int(1), n);
			t.div_one_minus(Int(1), n);
			for (int64_t j = n + 1; j <= N; ++j) t.div_one_minus(Int(1), j);
			break;
		case SptKind::M2:
			t = poch_infinite(neg_qpow(2 * n + 1), 2, N);
			t.div_one_minus(Int(1), 2 * n);
			t.div_one_minus(Int(1), 2 * n);
			for (int64_t j = 2 * n + 2; j <= N; j += 2) t.div_one_minus(Int(1), j);
			break;
		}
		t.shift_up(f.min_exp(n));
		if (f.sign(n) < 0) t.scale(Int(-1));
		total += t;
	}
	return total;
}

/* ----- rank and crank generating functions (section 5 forms) ----- */

namespace detail {

/* (1-z)(1-z^{-1}) poly(q) / ((1-z q^{kn})(1-z^{-1} q^{kn})) as a ZQSeries. */
inline ZQSeries appell_term(const QSeries<Int> &poly, int64_t kernel_e, int64_t N)
{
	BivarAccum acc(N);
	acc.add_scalar(0, poly, 1);
	acc.multiply_one_minus(+1, 0);
	acc.multiply_one_minus(-1, 0);
	acc.divide_one_minus(+1, kernel_e);
	acc.divide_one_minus(-1, kernel_e);
	return acc.to_series();
}

} // namespace detail

/* R(z,q), Watson's form: the q^{n(3n+1)/2}(1+q^n) Appell-Lerch sum divided by
 * (q;q)_infty. */
inline ZQSeries rank_series(int64_t N)
{
	ZQSeries sum = ZQSeries::one(N);
	for (int64_t n = 1; n * (3 * n + 1) / 2 <= N; ++n) {
		QSeries<Int> poly(N);
		poly.add_term(n * (3 * n + 1) / 2, Int(n % 2 == 0 ? 1 : -1));
		poly.add_term(n * (3 * n + 1) / 2 + n, Int(n % 2 == 0 ? 1 : -1));
		sum += detail::appell_term(poly, n, N);
	}
	sum.mul_scalar_series(poch_infinite(qpow(1), 1, N).invert());
	return sum;
}

/* C(z,q) = (q;q)_infty / (zq, z^{-1}q; q)_infty. */
inline ZQSeries crank_series(int64_t N)
{
	detail::BivarAccum acc(N);
	acc.add_unit();
	for (int64_t j = 1; j <= N; ++j) {
		acc.divide_one_minus(+1, j);
		acc.divide_one_minus(-1, j);
	}
	ZQSeries r = acc.to_series();
	r.mul_scalar_series(poch_infinite(qpow(1), 1, N));
	return r;
}

/* R_1(z,q): prefactor (-q;q)_infty/(q;q)_infty, terms 2(-1)^n q^n. */
inline ZQSeries r1_series(int64_t N)
{
	ZQSeries sum = ZQSeries::one(N);
	for (int64_t n = 1; n <= N; ++n) {
		QSeries<Int> poly(N);
		poly.add_term(n, Int(n % 2 == 0 ? 2 : -2));
		sum += detail::appell_term(poly, n, N);
	}
	sum.mul_scalar_series(poch_infinite(neg_qpow(1), 1, N));
	sum.mul_scalar_series(poch_infinite(qpow(1), 1, N).invert());
	return sum;
}

/* R_2(z,q): terms (-1)^n q^{n^2}(1+q^{2n}). */
inline ZQSeries r2_series(int64_t N)
{
	ZQSeries sum = ZQSeries::one(N);
	for (int64_t n = 1; n * n <= N; ++n) {
		QSeries<Int> poly(N);
		poly.add_term(n * n, Int(n % 2 == 0 ? 1 : -1));
		poly.add_term(n * n + 2 * n, Int(n % 2 == 0 ? 1 : -1));
		sum += detail::appell_term(poly, n, N);
	}
	sum.mul_scalar_series(poch_infinite(neg_qpow(1), 1, N));
	sum.mul_scalar_series(poch_infinite(qpow(1), 1, N).invert());
	return sum;
}

/* Dyson rank of overpartitions: terms 2(-1)^n q^{n^2+n}. */
inline ZQSeries overline_rank_series(int64_t N)
{
	ZQSeries sum = ZQSeries::one(N);
	for (int64_t n = 1; n * n + n <= N; ++n) {
		QSeries<Int> poly(N);
		poly.add_term(n * n + n, Int(n % 2 == 0 ? 2 : -2));
		sum += detail::appell_term(poly, n, N);
	}
	sum.mul_scalar_series(poch_infinite(neg_qpow(1), 1, N));
	sum.mul_scalar_series(poch_infinite(qpow(1), 1, N).invert());
	return sum;
}

enum class ResidualCrank { Overpartition, Odd };

/* (-q;q)_infty C(z,q) and (q;q^2)_infty C(z,q). */
inline ZQSeries residual_crank_series(ResidualCrank kind, int64_t N)
{
	ZQSeries c = crank_series(N);
	if (kind == ResidualCrank::Overpartition)
		c.mul_scalar_series(poch_infinite(neg_qpow(1), 1, N));
	else
		c.mul_scalar_series(poch_infinite(qpow(1), 2, N));
	return c;
}

/* ----- caches ----- */

/* Write-once caches keyed by (kind, order); congruence scans and the identity
 * registry reuse one evaluation per key. */
class SeriesCache {
public:
	static SeriesCache &instance()
	{
		static SeriesCache c;
		return c;
	}

	const ZQSeries &crank(SptKind X, int64_t N)
	{
		auto key = std::make_pair(X, N);
		auto it = crank_.find(key);
		if (it == crank_.end())
			it = crank_.emplace(key, spt_crank_series(X, N)).first;
		return it->second;
	}

	const ZQSeries &cleared(SptKind X, int64_t N)
	{
		auto key = std::make_pair(X, N);
		auto it = cleared_.find(key);
		if (it == cleared_.end())
			it = cleared_.emplace(key, cleared_crank_series(X, N)).first;
		return it->second;
	}

	const QSeries<Int> &spt(SptKind X, int64_t N)
	{
		auto key = std::make_pair(X, N);
		auto it = spt_.find(key);
		if (it == spt_.end()) it = spt_.emplace(key, spt_series(X, N)).first;
		return it->second;
	}

	const QSeries<CycInt> &crank_root(SptKind X, int p, int64_t N)
	{
		auto key = std::make_tuple(X, p, N);
		auto it = root_.find(key);
		if (it == root_.end())
			it = root_.emplace(key, spt_crank_root_series(X, p, N)).first;
		return it->second;
	}

	void clear()
	{
		crank_.clear();
		cleared_.clear();
		spt_.clear();
		root_.clear();
	}

private:
	std::map<std::pair<SptKind, int64_t>, ZQSeries> crank_;
	std::map<std::pair<SptKind, int64_t>, ZQSeries> cleared_;
	std::map<std::pair<SptKind, int64_t>, QSeries<Int>> spt_;
	std::map<std::tuple<SptKind, int, int64_t>, QSeries<CycInt>> root_;
};

/* ----- M_X extraction and congruence machinery ----- */

inline Int m_coeff(SptKind X, int64_t m, int64_t n, int64_t N)
{
	if (n > N) throw std::out_of_range("m_coeff: n exceeds cached order");
	return SeriesCache::instance().crank(X, N).extract(m, n);
}

/* M_X(k,t,n) = sum_{m == k mod t} M_X(m,n). */
inline Int m_residue(SptKind X, int64_t k, int64_t t, int64_t n, int64_t N)
{
	if (n > N) throw std::out_of_range("m_residue: n exceeds cached order");
	const ZLaurentPoly &row = SeriesCache::instance().crank(X, N).coeff(n);
	Int s = 0;
	for (const auto &[m, v] : row.terms())
		if (mod_nonneg(m - k, t) == 0) s += v;
	return s;
}

struct CongruenceCase {
	SptKind family;
	int64_t modulus;
	int64_t residue;
};

/* Theorem 1's ten congruences, with the corrected A3/C1 residues. */
inline const std::vector<CongruenceCase> &congruence_registry()
{
	static const std::vector<CongruenceCase> cases = {
	    {SptKind::A1, 3, 0}, {SptKind::A3, 3, 1}, {SptKind::A3, 5, 1},
	    {SptKind::A5, 5, 4}, {SptKind::A5, 7, 1}, {SptKind::A7, 5, 4},
	    {SptKind::C1, 5, 3}, {SptKind::C5, 5, 3}, {SptKind::E2, 3, 0},
	    {SptKind::E4, 3, 1}};
	return cases;
}

struct CongruenceReport {
	bool series_pass = true;
	int64_t series_witness = -1; // first failing n, if any
	bool root_checked = false;
	bool root_pass = true;
	int64_t root_witness = -1;
	int64_t n_max = 0;
	int64_t cases_checked = 0;
};

/* Verdict (i): spt_X(n) == 0 mod t along the progression, from the
 * one-variable series. Verdict (ii): the q^n coefficient of S_X(zeta_t, q)
 * vanishes, which forces all residue classes M_X(k,t,n) equal. Verdict (ii)
 * is only available for t in {3,5,7}. */
inline CongruenceReport congruence_check(SptKind X, int64_t t, int64_t r,
                                         int64_t n_max)
{
	CongruenceReport rep;
	rep.n_max = n_max;
	const QSeries<Int> &s = SeriesCache::instance().spt(X, n_max);
	for (int64_t n = mod_nonneg(r, t); n <= n_max; n += t) {
		++rep.cases_checked;
		if (s.coeff(n) % t != 0) {
			rep.series_pass = false;
			if (rep.series_witness < 0) rep.series_witness = n;
		}
	}
	if (t == 3 || t == 5 || t == 7) {
		rep.root_checked = true;
		const QSeries<CycInt> &z =
		    SeriesCache::instance().crank_root(X, static_cast<int>(t), n_max);
		for (int64_t n = mod_nonneg(r, t); n <= n_max; n += t) {
			if (!z.coeff(n).is_zero()) {
				rep.root_pass = false;
				if (rep.root_witness < 0) rep.root_witness = n;
			}
		}
	}
	return rep;
}

/* First n <= N with n == r (mod t) whose S_X(zeta_t, q) coefficient does not
 * vanish, or -1 when the whole progression vanishes. */
inline int64_t first_nonvanishing(SptKind X, int p, int64_t r, int64_t N)
{
	const QSeries<CycInt> &z = SeriesCache::instance().crank_root(X, p, N);
	for (int64_t n = mod_nonneg(r, p); n <= N; n += p)
		if (!z.coeff(n).is_zero()) return n;
	return -1;
}

struct NegativeEntry {
	int64_t m;
	int64_t n;
	Int value;
};

/* Scans M_X(m,n) for negative entries, n <= n_max. */
inline std::vector<NegativeEntry> scan_negative(SptKind X, int64_t n_max)
{
	std::vector<NegativeEntry> out;
	const ZQSeries &s = SeriesCache::instance().crank(X, n_max);
	for (int64_t n = 0; n <= n_max; ++n)
		for (const auto &[m, v] : s.coeff(n).terms())
			if (v < 0) out.push_back({m, n, v});
	return out;
}

} // namespace qspt

#endif
