#ifndef QSPT_IDENTITIES_HPP
#define QSPT_IDENTITIES_HPP

#include "spt.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace qspt {

struct CaseResult {
	bool pass = true;
	int64_t first_mismatch = -1;
	std::string note;
};

struct VerifyReport {
	std::string id;
	std::string description;
	bool pass = false;
	int64_t order = 0;
	int64_t first_mismatch = -1;
	double millis = 0.0;
	std::string note;
};

struct IdentityCase {
	std::string id;
	std::string description;
	int64_t default_order;
	std::function<CaseResult(int64_t)> run;
};

namespace detail_id {

inline CaseResult from_zq(const ZQSeries &lhs, const ZQSeries &rhs)
{
	CaseResult r;
	const int64_t fm = first_mismatch(lhs, rhs);
	r.pass = fm < 0;
	r.first_mismatch = fm;
	return r;
}

template <class R>
CaseResult from_q(const QSeries<R> &lhs, const QSeries<R> &rhs)
{
	CaseResult r;
	const int64_t fm = first_mismatch(lhs, rhs);
	r.pass = fm < 0;
	r.first_mismatch = fm;
	return r;
}

/* Equality plus the arithmetic-progression vanishing the dissection is read
 * off from (coefficients of q^{tn+res} must vanish identically). */
inline CaseResult with_vanishing(CaseResult eq, const QSeries<CycInt> &series,
                                 int64_t t, int64_t res)
{
	if (!eq.pass) return eq;
	for (int64_t n = mod_nonneg(res, t); n <= series.order(); n += t) {
		if (!series.coeff(n).is_zero()) {
			eq.pass = false;
			eq.first_mismatch = n;
			eq.note = "progression coefficient q^" + std::to_string(n) +
			          " fails to vanish";
			return eq;
		}
	}
	eq.note = "dissection + vanishing";
	return eq;
}

inline ZLaurentPoly one_plus_z()
{
	ZLaurentPoly p = ZLaurentPoly::constant(Int(1));
	p.add_term(1, Int(1));
	return p;
}

inline ZLaurentPoly clearing_weight() // (1-z)(1-z^{-1}) = 2 - z - z^{-1}
{
	ZLaurentPoly p = ZLaurentPoly::constant(Int(2));
	p.add_term(1, Int(-1));
	p.add_term(-1, Int(-1));
	return p;
}

/* (1-z^a)(1-z^b), zero when either exponent is zero. */
inline ZLaurentPoly weight_pair(int64_t a, int64_t b)
{
	ZLaurentPoly p = ZLaurentPoly::constant(Int(1));
	p.add_term(a, Int(-1));
	p.add_term(b, Int(-1));
	p.add_term(a + b, Int(1));
	return p;
}

inline void add_weighted(ZQSeries &acc, const ZLaurentPoly &w, int sign,
                         int64_t e)
{
	if (e < 0 || e > acc.order() || w.is_zero()) return;
	for (const auto &[m, v] : w.terms())
		acc.coeff_ref(e).add_term(m, sign > 0 ? v : -v);
}

/* Theorem 2 / Proposition 3.1 inner q-series for family X at weight index k:
 *   A1: (-1)^{k+1} q^{k(k-1)/2} + sum_{n>=1} (-1)^{n+k+1} q^{..+n(n-3)/2+2kn}(1+q^n)
 *   A3: sum_{n>=0} (-1)^{n+k+1} q^{k(k+1)/2+n(n-3)/2+2kn-1} (1-q^{2n+1})
 *   C1: sum_{n>=0} (-1)^{k+1} q^{k(k-1)/2+n(3n-1)/2+3kn} (1-q^{2k-1})(1-q^{k+n})
 *   E4: sum_{n>=0} (-1)^{k+n+1} q^{k(k+1)/2+n^2-n+2kn-1} (1-q^{2n+1})
 * accumulated with a caller-provided z weight. */
inline void add_inner_sum(ZQSeries &acc, SptKind X, int64_t k,
                          const ZLaurentPoly &w)
{
	const int64_t N = acc.order();
	auto sgn = [](int64_t v) { return v % 2 == 0 ? 1 : -1; };
	switch (X) {
	case SptKind::A1: {
		const int64_t base = k * (k - 1) / 2;
		add_weighted(acc, w, sgn(k + 1), base);
		for (int64_t n = 1;; ++n) {
			const int64_t e = base + n * (n - 3) / 2 + 2 * k * n;
			if (e > N && n > 3) break;
			add_weighted(acc, w, sgn(n + k + 1), e);
			add_weighted(acc, w, sgn(n + k + 1), e + n);
		}
		return;
	}
	case SptKind::A3: {
		for (int64_t n = 0;; ++n) {
			const int64_t e = k * (k + 1) / 2 + n * (n - 3) / 2 + 2 * k * n - 1;
			if (e > N && n > 3) break;
			add_weighted(acc, w, sgn(n + k + 1), e);
			add_weighted(acc, w, sgn(n + k), e + 2 * n + 1);
		}
		return;
	}
	case SptKind::C1: {
		for (int64_t n = 0;; ++n) {
			const int64_t e = k * (k - 1) / 2 + n * (3 * n - 1) / 2 + 3 * k * n;
			if (e > N) break;
			/* (1-q^{2k-1})(1-q^{k+n}) expanded into four monomials. */
			add_weighted(acc, w, sgn(k + 1), e);
			add_weighted(acc, w, sgn(k), e + 2 * k - 1);
			add_weighted(acc, w, sgn(k), e + k + n);
			add_weighted(acc, w, sgn(k + 1), e + 3 * k + n - 1);
		}
		return;
	}
	case SptKind::E4: {
		for (int64_t n = 0;; ++n) {
			const int64_t e = k * (k + 1) / 2 + n * n - n + 2 * k * n - 1;
			if (e > N && n > 2) break;
			add_weighted(acc, w, sgn(k + n + 1), e);
			add_weighted(acc, w, sgn(k + n), e + 2 * n + 1);
		}
		return;
	}
	default:
		throw std::invalid_argument("add_inner_sum: no double series for family");
	}
}

inline int64_t inner_min_exponent(SptKind X, int64_t k)
{
	switch (X) {
	case SptKind::A1: return k * (k - 1) / 2;
	case SptKind::A3: return k * (k + 1) / 2 - 1; // n = 0 term
	case SptKind::C1: return k * (k - 1) / 2;
	case SptKind::E4: return k * (k + 1) / 2 - 1;
	default: return 0;
	}
}

/* Theorem 2 right-hand sides. */
inline ZQSeries thm2_rhs(SptKind X, int64_t N)
{
	ZQSeries acc(N);
	switch (X) {
	case SptKind::A1: case SptKind::A3: case SptKind::C1: case SptKind::E4: {
		for (int64_t k = 1;; ++k) {
			if (inner_min_exponent(X, k) > N && k > 2) break;
			add_inner_sum(acc, X, k, ZLaurentPoly::crank_weight(k));
		}
		acc.mul_scalar_series(poch_infinite(qpow(1), 1, N).invert());
		return acc;
	}
	case SptKind::A5: case SptKind::A7: {
		const int64_t s = (X == SptKind::A5) ? 1 : -1;
		for (int64_t k = -N;; ++k) {
			const int64_t e = k * (3 * k + s) / 2;
			if (e > N && k > 2) break;
			if (e > N) continue;
			/* (1-z^k)(1-z^{k+1}) z^{-k} = z^{-k} - 1 - z + z^{k+1} */
			ZLaurentPoly w = weight_pair(k, k + 1).shifted(-k);
			add_weighted(acc, w, k % 2 == 0 ? 1 : -1, e);
		}
		return acc;
	}
	case SptKind::C5: {
		for (int64_t k = -N;; ++k) {
			const int64_t e = k * k;
			if (e > N && k > 2) break;
			if (e > N) continue;
			add_weighted(acc, ZLaurentPoly::crank_weight(k),
			             k % 2 == 0 ? 1 : -1, e);
		}
		return acc;
	}
	case SptKind::E2: {
		for (int64_t k = 1; k * (k - 1) / 2 <= N; ++k)
			add_weighted(acc, ZLaurentPoly::crank_weight(k), 1, k * (k - 1) / 2);
		acc.mul_scalar_series(poch_infinite(qpow(1), 2, N));
		return acc;
	}
	default:
		throw std::invalid_argument("thm2_rhs: not a family");
	}
}

/* Hecke-Rogers double sums of Corollary 3. */
inline ZQSeries cor3_rhs(SptKind X, int64_t N)
{
	ZQSeries acc(N);
	auto sgn = [](int64_t v) { return mod_nonneg(v, 2) == 0 ? 1 : -1; };
	const int64_t kmax = 4 + static_cast<int64_t>(std::sqrt(double(8 * N + 64)));
	switch (X) {
	case SptKind::A1:
		for (int64_t k = 0; k <= kmax; ++k)
			for (int64_t n = -(k / 2); n <= k / 2; ++n) {
				const int64_t an = n < 0 ? -n : n;
				ZLaurentPoly w = weight_pair(k - 2 * an, 2 * an - k + 1);
				if (w.is_zero()) continue;
				const int64_t e = (k * k - k - 3 * n * n - n) / 2;
				add_weighted(acc, w, sgn(n + k), e);
			}
		return acc;
	case SptKind::A3:
		for (int64_t k = 1; k <= kmax; ++k) {
			for (int64_t n = 1; n <= k / 2; ++n) {
				ZLaurentPoly w = weight_pair(k - 2 * n + 1, 2 * n - k);
				if (w.is_zero()) continue;
				add_weighted(acc, w, sgn(n + k), (k * k - k - 3 * n * n + n) / 2);
			}
			for (int64_t n = 0; n <= k / 2; ++n) {
				ZLaurentPoly w = weight_pair(k - 2 * n, 2 * n - k + 1);
				if (w.is_zero()) continue;
				add_weighted(acc, w, -sgn(n + k), (k * k + k - 3 * n * n - n) / 2);
			}
		}
		return acc;
	case SptKind::C1:
		for (int64_t k = 1; k <= kmax; ++k) {
			for (int64_t n = 0; n <= k / 3; ++n) {
				ZLaurentPoly w = weight_pair(3 * n - k + 1, k - 3 * n);
				if (w.is_zero()) continue;
				add_weighted(acc, w, sgn(n + k), (k * k - k) / 2 - 3 * n * n + n);
				add_weighted(acc, w, -sgn(n + k), (k * k + k) / 2 - 3 * n * n - n);
			}
			for (int64_t n = 1; n <= k / 3; ++n) {
				ZLaurentPoly w = weight_pair(3 * n - k, k - 3 * n + 1);
				if (w.is_zero()) continue;
				add_weighted(acc, w, sgn(n + k), (k * k - k) / 2 - 3 * n * n + n);
				add_weighted(acc, w, -sgn(n + k), (k * k + k) / 2 - 3 * n * n - n);
			}
		}
		return acc;
	case SptKind::E4:
		for (int64_t k = 1; k <= kmax; ++k) {
			for (int64_t n = 1; n <= k / 2; ++n) {
				ZLaurentPoly w = weight_pair(2 * n - k, k - 2 * n + 1);
				if (w.is_zero()) continue;
				add_weighted(acc, w, sgn(n + k), (k * k - k) / 2 - n * n);
			}
			for (int64_t n = 0; n <= k / 2; ++n) {
				ZLaurentPoly w = weight_pair(2 * n - k + 1, k - 2 * n);
				if (w.is_zero()) continue;
				add_weighted(acc, w, -sgn(n + k), (k * k + k) / 2 - n * n);
			}
		}
		return acc;
	default:
		throw std::invalid_argument("cor3_rhs: no Hecke-Rogers form");
	}
}

/* Corollary 6 right-hand sides (one-variable images of the double sums). */
inline QSeries<Int> cor6_rhs(int which, int64_t N)
{
	QSeries<Int> acc(N);
	auto sgn = [](int64_t v) { return mod_nonneg(v, 2) == 0 ? 1 : -1; };
	auto add = [&](int64_t e, int s) {
		if (e >= 0 && e <= N) acc.add_term(e, Int(s));
	};
	const int64_t kmax = 4 + static_cast<int64_t>(std::sqrt(double(8 * N + 64)));
	switch (which) {
	case 1:
		for (int64_t k = 1; k <= kmax; ++k) {
			add(k * (k - 1) / 2, sgn(k + 1));
			for (int64_t n = 1;; ++n) {
				const int64_t e = k * (k - 1) / 2 + n * (n - 3) / 2 + 2 * k * n;
				if (e > N && n > 3) break;
				add(e, sgn(n + k + 1));
				add(e + n, sgn(n + k + 1));
			}
		}
		return acc;
	case 2:
		for (int64_t k = 1; k <= kmax; ++k)
			for (int64_t n = 0;; ++n) {
				const int64_t e = k * (k + 1) / 2 + n * (n - 3) / 2 + 2 * k * n - 1;
				if (e > N && n > 3) break;
				add(e, sgn(n + k + 1));
				add(e + 2 * n + 1, sgn(n + k));
			}
		return acc;
	case 3:
		for (int64_t k = 1; k <= kmax; ++k)
			for (int64_t n = 0;; ++n) {
				const int64_t e = k * (k - 1) / 2 + n * (3 * n - 1) / 2 + 3 * k * n;
				if (e > N) break;
				add(e, sgn(k + 1));
				add(e + 2 * k - 1, sgn(k));
				add(e + k + n, sgn(k));
				add(e + 3 * k + n - 1, sgn(k + 1));
			}
		return acc;
	case 4:
		for (int64_t k = 1; k <= kmax; ++k)
			for (int64_t n = 0;; ++n) {
				const int64_t e = k * (k + 1) / 2 + n * n - n + 2 * k * n - 1;
				if (e > N && n > 2) break;
				add(e, sgn(k + n + 1));
				add(e + 2 * n + 1, sgn(k + n));
			}
		return acc;
	case 5:
		for (int64_t k = 1; k <= kmax; ++k)
			for (int64_t n = -((k - 1) / 3); n <= k / 3; ++n) {
				const int64_t e = (k * k - k) / 2 - 3 * n * n + n;
				add(e, sgn(n + k + 1));
				add(e + k, sgn(n + k));
			}
		return acc;
	case 6:
		for (int64_t k = 0; k <= kmax; ++k)
			for (int64_t n = -(k / 2); n <= k / 2; ++n)
				add((k * k + k) / 2 - n * n, sgn(n + k));
		return acc;
	default:
		throw std::invalid_argument("cor6_rhs: index 1..6");
	}
}

/* sum_{n>=n_start} (z,z^{-1};q)_n q^n beta_n for a registered pair. */
inline ZQSeries beta_cleared_sum(const BaileyPair &pair, int64_t n_start,
                                 int64_t N)
{
	int64_t top = n_start - 1;
	while (top + 1 + pair.beta_shift(top + 1) <= N) ++top;
	detail::BivarAccum acc(N);
	if (top >= n_start) {
		QSeries<Int> dinv = QSeries<Int>::one(N);
		for (int64_t k = 1; k <= top; ++k)
			for (int64_t f : pair.beta_new_factors(k))
				dinv.div_one_minus(Int(1), f);
		for (int64_t n = top;; --n) {
			acc.add_scalar(n + pair.beta_shift(n), dinv, pair.beta_sign(n));
			if (n == n_start) {
				for (int64_t j = 0; j < n; ++j) {
					acc.multiply_one_minus(+1, j);
					acc.multiply_one_minus(-1, j);
				}
				break;
			}
			acc.multiply_one_minus(+1, n - 1);
			acc.multiply_one_minus(-1, n - 1);
			for (int64_t f : pair.beta_new_factors(n))
				dinv.mul_one_minus(Int(1), f);
		}
	}
	return acc.to_series();
}

/* Infinite product with z-carrying factors: prod over e = a, a+m, ... of
 * (1 - c z^{dir} q^e) for each listed (dir, c, a). */
struct ZFactor {
	int dir;
	int c;
	int64_t a;
};

inline ZQSeries zproduct(const std::vector<ZFactor> &factors, int64_t m,
                         int64_t N)
{
	detail::BivarAccum acc(N);
	acc.add_unit();
	for (const auto &f : factors)
		for (int64_t e = f.a; e <= N; e += m)
			acc.multiply_one_minus(f.dir, e, f.c);
	return acc.to_series();
}

/* ---- cyclotomic assembly helpers for the dissection identities ---- */

inline CycInt zs(int p, std::initializer_list<int64_t> powers, long c0 = 0)
{
	CycInt s{Int(c0)};
	for (int64_t k : powers) s += CycInt::zeta_pow(p, k);
	return s;
}

using CSeries = QSeries<CycInt>;

inline CSeries ceta(int64_t m, int64_t N) { return eta_product<CycInt>(m, N); }
inline CSeries cjac(int64_t a, int64_t m, int64_t N) { return jacprod<CycInt>(a, m, N); }

inline CSeries cpow(CSeries s, int e)
{
	CSeries r = s;
	for (int i = 1; i < e; ++i) r *= s;
	return r;
}

inline CSeries shifted(CSeries s, int64_t k)
{
	s.shift_up(k);
	return s;
}

} // namespace detail_id

class IdentityRegistry {
public:
	static const IdentityRegistry &instance()
	{
		static IdentityRegistry reg;
		return reg;
	}

	const std::vector<IdentityCase> &cases() const { return cases_; }

	const IdentityCase *find(const std::string &id) const
	{
		for (const auto &c : cases_)
			if (c.id == id) return &c;
		return nullptr;
	}

	VerifyReport verify(const std::string &id, int64_t order = -1) const
	{
		const IdentityCase *c = find(id);
		if (!c) throw std::invalid_argument("unknown identity id: " + id);
		return run_case(*c, order);
	}

	/* Runs all cases whose id starts with `filter` (empty = everything). */
	std::vector<VerifyReport> verify_filter(const std::string &filter,
	                                        int64_t order = -1) const
	{
		std::vector<VerifyReport> out;
		for (const auto &c : cases_)
			if (filter.empty() || c.id.rfind(filter, 0) == 0)
				out.push_back(run_case(c, order));
		return out;
	}

private:
	static VerifyReport run_case(const IdentityCase &c, int64_t order)
	{
		VerifyReport rep;
		rep.id = c.id;
		rep.description = c.description;
		rep.order = order > 0 ? order : c.default_order;
		auto t0 = std::chrono::steady_clock::now();
		CaseResult res = c.run(rep.order);
		auto t1 = std::chrono::steady_clock::now();
		rep.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
		rep.pass = res.pass;
		rep.first_mismatch = res.first_mismatch;
		rep.note = res.note;
		return rep;
	}

	void add(std::string id, std::string desc, int64_t order,
	         std::function<CaseResult(int64_t)> run)
	{
		cases_.push_back({std::move(id), std::move(desc), order, std::move(run)});
	}

	IdentityRegistry() { build(); }

	void build();

	std::vector<IdentityCase> cases_;
};

inline void IdentityRegistry::build()
{
	using namespace detail_id;

	/* ---- section 1: (1-z)(1-z^{-1}) S(z,q) = R(z,q) - C(z,q) ---- */
	add("eqintro1", "rank minus crank equals the cleared spt-crank", 200,
	    [](int64_t N) {
		    ZQSeries lhs = SeriesCache::instance().crank(SptKind::Plain, N);
		    lhs.mul_lpoly(clearing_weight());
		    ZQSeries rhs = rank_series(N) - crank_series(N);
		    return from_zq(lhs, rhs);
	    });

	/* ---- section 2: first displayed form == second displayed form ---- */
	for (SptKind X : {SptKind::A1, SptKind::A3, SptKind::A5, SptKind::A7,
	                  SptKind::C1, SptKind::C5, SptKind::E2, SptKind::E4}) {
		std::string id = std::string("firstforms.") + kind_name(X);
		add(id, "P_X sum (z,1/z;q)_n q^n beta_n equals (z,1/z;q)_inf S_X", 200,
		    [X](int64_t N) {
			    ZQSeries lhs = beta_cleared_sum(family_pair(X), 1, N);
			    lhs.mul_scalar_series(family_prefactor(X, N));
			    return from_zq(lhs, SeriesCache::instance().cleared(X, N));
		    });
	}

	/* ---- Theorem 2 ---- */
	for (SptKind X : {SptKind::A1, SptKind::A3, SptKind::A5, SptKind::A7,
	                  SptKind::C1, SptKind::C5, SptKind::E2, SptKind::E4}) {
		std::string id = std::string("thm2.") + kind_name(X);
		add(id, "series identity for (1+z)(z,1/z;q)_inf S_X", 200,
		    [X](int64_t N) {
			    ZQSeries lhs = SeriesCache::instance().cleared(X, N);
			    lhs.mul_lpoly(one_plus_z());
			    return from_zq(lhs, thm2_rhs(X, N));
		    });
	}

	/* ---- Corollary 3 (Hecke-Rogers) ---- */
	for (SptKind X : {SptKind::A1, SptKind::A3, SptKind::C1, SptKind::E4}) {
		std::string id = std::string("cor3.") + kind_name(X);
		add(id, "Hecke-Rogers double sum for (1+z)(z,1/z,q;q)_inf S_X", 200,
		    [X](int64_t N) {
			    ZQSeries lhs = SeriesCache::instance().cleared(X, N);
			    lhs.mul_lpoly(one_plus_z());
			    lhs.mul_scalar_series(poch_infinite(qpow(1), 1, N));
			    return from_zq(lhs, cor3_rhs(X, N));
		    });
	}

	/* ---- Corollary 4 (two-variable products) ---- */
	add("cor4.A5", "product form of S_A5", 400, [](int64_t N) {
		ZQSeries lhs = SeriesCache::instance().cleared(SptKind::A5, N);
		lhs.mul_lpoly(one_plus_z());
		ZQSeries t1 = zproduct({{+1, 1, 2}, {-1, 1, 1}}, 3, N);
		t1.mul_scalar_series(eta_product(3, N));
		t1.mul_lpoly(ZLaurentPoly::term(1, Int(1)));
		ZQSeries t2 = zproduct({{+1, 1, 1}, {-1, 1, 2}}, 3, N);
		t2.mul_scalar_series(eta_product(3, N));
		ZQSeries t3 = ZQSeries::from_lpoly(N, one_plus_z());
		t3.mul_scalar_series(eta_product(1, N));
		return from_zq(lhs, t1 + t2 - t3);
	});
	add("cor4.A7", "product form of S_A7", 400, [](int64_t N) {
		ZQSeries lhs = SeriesCache::instance().cleared(SptKind::A7, N);
		lhs.mul_lpoly(one_plus_z());
		ZQSeries t1 = zproduct({{+1, 1, 1}, {-1, 1, 2}}, 3, N);
		t1.mul_scalar_series(eta_product(3, N));
		t1.mul_lpoly(ZLaurentPoly::term(1, Int(1)));
		ZQSeries t2 = zproduct({{+1, 1, 2}, {-1, 1, 1}}, 3, N);
		t2.mul_scalar_series(eta_product(3, N));
		ZQSeries t3 = ZQSeries::from_lpoly(N, one_plus_z());
		t3.mul_scalar_series(eta_product(1, N));
		return from_zq(lhs, t1 + t2 - t3);
	});
	add("cor4.C5", "product form of S_C5", 400, [](int64_t N) {
		const ZQSeries &lhs = SeriesCache::instance().cleared(SptKind::C5, N);
		ZQSeries t1 = zproduct({{+1, 1, 1}, {-1, 1, 1}}, 2, N);
		t1.mul_scalar_series(eta_product(2, N));
		ZQSeries t2 = ZQSeries::one(N);
		t2.mul_scalar_series(eta_product(1, N) *
		                     poch_infinite(neg_qpow(1), 1, N).invert());
		return from_zq(lhs, t1 - t2);
	});
	add("cor4.E2", "product form of S_E2", 400, [](int64_t N) {
		const ZQSeries &lhs = SeriesCache::instance().cleared(SptKind::E2, N);
		ZQSeries t1 = zproduct({{+1, -1, 1}, {-1, -1, 1}}, 1, N);
		t1.mul_scalar_series(eta_product(1, N) *
		                     poch_infinite(neg_qpow(1), 1, N).invert());
		ZQSeries t2 = ZQSeries::one(N);
		t2.mul_scalar_series(eta_product(2, N));
		return from_zq(lhs, t1 - t2);
	});

	/* ---- Corollary 6 (one-variable products) ---- */
	{
		auto product_for = [](int which, int64_t N) -> QSeries<Int> {
			QSeries<Int> qq = eta_product(1, N);
			switch (which) {
			case 1: case 2: return qq * qq;
			case 3: case 5: return qq * qq * poch_infinite(qpow(1), 2, N);
			default: return qq * eta_product(2, N);
			}
		};
		for (int which = 1; which <= 6; ++which) {
			std::string id = "cor6.p" + std::to_string(which);
			add(id, "single-series product identity", 400,
			    [which, product_for](int64_t N) {
				    return from_q(product_for(which, N), cor6_rhs(which, N));
			    });
		}
	}

	/* ---- Corollary 7 (C1/C5 relations) ---- */
	add("cor7.ns", "N_S(m,n) = M_C1(m,2n) - M_C5(m,2n)", 200, [](int64_t N) {
		ZQSeries d = SeriesCache::instance().crank(SptKind::C1, N) -
		             SeriesCache::instance().crank(SptKind::C5, N);
		const ZQSeries &s = SeriesCache::instance().crank(SptKind::Plain, N / 2);
		CaseResult r;
		for (int64_t n = 0; 2 * n <= N && n <= s.order(); ++n)
			if (d.coeff(2 * n) != s.coeff(n)) {
				r.pass = false;
				r.first_mismatch = 2 * n;
				return r;
			}
		return r;
	});
	add("cor7.modd", "M_C1(m,2n+1) = M_C5(m,2n+1)", 200, [](int64_t N) {
		ZQSeries d = SeriesCache::instance().crank(SptKind::C1, N) -
		             SeriesCache::instance().crank(SptKind::C5, N);
		CaseResult r;
		for (int64_t n = 1; n <= N; n += 2)
			if (!d.coeff(n).is_zero()) {
				r.pass = false;
				r.first_mismatch = n;
				return r;
			}
		return r;
	});
	add("cor7.spteven", "spt(n) = spt_C1(2n) - spt_C5(2n)", 200, [](int64_t N) {
		const QSeries<Int> &c1 = SeriesCache::instance().spt(SptKind::C1, N);
		const QSeries<Int> &c5 = SeriesCache::instance().spt(SptKind::C5, N);
		const QSeries<Int> &s = SeriesCache::instance().spt(SptKind::Plain, N / 2);
		CaseResult r;
		for (int64_t n = 0; 2 * n <= N; ++n)
			if (c1.coeff(2 * n) - c5.coeff(2 * n) != s.coeff(n)) {
				r.pass = false;
				r.first_mismatch = 2 * n;
				return r;
			}
		return r;
	});
	add("cor7.sptodd", "spt_C1(2n+1) = spt_C5(2n+1)", 200, [](int64_t N) {
		const QSeries<Int> &c1 = SeriesCache::instance().spt(SptKind::C1, N);
		const QSeries<Int> &c5 = SeriesCache::instance().spt(SptKind::C5, N);
		CaseResult r;
		for (int64_t n = 1; n <= N; n += 2)
			if (c1.coeff(n) != c5.coeff(n)) {
				r.pass = false;
				r.first_mismatch = n;
				return r;
			}
		return r;
	});

	/* ---- Proposition 4.1 of Garvan (finite z-expansion) ---- */
	add("prop41", "finite expansion of (1+z)(z,1/z;q)_n, n <= 50", 200,
	    [](int64_t N) {
		    CaseResult r;
		    const int64_t n_max = 50;
		    for (int64_t n = 0; n <= n_max; ++n) {
			    detail::BivarAccum lacc(N);
			    lacc.add_unit();
			    for (int64_t j = 0; j < n; ++j) {
				    lacc.multiply_one_minus(+1, j);
				    lacc.multiply_one_minus(-1, j);
			    }
			    lacc.multiply_one_minus(+1, 0, -1); // times (1+z)
			    ZQSeries lhs = lacc.to_series();

			    detail::BivarAccum racc(N);
			    /* G(n,j) = (q;q)_{2n}/((q;q)_{n+j}(q;q)_{n-j+1}), walked from
			     * j = -n where it equals 1/(1-q^{2n+1}). */
			    QSeries<Int> G = QSeries<Int>::one(N);
			    G.div_one_minus(Int(1), 2 * n + 1);
			    for (int64_t j = -n;; ++j) {
				    const int64_t e1 = (j - 1) * (j - 2) / 2;
				    const int64_t e2 = j * (j + 1) / 2;
				    const int s = (mod_nonneg(j + 1, 2) == 0) ? 1 : -1;
				    racc.add_scalar(e1, G, s, j);
				    racc.add_scalar(e2, G, -s, j);
				    if (j == n + 1) break;
				    G.mul_one_minus(Int(1), n - j + 1);
				    G.div_one_minus(Int(1), n + j + 1);
			    }
			    ZQSeries rhs = racc.to_series();
			    if (!(lhs == rhs)) {
				    r.pass = false;
				    r.first_mismatch = first_mismatch(lhs, rhs);
				    r.note = "n = " + std::to_string(n);
				    return r;
			    }
		    }
		    return r;
	    });

	/* ---- Proposition 3.1 (first double series) ---- */
	for (SptKind X : {SptKind::A1, SptKind::A3, SptKind::C1, SptKind::E4}) {
		std::string id = std::string("prop31.") + kind_name(X);
		add(id, "first double-series form of (1+z)(z,1/z;q)_inf S_X", 200,
		    [X](int64_t N) {
			    ZQSeries lhs = SeriesCache::instance().cleared(X, N);
			    lhs.mul_lpoly(one_plus_z());
			    ZQSeries sum(N);
			    for (int64_t k = 1;; ++k) {
				    if (inner_min_exponent(X, k) > N && k > 2) break;
				    add_inner_sum(sum, X, k, ZLaurentPoly::pair(k, 1 - k));
			    }
			    sum.mul_scalar_series(poch_infinite(qpow(1), 1, N).invert());
			    ZQSeries lead = ZQSeries::from_lpoly(N, one_plus_z());
			    lead.mul_scalar_series(family_prefactor(X, N));
			    return from_zq(lhs, sum - lead);
		    });
	}

	/* ---- Theorem 5 dissections ---- */
	add("thm5.C1", "5-dissection of (1-z5)(1-1/z5) S_C1(z5,q)", 250,
	    [](int64_t N) {
		    const CSeries &root =
		        SeriesCache::instance().crank_root(SptKind::C1, 5, N);
		    CSeries lhs = root;
		    lhs.scale((CycInt(Int(1)) - CycInt::zeta_pow(5, 1)) *
		              (CycInt(Int(1)) - CycInt::zeta_pow(5, -1)));
		    const CycInt w = zs(5, {1, -1});        // zeta + zeta^{-1}
		    const CSeries E50 = ceta(50, N);
		    const CSeries iE50 = E50.invert();
		    const CSeries J5 = cjac(5, 50, N), J10 = cjac(10, 50, N),
		                  J15 = cjac(15, 50, N), J20 = cjac(20, 50, N),
		                  J25 = cjac(25, 50, N);
		    const CSeries i25_5 = cjac(5, 25, N).invert();
		    const CSeries i25_10 = cjac(10, 25, N).invert();
		    auto L1 = lambert_sum<CycInt>(
		        N, [](int64_t n) { return 75 * n * (n + 1); },
		        [](int64_t n) { return 50 * n + 10; });
		    auto L2 = lambert_sum<CycInt>(
		        N, [](int64_t n) { return 75 * n * (n + 1); },
		        [](int64_t n) { return 50 * n + 20; });

		    CSeries rhs = E50 * J20 * cpow(J10.invert(), 2);
		    rhs -= E50 * J25 * i25_5;
		    rhs -= shifted(CycInt(Int(2)) * w * (E50 * J5 * i25_10), 5);
		    rhs += shifted((w - CycInt(Int(2))) * (iE50 * L1), 10);
		    rhs -= shifted(w * (E50 * J10 * cpow(J20.invert(), 2)), 6);
		    rhs += shifted(CycInt(Int(2)) * (E50 * J15 * i25_5), 1);
		    rhs -= shifted(w * (E50 * J25 * i25_10), 1);
		    rhs -= shifted((CycInt(Int(2)) * w + CycInt(Int(1))) * (iE50 * L2), 16);
		    rhs += shifted(E50 * J10.invert(), 2);
		    rhs += shifted(CycInt(Int(2)) * w * (E50 * J15 * i25_10), 2);
		    rhs += shifted(w * (E50 * J20.invert()), 4);
		    rhs -= shifted(CycInt(Int(2)) * (E50 * J5 * i25_5), 4);
		    return with_vanishing(from_q(lhs, rhs), root, 5, 3);
	    });
	add("thm5.C5", "5-dissection of (1-z5)(1-1/z5) S_C5(z5,q)", 250,
	    [](int64_t N) {
		    const CSeries &root =
		        SeriesCache::instance().crank_root(SptKind::C5, 5, N);
		    CSeries lhs = root;
		    lhs.scale((CycInt(Int(1)) - CycInt::zeta_pow(5, 1)) *
		              (CycInt(Int(1)) - CycInt::zeta_pow(5, -1)));
		    const CycInt w = zs(5, {1, -1});
		    const CSeries E50 = ceta(50, N);
		    const CSeries J5 = cjac(5, 50, N), J10 = cjac(10, 50, N),
		                  J15 = cjac(15, 50, N), J20 = cjac(20, 50, N),
		                  J25 = cjac(25, 50, N);
		    const CSeries i25_5 = cjac(5, 25, N).invert();
		    const CSeries i25_10 = cjac(10, 25, N).invert();

		    CSeries rhs = E50 * J20 * cpow(J10.invert(), 2);
		    rhs -= E50 * J25 * i25_5;
		    rhs -= shifted(CycInt(Int(2)) * w * (E50 * J5 * i25_10), 5);
		    rhs -= shifted(w * (E50 * J10 * cpow(J20.invert(), 2)), 6);
		    rhs += shifted(CycInt(Int(2)) * (E50 * J15 * i25_5), 1);
		    rhs -= shifted(w * (E50 * J25 * i25_10), 1);
		    rhs += shifted((w - CycInt(Int(1))) * (E50 * J10.invert()), 2);
		    rhs -= shifted(CycInt(Int(2)) * w * (E50 * J15 * i25_10), 2);
		    rhs -= shifted((w + CycInt(Int(1))) * (E50 * J20.invert()), 4);
		    rhs -= shifted(CycInt(Int(2)) * (E50 * J5 * i25_5), 4);
		    return with_vanishing(from_q(lhs, rhs), root, 5, 3);
	    });
	add("thm5.E2", "3-dissection of S_E2(z3,q)", 250, [](int64_t N) {
		const CSeries &root = SeriesCache::instance().crank_root(SptKind::E2, 3, N);
		QSeries<Int> rhs(N);
		{
			QSeries<Int> t1 = eta_product(18, N) * eta_product(9, N) *
			                  eta_product(3, N).invert();
			t1.shift_up(1);
			QSeries<Int> e18 = eta_product(18, N);
			QSeries<Int> t2 = e18 * e18 * e18 * e18 *
			                  (eta_product(9, N) * eta_product(9, N) *
			                   eta_product(6, N)).invert();
			t2.shift_up(2);
			rhs = t2 - t1;
		}
		return with_vanishing(from_q(root, to_cyc(rhs)), root, 3, 0);
	});
	add("thm5.E4", "3-dissection of S_E4(z3,q), doubled form", 250,
	    [](int64_t N) {
		    const CSeries &root =
		        SeriesCache::instance().crank_root(SptKind::E4, 3, N);
		    CSeries lhs = root;
		    lhs.scale(CycInt(Int(2)));
		    QSeries<Int> e9 = eta_product(9, N), e18 = eta_product(18, N);
		    QSeries<Int> t1 = e9 * e9 * e9 * e9 * eta_product(6, N) *
		                      (e18 * e18 * eta_product(3, N) *
		                       eta_product(3, N)).invert();
		    QSeries<Int> lam = lambert_sum(
		        N, [](int64_t n) { return 9 * n * n + 9 * n; },
		        [](int64_t n) { return 9 * n + 3; });
		    QSeries<Int> t2 = e18 * (e9 * e9).invert() * lam;
		    t2.shift_up(2);
		    t2.scale(Int(2));
		    QSeries<Int> rhs = QSeries<Int>::one(N) - t1 + t2;
		    return with_vanishing(from_q(lhs, to_cyc(rhs)), root, 3, 1);
	    });

	/* ---- section 4: the 7-dissection of S_A5(zeta_7, q) ---- */
	add("sec4.a5zeta7", "7-dissection of S_A5(z7,q)", 300, [](int64_t N) {
		const CSeries &root = SeriesCache::instance().crank_root(SptKind::A5, 7, N);
		auto J49 = [&](int64_t a) { return cjac(a, 49, N); };
		auto J147 = [&](int64_t a) { return cjac(a, 147, N); };
		CSeries rhs(N);
		rhs -= shifted(zs(7, {1, 6}, 1) *
		               (J147(42) * J147(49) * J147(56)).invert(), 14);
		rhs += shifted(J49(14) * (J49(7) * J49(21)).invert(), 2);
		rhs -= shifted(zs(7, {2, 5}, 1) *
		               (J147(21) * J147(49) * J147(70)).invert(), 9);
		rhs += shifted(zs(7, {1, 6}) * J49(14).invert(), 3);
		rhs += shifted(zs(7, {1, 2, 5, 6}, 1) * J49(21).invert(), 4);
		rhs += shifted(zs(7, {1, 6}) * (J147(35) * (J147(21) * J147(28) *
		               J147(49) * J147(49)).invert()), 5);
		rhs += shifted(zs(7, {1, 6}) * (J147(14) * (J147(21) * J147(49) *
		               J147(49) * J147(70)).invert()), 19);
		rhs += shifted(zs(7, {2, 5}, 2) *
		               (J147(14) * J147(49) * J147(63)).invert(), 6);
		rhs *= ceta(49, N);
		return with_vanishing(from_q(root, rhs), root, 7, 1);
	});

	/* ---- section 5: rank/crank differences ---- */
	{
		auto diff_case = [](SptKind X, ZQSeries rankpart, int64_t N) {
			ZQSeries lhs = SeriesCache::instance().crank(X, N);
			lhs.mul_lpoly(clearing_weight());
			return from_zq(lhs, rankpart);
		};
		add("prop5.diff.C1", "(1-z)(1-1/z) S_C1 = R(z,q^2) - (q;q^2) C(z,q)",
		    200, [diff_case](int64_t N) {
			    ZQSeries res = crank_series(N);
			    res.mul_scalar_series(poch_infinite(qpow(1), 2, N));
			    return diff_case(SptKind::C1,
			                     rank_series(N).substitute_power(2) - res, N);
		    });
		add("prop5.diff.C5", "(1-z)(1-1/z) S_C5 = C(z,q^2) - (q;q^2) C(z,q)",
		    200, [diff_case](int64_t N) {
			    ZQSeries res = crank_series(N);
			    res.mul_scalar_series(poch_infinite(qpow(1), 2, N));
			    return diff_case(SptKind::C5,
			                     crank_series(N).substitute_power(2) - res, N);
		    });
		add("prop5.diff.E2", "(1-z)(1-1/z) S_E2 = R_1(z,q) - (-q;q) C(z,q)",
		    200, [diff_case](int64_t N) {
			    return diff_case(
			        SptKind::E2,
			        r1_series(N) -
			            residual_crank_series(ResidualCrank::Overpartition, N),
			        N);
		    });
		add("prop5.diff.E4", "(1-z)(1-1/z) S_E4 = R_2(z,q) - (-q;q) C(z,q)",
		    200, [diff_case](int64_t N) {
			    return diff_case(
			        SptKind::E4,
			        r2_series(N) -
			            residual_crank_series(ResidualCrank::Overpartition, N),
			        N);
		    });
	}

	/* The overpartition-rank route to R_2, doubled to stay in Z[z,1/z]. */
	add("prop5.r2rel", "2 R_2 = (1-z)(1-1/z) + (z+1/z) Rbar", 200,
	    [](int64_t N) {
		    ZQSeries lhs = r2_series(N);
		    lhs.scale(Int(2));
		    ZQSeries rhs = overline_rank_series(N);
		    rhs.mul_lpoly(ZLaurentPoly::pair(1, -1));
		    rhs += ZQSeries::from_lpoly(N, clearing_weight());
		    return from_zq(lhs, rhs);
	    });

	/* ---- section 5: the six rank/crank dissections ---- */
	add("prop5.diss.rank5", "5-dissection of R(z5,q)", 250, [](int64_t N) {
		CSeries lhs = rank_series(N).eval_root(5);
		const CycInt w = zs(5, {1, -1});
		const CSeries E25 = ceta(25, N);
		const CSeries iE25 = E25.invert();
		const CSeries J5 = cjac(5, 25, N), J10 = cjac(10, 25, N);
		auto L1 = lambert_sum<CycInt>(
		    N, [](int64_t n) { return 75 * n * (n + 1) / 2; },
		    [](int64_t n) { return 25 * n + 5; });
		auto L2 = lambert_sum<CycInt>(
		    N, [](int64_t n) { return 75 * n * (n + 1) / 2; },
		    [](int64_t n) { return 25 * n + 10; });
		CSeries rhs = E25 * J10 * cpow(J5.invert(), 2);
		rhs += shifted((w - CycInt(Int(2))) * (iE25 * L1), 5);
		rhs += shifted(E25 * J5.invert(), 1);
		rhs += shifted(w * (E25 * J10.invert()), 2);
		rhs -= shifted(w * (E25 * J5 * cpow(J10.invert(), 2)), 3);
		rhs -= shifted((CycInt(Int(2)) * w + CycInt(Int(1))) * (iE25 * L2), 8);
		return from_q(lhs, rhs);
	});
	add("prop5.diss.crank5", "5-dissection of C(z5,q)", 250, [](int64_t N) {
		CSeries lhs = crank_series(N).eval_root(5);
		const CycInt w = zs(5, {1, 4});
		const CSeries E25 = ceta(25, N);
		const CSeries J5 = cjac(5, 25, N), J10 = cjac(10, 25, N);
		CSeries rhs = J10 * cpow(J5.invert(), 2);
		rhs += shifted((w - CycInt(Int(1))) * J5.invert(), 1);
		rhs -= shifted((w + CycInt(Int(1))) * J10.invert(), 2);
		rhs -= shifted(w * (J5 * cpow(J10.invert(), 2)), 3);
		rhs *= E25;
		return from_q(lhs, rhs);
	});
	add("prop5.diss.r1zeta3", "3-dissection of R_1(z3,q)", 250, [](int64_t N) {
		CSeries lhs = r1_series(N).eval_root(3);
		QSeries<Int> e3 = eta_product(3, N), e6 = eta_product(6, N),
		             e9 = eta_product(9, N), e18 = eta_product(18, N);
		QSeries<Int> t1 = e9 * e9 * e9 * e9 * e6 * (e3 * e3 * e18 * e18).invert();
		QSeries<Int> t2 = e18 * e9 * e3.invert();
		t2.shift_up(1);
		t2.scale(Int(4));
		QSeries<Int> t3 = e18 * e18 * e18 * e18 * (e9 * e9 * e6).invert();
		t3.shift_up(2);
		return from_q(lhs, to_cyc(t1 - t2 + t3));
	});
	add("prop5.diss.ocrank3", "3-dissection of (-q;q) C(z3,q)", 250,
	    [](int64_t N) {
		    CSeries lhs =
		        residual_crank_series(ResidualCrank::Overpartition, N).eval_root(3);
		    QSeries<Int> e3 = eta_product(3, N), e6 = eta_product(6, N),
		                 e9 = eta_product(9, N), e18 = eta_product(18, N);
		    QSeries<Int> t1 =
		        e9 * e9 * e9 * e9 * e6 * (e3 * e3 * e18 * e18).invert();
		    QSeries<Int> t2 = e18 * e9 * e3.invert();
		    t2.shift_up(1);
		    QSeries<Int> t3 = e18 * e18 * e18 * e18 * (e9 * e9 * e6).invert();
		    t3.shift_up(2);
		    t3.scale(Int(2));
		    return from_q(lhs, to_cyc(t1 - t2 - t3));
	    });
	add("prop5.diss.oddcrank5", "5-dissection of (q;q^2) C(z5,q)", 250,
	    [](int64_t N) {
		    CSeries lhs =
		        residual_crank_series(ResidualCrank::Odd, N).eval_root(5);
		    const CycInt w = zs(5, {1, -1});
		    const CSeries E50 = ceta(50, N);
		    const CSeries J5 = cjac(5, 50, N), J15 = cjac(15, 50, N),
		                  J25 = cjac(25, 50, N);
		    const CSeries i25_5 = cjac(5, 25, N).invert();
		    const CSeries i25_10 = cjac(10, 25, N).invert();
		    CSeries rhs = J25 * i25_5;
		    rhs += shifted(CycInt(Int(2)) * w * (J5 * i25_10), 5);
		    rhs -= shifted(CycInt(Int(2)) * (J15 * i25_5), 1);
		    rhs += shifted(w * (J25 * i25_10), 1);
		    rhs -= shifted(CycInt(Int(2)) * w * (J15 * i25_10), 2);
		    rhs += shifted(CycInt(Int(2)) * (J5 * i25_5), 4);
		    rhs *= E50;
		    return from_q(lhs, rhs);
	    });
	add("prop5.diss.r2zeta3", "3-dissection of R_2(z3,q), doubled form", 250,
	    [](int64_t N) {
		    CSeries lhs = r2_series(N).eval_root(3);
		    lhs.scale(CycInt(Int(2)));
		    QSeries<Int> e3 = eta_product(3, N), e6 = eta_product(6, N),
		                 e9 = eta_product(9, N), e18 = eta_product(18, N);
		    QSeries<Int> rhs(N);
		    rhs.add_term(0, Int(3));
		    rhs -= e9 * e9 * e9 * e9 * e6 * (e18 * e18 * e3 * e3).invert();
		    QSeries<Int> t2 = e9 * e18 * e3.invert();
		    t2.shift_up(1);
		    t2.scale(Int(2));
		    rhs -= t2;
		    QSeries<Int> t3 = e18 * e18 * e18 * e18 * (e9 * e9 * e6).invert();
		    t3.shift_up(2);
		    t3.scale(Int(4));
		    rhs -= t3;
		    QSeries<Int> lam = lambert_sum(
		        N, [](int64_t n) { return 9 * n * n + 9 * n; },
		        [](int64_t n) { return 9 * n + 3; });
		    QSeries<Int> t4 = e18 * (e9 * e9).invert() * lam;
		    t4.shift_up(2);
		    t4.scale(Int(6));
		    rhs += t4;
		    return from_q(lhs, to_cyc(rhs));
	    });

	/* ---- auxiliary product identities quoted in the proofs ---- */
	add("aux.gauss", "(q;q^2)(q;q) as theta and as a 50-modulus dissection",
	    400, [](int64_t N) {
		    QSeries<Int> prod =
		        poch_infinite(qpow(1), 2, N) * eta_product(1, N);
		    CaseResult r = from_q(prod, theta_jtp(1, N));
		    if (!r.pass) {
			    r.note = "theta form";
			    return r;
		    }
		    QSeries<Int> j25 = jacprod(25, 50, N), j15 = jacprod(15, 50, N),
		                 j5 = jacprod(5, 50, N);
		    j15.shift_up(1);
		    j15.scale(Int(2));
		    j5.shift_up(4);
		    j5.scale(Int(2));
		    QSeries<Int> rhs = eta_product(50, N) * (j25 - j15 + j5);
		    r = from_q(prod, rhs);
		    if (!r.pass) r.note = "50-modulus form";
		    return r;
	    });
	add("aux.lemma39", "1/(z5 q, q/z5; q)_inf splits across [q^5;q^25]", 250,
	    [](int64_t N) {
		    QSeries<CycInt> den = QSeries<CycInt>::one(N);
		    for (int64_t j = 1; j <= N; ++j) {
			    den.mul_one_minus(CycInt::zeta_pow(5, 1), j);
			    den.mul_one_minus(CycInt::zeta_pow(5, -1), j);
		    }
		    CSeries lhs = den.invert();
		    CSeries rhs = cjac(5, 25, N).invert();
		    rhs += shifted(zs(5, {1, -1}) * cjac(10, 25, N).invert(), 1);
		    return from_q(lhs, rhs);
	    });
	add("aux.rodseth", "5-dissection of (q;q^2)_inf", 250, [](int64_t N) {
		QSeries<Int> lhs = poch_infinite(qpow(1), 2, N);
		QSeries<Int> e5 = eta_product(5, N), e10 = eta_product(10, N),
		             e25 = eta_product(25, N), e50 = eta_product(50, N);
		QSeries<Int> i10cubed = (e10 * e10 * e10).invert();
		QSeries<Int> j15 = jacprod(15, 50, N), j5 = jacprod(5, 50, N);
		QSeries<Int> rhs = e5 * e25 * e25 * j15 * i10cubed;
		QSeries<Int> t2 = e5 * e50 * e50 * j15 * j15 * i10cubed;
		t2.shift_up(1);
		rhs -= t2;
		QSeries<Int> t3 = e5 * e50 * e50 * j5 * j5 * i10cubed;
		t3.shift_up(7);
		rhs -= t3;
		QSeries<Int> t4 = e5 * e25 * e25 * j5 * i10cubed;
		t4.shift_up(3);
		rhs -= t4;
		QSeries<Int> t5 = e5 * e5 * e50 * e50 * e50 *
		                  (e10 * e10 * e10 * e10 * e25).invert();
		t5.shift_up(4);
		rhs += t5;
		return from_q(lhs, rhs);
	});
	add("aux.lo1", "3-dissection of the overpartition rank at z3", 250,
	    [](int64_t N) {
		    CSeries lhs = overline_rank_series(N).eval_root(3);
		    QSeries<Int> e3 = eta_product(3, N), e6 = eta_product(6, N),
		                 e9 = eta_product(9, N), e18 = eta_product(18, N);
		    QSeries<Int> rhs =
		        e9 * e9 * e9 * e9 * e6 * (e18 * e18 * e3 * e3).invert();
		    QSeries<Int> t2 = e9 * e18 * e3.invert();
		    t2.shift_up(1);
		    t2.scale(Int(2));
		    rhs += t2;
		    QSeries<Int> t3 = e18 * e18 * e18 * e18 * (e9 * e9 * e6).invert();
		    t3.shift_up(2);
		    t3.scale(Int(4));
		    rhs += t3;
		    QSeries<Int> lam = lambert_sum(
		        N, [](int64_t n) { return 9 * n * n + 9 * n; },
		        [](int64_t n) { return 9 * n + 3; });
		    QSeries<Int> t4 = e18 * (e9 * e9).invert() * lam;
		    t4.shift_up(2);
		    t4.scale(Int(6));
		    rhs -= t4;
		    return from_q(lhs, to_cyc(rhs));
	    });
	add("aux.pentagonal49", "(q;q)_inf as a 7-dissection at modulus 49", 300,
	    [](int64_t N) {
		    QSeries<Int> lhs = eta_product(1, N);
		    QSeries<Int> j7 = jacprod(7, 49, N), j14 = jacprod(14, 49, N),
		                 j21 = jacprod(21, 49, N);
		    QSeries<Int> rhs = j14 * j7.invert();
		    QSeries<Int> t2 = j21 * j14.invert();
		    t2.shift_up(1);
		    rhs -= t2;
		    QSeries<Int> t3(N);
		    t3.add_term(2, Int(1));
		    rhs -= t3;
		    QSeries<Int> t4 = j7 * j21.invert();
		    t4.shift_up(5);
		    rhs += t4;
		    rhs *= eta_product(49, N);
		    return from_q(lhs, rhs);
	    });

	/* ---- spt_E4(n) = sptbar(n) - p-bar(n)/2, doubled ---- */
	add("e4.sptbar", "2 S_E4(q) = 2 Sbar(q) - ((-q;q)/(q;q) - 1)", 300,
	    [](int64_t N) {
		    QSeries<Int> lhs = SeriesCache::instance().spt(SptKind::E4, N);
		    lhs.scale(Int(2));
		    QSeries<Int> rhs = SeriesCache::instance().spt(SptKind::Bar, N);
		    rhs.scale(Int(2));
		    QSeries<Int> povl = poch_infinite(neg_qpow(1), 1, N) *
		                        poch_infinite(qpow(1), 1, N).invert();
		    rhs -= povl - QSeries<Int>::one(N);
		    return from_q(lhs, rhs);
	    });
}

} // namespace qspt

#endif
