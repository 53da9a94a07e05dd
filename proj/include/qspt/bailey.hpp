#ifndef QSPT_BAILEY_HPP
#define QSPT_BAILEY_HPP

#include "qseries.hpp"
#include "zqseries.hpp"

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace qspt {

/* A sparse polynomial in q: list of (coefficient, exponent) terms. The alpha
 * side of every pair in the registry has at most two terms per index. */
using SparsePoly = std::vector<std::pair<Int, int64_t>>;

constexpr int64_t kNoTerm = std::numeric_limits<int64_t>::max();

/* A named Bailey pair relative to (a, q). alpha_n is a short polynomial;
 * beta_n is reconstructed from its Pochhammer denominators, described
 * incrementally: beta_n = beta_sign(n) q^{beta_shift(n)} / D_n where
 * D_n = D_{n-1} * prod (1 - q^e) over beta_new_factors(n), D_0 = 1. */
struct BaileyPair {
	std::string name;
	QMonomial param; // the a of "relative to (a,q)"
	std::function<SparsePoly(int64_t)> alpha;
	std::function<int64_t(int64_t)> alpha_val; // valuation; kNoTerm if alpha_n = 0
	std::function<int64_t(int64_t)> beta_shift;
	std::function<int(int64_t)> beta_sign;
	std::function<std::vector<int64_t>(int64_t)> beta_new_factors;

	QSeries<Int> beta(int64_t n, int64_t N) const
	{
		QSeries<Int> r = QSeries<Int>::one(N);
		for (int64_t k = 1; k <= n; ++k)
			for (int64_t e : beta_new_factors(k))
				r.div_one_minus(Int(1), e);
		r.shift_up(beta_shift(n));
		if (beta_sign(n) < 0) r.scale(Int(-1));
		return r;
	}

	QSeries<Int> alpha_series(int64_t n, int64_t N) const
	{
		QSeries<Int> r(N);
		for (const auto &[c, e] : alpha(n)) r.add_term(e, c);
		return r;
	}
};

namespace detail {

inline SparsePoly one_term(Int c, int64_t e) { return {{std::move(c), e}}; }

inline SparsePoly two_terms(Int c, int64_t e1, int64_t e2)
{
	return {{c, e1}, {c, e2}};
}

/* The A-group alphas share the shape: at n = 3k a pair q^{u(k)-v(k)} +
 * q^{u(k)+v(k)}, at n = 3k+-1 a single negative term. */
struct AGroupAlpha {
	int64_t qa, qb;       // exponents at n=3k: qa k^2 -+ qb k
	int64_t sa, sb;       // exponent at n=3k+1: sa k^2 + sb k + sc
	int64_t sc;
	SparsePoly operator()(int64_t n) const
	{
		if (n == 0) return one_term(Int(1), 0);
		const int64_t rem = n % 3;
		if (rem == 0) {
			const int64_t k = n / 3;
			return two_terms(Int(1), qa * k * k - qb * k, qa * k * k + qb * k);
		}
		if (rem == 1) {
			const int64_t k = (n - 1) / 3;
			return one_term(Int(-1), sa * k * k + sb * k + sc);
		}
		const int64_t k = (n + 1) / 3; // n = 3k - 1
		return one_term(Int(-1), sa * k * k - sb * k + sc);
	}
};

} // namespace detail

/* The eight pairs of the registry (relative to (1,q)) plus the two generic
 * pairs specialized at a = q. Names: A1 A3 A5 A7 C1 C5 E2 E4 G1 G2. */
inline const std::vector<BaileyPair> &bailey_registry()
{
	static const std::vector<BaileyPair> reg = [] {
		std::vector<BaileyPair> v;
		auto val_of = [](std::function<SparsePoly(int64_t)> a) {
			return [a](int64_t n) -> int64_t {
				SparsePoly t = a(n);
				if (t.empty()) return kNoTerm;
				int64_t m = t[0].second;
				for (const auto &[c, e] : t) m = std::min(m, e);
				return m;
			};
		};
		auto add = [&](const char *name, QMonomial a,
		               std::function<SparsePoly(int64_t)> alpha,
		               std::function<int64_t(int64_t)> bshift,
		               std::function<int(int64_t)> bsign,
		               std::function<std::vector<int64_t>(int64_t)> bfac) {
			BaileyPair p{name, a, alpha, val_of(alpha), bshift, bsign, bfac};
			v.push_back(std::move(p));
		};

		auto zero_shift = [](int64_t) -> int64_t { return 0; };
		auto plus_sign = [](int64_t) { return 1; };
		auto qq2n = [](int64_t n) { return std::vector<int64_t>{2 * n - 1, 2 * n}; };
		auto cden = [](int64_t n) { return std::vector<int64_t>{2 * n - 1, n}; };
		auto eden = [](int64_t n) { return std::vector<int64_t>{2 * n}; };

		add("A1", qpow(0), detail::AGroupAlpha{6, 1, 6, 5, 1}, zero_shift,
		    plus_sign, qq2n);
		add("A3", qpow(0), detail::AGroupAlpha{6, 2, 6, 2, 0},
		    [](int64_t n) { return n; }, plus_sign, qq2n);
		add("A5", qpow(0), detail::AGroupAlpha{3, 1, 3, 1, 0},
		    [](int64_t n) { return n * n; }, plus_sign, qq2n);
		add("A7", qpow(0), detail::AGroupAlpha{3, 2, 3, 4, 1},
		    [](int64_t n) { return n * n - n; }, plus_sign, qq2n);
		add("C1", qpow(0),
		    [](int64_t n) -> SparsePoly {
			    if (n == 0) return detail::one_term(Int(1), 0);
			    if (n % 2 != 0) return {};
			    const int64_t k = n / 2;
			    Int c = (k % 2 == 0) ? 1 : -1;
			    return detail::two_terms(c, 3 * k * k - k, 3 * k * k + k);
		    },
		    zero_shift, plus_sign, cden);
		add("C5", qpow(0),
		    [](int64_t n) -> SparsePoly {
			    if (n == 0) return detail::one_term(Int(1), 0);
			    if (n % 2 != 0) return {};
			    const int64_t k = n / 2;
			    Int c = (k % 2 == 0) ? 1 : -1;
			    return detail::two_terms(c, k * k - k, k * k + k);
		    },
		    [](int64_t n) { return (n * n - n) / 2; }, plus_sign, cden);
		add("E2", qpow(0),
		    [](int64_t n) -> SparsePoly {
			    if (n == 0) return detail::one_term(Int(1), 0);
			    return detail::one_term(Int(n % 2 == 0 ? 2 : -2), 0);
		    },
		    zero_shift, [](int64_t n) { return n % 2 == 0 ? 1 : -1; }, eden);
		add("E4", qpow(0),
		    [](int64_t n) -> SparsePoly {
			    if (n == 0) return detail::one_term(Int(1), 0);
			    Int c = (n % 2 == 0) ? 1 : -1;
			    return detail::two_terms(c, n * n - n, n * n + n);
		    },
		    [](int64_t n) { return n; }, plus_sign, eden);
		/* beta_n(a) = 1/(aq, q; q)_n with alpha = delta_{n,0}; here a = q. */
		add("G1", qpow(1),
		    [](int64_t n) -> SparsePoly {
			    if (n == 0) return detail::one_term(Int(1), 0);
			    return {};
		    },
		    zero_shift, plus_sign,
		    [](int64_t n) { return std::vector<int64_t>{n + 1, n}; });
		/* beta*_n(a) = 1/(aq^2, q; q)_n with alpha* = 1, -aq, 0, ...; a = q. */
		add("G2", qpow(1),
		    [](int64_t n) -> SparsePoly {
			    if (n == 0) return detail::one_term(Int(1), 0);
			    if (n == 1) return detail::one_term(Int(-1), 2);
			    return {};
		    },
		    zero_shift, plus_sign,
		    [](int64_t n) { return std::vector<int64_t>{n + 2, n}; });
		return v;
	}();
	return reg;
}

inline const BaileyPair &bailey_lookup(const std::string &name)
{
	for (const auto &p : bailey_registry())
		if (p.name == name) return p;
	throw std::invalid_argument("unknown Bailey pair: " + name);
}

struct PairCheck {
	int64_t n;
	bool pass;
};

struct PairReport {
	std::string name;
	std::vector<PairCheck> checks;
	bool all_pass = true;
};

/* Checks beta_n = sum_{k=0}^{n} alpha_k / ((q;q)_{n-k} (aq;q)_{n+k}) for every
 * n <= n_max, to order N. This is the definition of a Bailey pair, so the
 * check certifies the registry entries against first principles. */
inline PairReport verify_pair(const BaileyPair &pair, int64_t n_max, int64_t N)
{
	PairReport rep;
	rep.name = pair.name;
	const int64_t aq = pair.param.exponent + 1; // (aq;q)_j = (q^{aq};q)_j
	if (pair.param.sign != 1)
		throw std::invalid_argument("verify_pair: negative pair parameter");

	std::vector<QSeries<Int>> invq, invaq;
	invq.reserve(n_max + 1);
	invaq.reserve(2 * n_max + 1);
	invq.push_back(QSeries<Int>::one(N));
	for (int64_t j = 1; j <= n_max; ++j) {
		QSeries<Int> s = invq.back();
		s.div_one_minus(Int(1), j);
		invq.push_back(std::move(s));
	}
	invaq.push_back(QSeries<Int>::one(N));
	for (int64_t j = 1; j <= 2 * n_max; ++j) {
		QSeries<Int> s = invaq.back();
		s.div_one_minus(Int(1), aq + j - 1);
		invaq.push_back(std::move(s));
	}

	for (int64_t n = 0; n <= n_max; ++n) {
		QSeries<Int> rhs(N);
		for (int64_t k = 0; k <= n; ++k) {
			SparsePoly a = pair.alpha(k);
			if (a.empty()) continue;
			QSeries<Int> t = invq[n - k] * invaq[n + k];
			for (const auto &[c, e] : a) {
				QSeries<Int> u = t;
				u.shift_up(e);
				u.scale(c);
				rhs += u;
			}
		}
		const bool ok = (pair.beta(n, N) == rhs);
		rep.checks.push_back({n, ok});
		rep.all_pass = rep.all_pass && ok;
	}
	return rep;
}

struct LimitPair {
	QSeries<Int> lhs;
	QSeries<Int> rhs;
};

/* Which of the seven limiting cases of Bailey's Lemma apply to a pair:
 *   1: always.  2: needs sqrt(aq) an integral q-power (a = q^{odd}).
 *   3: needs a = q^{e}, e >= 1 (the (1-a)/(1-aq^{2n}) weight degenerates at
 *      a = 1).  4,5,6: always.  7: needs the pair parameter of the form
 *      a^2 q, i.e. an odd power q^{2e+1}. */
inline bool bailey_variant_applicable(const BaileyPair &pair, int variant)
{
	const int64_t e = pair.param.exponent;
	if (pair.param.sign != 1) return false;
	switch (variant) {
	case 1: case 4: case 5: case 6: return true;
	case 2: return e % 2 == 1;
	case 3: return e >= 1;
	case 7: return e % 2 == 1;
	default: return false;
	}
}

/* Computes both sides of limiting case `variant` (equations (1)-(7) of the
 * section-3 lemma) independently, truncated at N. */
inline LimitPair bailey_limit(const BaileyPair &pair, int variant, int64_t N)
{
	if (!bailey_variant_applicable(pair, variant))
		throw std::invalid_argument("bailey_limit: variant not applicable to pair");
	const int64_t e = pair.param.exponent; // a = q^e

	auto beta_terms = [&](auto weight_val, auto make_term) {
		QSeries<Int> lhs(N);
		QSeries<Int> beta = QSeries<Int>::one(N);
		for (int64_t n = 0;; ++n) {
			if (n > 0) {
				for (int64_t f : pair.beta_new_factors(n))
					beta.div_one_minus(Int(1), f);
			}
			const int64_t v = weight_val(n) + pair.beta_shift(n);
			if (v > N) break;
			QSeries<Int> t = make_term(n, beta);
			t.shift_up(pair.beta_shift(n));
			if (pair.beta_sign(n) < 0) t.scale(Int(-1));
			lhs += t;
		}
		return lhs;
	};

	auto alpha_sum = [&](auto exponent_of, auto coeff_sign) {
		QSeries<Int> s(N);
		for (int64_t n = 0;; ++n) {
			const int64_t av = pair.alpha_val(n);
			if (av == kNoTerm) {
				if (exponent_of(n, 0) > N) break;
				continue;
			}
			if (exponent_of(n, av) > N) break;
			for (const auto &[c, ae] : pair.alpha(n)) {
				const int64_t full = exponent_of(n, ae);
				if (full <= N)
					s.add_term(full, coeff_sign(n) > 0 ? c : -c);
			}
		}
		return s;
	};

	auto plus1 = [](int64_t) { return 1; };
	auto alt = [](int64_t n) { return n % 2 == 0 ? 1 : -1; };

	switch (variant) {
	case 1: {
		/* sum a^n q^{n^2} beta_n = (aq;q)_infty^{-1} sum a^n q^{n^2} alpha_n */
		auto w = [&](int64_t n) { return n * n + e * n; };
		QSeries<Int> lhs = beta_terms(w, [&](int64_t n, const QSeries<Int> &b) {
			QSeries<Int> t = b;
			t.shift_up(w(n));
			return t;
		});
		QSeries<Int> rhs = alpha_sum(
		    [&](int64_t n, int64_t ae) { return w(n) + ae; }, plus1);
		rhs *= poch_infinite(qpow(e + 1), 1, N).invert();
		return {lhs, rhs};
	}
	case 2: {
		/* rho_1 -> infty, rho_2 = -sqrt(aq): needs sqrt(aq) = q^{(e+1)/2}. */
		const int64_t h = (e + 1) / 2;
		auto w = [&](int64_t n) { return n * (n + e) / 2; };
		QSeries<Int> lhs = beta_terms(w, [&](int64_t n, const QSeries<Int> &b) {
			QSeries<Int> t = poch_finite(neg_qpow(h), 1, n, N) * b;
			t.shift_up(w(n));
			return t;
		});
		QSeries<Int> rhs = alpha_sum(
		    [&](int64_t n, int64_t ae) { return w(n) + ae; }, plus1);
		rhs *= poch_infinite(neg_qpow(h), 1, N);
		rhs *= poch_infinite(qpow(e + 1), 1, N).invert();
		return {lhs, rhs};
	}
	case 3: {
		/* rho_1 = sqrt a, rho_2 = -sqrt a. */
		auto w = [](int64_t n) { return n; };
		QSeries<Int> lhs = beta_terms(w, [&](int64_t n, const QSeries<Int> &b) {
			QSeries<Int> t = poch_finite(qpow(e), 2, n, N) * b;
			t.shift_up(n);
			if (n % 2 != 0) t.scale(Int(-1));
			return t;
		});
		QSeries<Int> rhs(N);
		for (int64_t n = 0;; ++n) {
			const int64_t av = pair.alpha_val(n);
			if (n > N) break;
			if (av == kNoTerm || n + av > N) continue;
			/* (1-a)/(1-a q^{2n}) (-1)^n q^n alpha_n; the n = 0 weight is 1. */
			QSeries<Int> t = pair.alpha_series(n, N);
			t.shift_up(n);
			if (n % 2 != 0) t.scale(Int(-1));
			if (n > 0) {
				t.mul_one_minus(Int(1), e);
				t.div_one_minus(Int(1), e + 2 * n);
			}
			rhs += t;
		}
		rhs *= poch_infinite(qpow(e + 2), 2, N);
		rhs *= poch_infinite(qpow(e + 1), 1, N).invert();
		rhs *= poch_infinite(neg_qpow(1), 1, N).invert();
		return {lhs, rhs};
	}
	case 4: {
		auto w = [](int64_t n) { return n; };
		QSeries<Int> lhs = beta_terms(w, [&](int64_t n, const QSeries<Int> &b) {
			QSeries<Int> t = b;
			t.shift_up(n);
			return t;
		});
		QSeries<Int> rhs(N);
		for (int64_t r = 0;; ++r) {
			const int64_t av = pair.alpha_val(r);
			if (r > N) break;
			if (av == kNoTerm || av + r > N) continue;
			for (const auto &[c, ae] : pair.alpha(r)) {
				for (int64_t n = 0;; ++n) {
					/* (-a)^n q^{n(n+1)/2 + 2nr + r} alpha_r with a = q^e. */
					const int64_t ex = n * (n + 1) / 2 + e * n + 2 * n * r + r + ae;
					if (ex > N) break;
					rhs.add_term(ex, n % 2 == 0 ? c : -c);
				}
			}
		}
		rhs *= poch_infinite(qpow(e + 1), 1, N).invert();
		rhs *= poch_infinite(qpow(1), 1, N).invert();
		return {lhs, rhs};
	}
	case 5: {
		auto w = [](int64_t n) { return 2 * n; };
		QSeries<Int> lhs = beta_terms(w, [&](int64_t n, const QSeries<Int> &b) {
			QSeries<Int> t = b;
			t.shift_up(2 * n);
			return t;
		});
		QSeries<Int> rhs(N);
		for (int64_t r = 0;; ++r) {
			const int64_t av = pair.alpha_val(r);
			if (r > N) break;
			if (av == kNoTerm || av + 2 * r > N) continue;
			for (const auto &[c, ae] : pair.alpha(r)) {
				if (2 * r + ae <= N) rhs.add_term(2 * r + ae, c);
				for (int64_t n = 1;; ++n) {
					/* (-1)^n a^{n-1} q^{n(n+1)/2 + 2nr} (1 + a q^{2r}) alpha_r */
					const int64_t base =
					    n * (n + 1) / 2 + e * (n - 1) + 2 * n * r + ae;
					if (base > N) break;
					const Int cc = (n % 2 == 0) ? c : -c;
					rhs.add_term(base, cc);
					if (base + e + 2 * r <= N) rhs.add_term(base + e + 2 * r, cc);
				}
			}
		}
		rhs *= poch_infinite(qpow(e + 1), 1, N).invert();
		rhs *= poch_infinite(qpow(1), 1, N).invert();
		return {lhs, rhs};
	}
	case 6: {
		auto w = [](int64_t n) { return 2 * n; };
		QSeries<Int> lhs = beta_terms(w, [&](int64_t n, const QSeries<Int> &b) {
			QSeries<Int> t = poch_finite(qpow(e + 1), 2, n, N) * b;
			t.shift_up(2 * n);
			return t;
		});
		QSeries<Int> rhs(N);
		for (int64_t r = 0;; ++r) {
			const int64_t av = pair.alpha_val(r);
			if (r > N) break;
			if (av == kNoTerm || av + 2 * r > N) continue;
			for (const auto &[c, ae] : pair.alpha(r)) {
				for (int64_t n = 0;; ++n) {
					/* (-a)^n q^{n^2+n+2nr+2r} (1 - q^{2n+2}) alpha_r */
					const int64_t base =
					    n * n + n + e * n + 2 * n * r + 2 * r + ae;
					if (base > N) break;
					const Int cc = (n % 2 == 0) ? c : -c;
					rhs.add_term(base, cc);
					if (base + 2 * n + 2 <= N) rhs.add_term(base + 2 * n + 2, -cc);
				}
			}
		}
		rhs *= poch_infinite(qpow(1), 1, N).invert();
		rhs *= poch_infinite(qpow(e + 2), 2, N).invert();
		QSeries<Int> onePlusQ = QSeries<Int>::one(N);
		onePlusQ.mul_one_minus(Int(-1), 1);
		rhs *= onePlusQ.invert();
		return {lhs, rhs};
	}
	case 7: {
		/* Pair relative to (a^2 q, q): parameter q^e with e = 2h+1, a = q^h. */
		const int64_t h = (e - 1) / 2;
		auto w = [](int64_t n) { return n; };
		QSeries<Int> lhs = beta_terms(w, [&](int64_t n, const QSeries<Int> &b) {
			QSeries<Int> t = poch_finite(neg_qpow(h + 1), 1, n, N) * b;
			t.shift_up(n);
			return t;
		});
		QSeries<Int> rhs(N);
		for (int64_t r = 0;; ++r) {
			const int64_t av = pair.alpha_val(r);
			if (r > N) break;
			if (av == kNoTerm || av + r > N) continue;
			for (const auto &[c, ae] : pair.alpha(r)) {
				for (int64_t n = 0;; ++n) {
					/* a^{3n} q^{n(3n+5)/2 + 3nr + r} (1 - a q^{n+r+1}) alpha_r */
					const int64_t base =
					    3 * h * n + n * (3 * n + 5) / 2 + 3 * n * r + r + ae;
					if (base > N) break;
					rhs.add_term(base, c);
					if (base + h + n + r + 1 <= N)
						rhs.add_term(base + h + n + r + 1, -c);
				}
			}
		}
		rhs *= poch_infinite(neg_qpow(h + 1), 1, N);
		rhs *= poch_infinite(qpow(1), 1, N).invert();
		rhs *= poch_infinite(qpow(2 * h + 2), 1, N).invert();
		return {lhs, rhs};
	}
	default:
		throw std::invalid_argument("bailey_limit: variant must be 1..7");
	}
}

struct LimitPairZ {
	ZQSeries lhs;
	ZQSeries rhs;
};

/* Bailey's Lemma with rho_1 = z, rho_2 = z^{-1} on a pair relative to (1,q):
 *   sum_{n>=0} (z,z^{-1};q)_n q^n beta_n
 *     = (zq, z^{-1}q;q)_infty / (q;q)_infty^2
 *       * sum_{n>=0} (1-z)(1-z^{-1}) q^n alpha_n / ((1-zq^n)(1-z^{-1}q^n)),
 * the n = 0 term of the right sum being alpha_0. */
inline LimitPairZ bailey_lemma_zz(const BaileyPair &pair, int64_t N)
{
	if (pair.param.exponent != 0 || pair.param.sign != 1)
		throw std::invalid_argument("bailey_lemma_zz: pair must be relative to (1,q)");

	/* Left side: Horner over (z,z^{-1};q)_n = prod_{j<n} (1-zq^j)(1-z^{-1}q^j),
	 * peeling one factor pair per step from the top index down. The running
	 * series is the unshifted 1/D_n, so no precision is ever shifted away. */
	int64_t top = 0;
	while (top + 1 + pair.beta_shift(top + 1) <= N) ++top;
	detail::BivarAccum acc(N);
	{
		QSeries<Int> dinv = QSeries<Int>::one(N);
		for (int64_t k = 1; k <= top; ++k)
			for (int64_t f : pair.beta_new_factors(k))
				dinv.div_one_minus(Int(1), f);
		for (int64_t n = top;; --n) {
			acc.add_scalar(n + pair.beta_shift(n), dinv, pair.beta_sign(n));
			if (n == 0) break;
			acc.multiply_one_minus(+1, n - 1);
			acc.multiply_one_minus(-1, n - 1);
			for (int64_t f : pair.beta_new_factors(n))
				dinv.mul_one_minus(Int(1), f);
		}
	}
	ZQSeries lhs = acc.to_series();

	detail::BivarAccum racc(N);
	racc.add_unit(); // alpha_0 = 1 for every (1,q) pair in the registry
	for (int64_t n = 1; n <= N; ++n) {
		const int64_t av = pair.alpha_val(n);
		if (av == kNoTerm || av + n > N) continue;
		detail::BivarAccum term(N);
		term.add_scalar(n, pair.alpha_series(n, N - n), 1);
		term.multiply_one_minus(+1, 0);
		term.multiply_one_minus(-1, 0);
		term.divide_one_minus(+1, n);
		term.divide_one_minus(-1, n);
		racc.add_series(term.to_series());
	}
	for (int64_t j = 1; j <= N; ++j) {
		racc.multiply_one_minus(+1, j);
		racc.multiply_one_minus(-1, j);
	}
	ZQSeries rhs = racc.to_series();
	QSeries<Int> qq = poch_infinite(qpow(1), 1, N).invert();
	rhs.mul_scalar_series(qq);
	rhs.mul_scalar_series(qq);
	return {lhs, rhs};
}

} // namespace qspt

#endif
