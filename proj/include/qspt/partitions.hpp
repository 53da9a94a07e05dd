#ifndef QSPT_PARTITIONS_HPP
#define QSPT_PARTITIONS_HPP

#include "int_types.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qspt {

/* Non-increasing sequence of positive integers. */
using Partition = std::vector<int64_t>;

/* Overpartition: a partition plus the set of part sizes whose first
 * occurrence is overlined (at most one overline per distinct size). */
struct Overpartition {
	Partition parts;
	std::vector<bool> overlined; // parallel to the distinct sizes of `parts`
	std::vector<int64_t> sizes;  // distinct sizes, decreasing
};

namespace enumerate {

/* All partitions of n with parts in [lo, hi] (hi < 0 means unbounded). */
inline void partitions_in_range(int64_t n, int64_t lo, int64_t hi,
                                const std::function<void(const Partition &)> &f)
{
	Partition cur;
	std::function<void(int64_t, int64_t)> rec = [&](int64_t rem, int64_t maxp) {
		if (rem == 0) {
			f(cur);
			return;
		}
		int64_t top = (hi >= 0) ? std::min(maxp, hi) : maxp;
		top = std::min(top, rem);
		for (int64_t p = top; p >= lo; --p) {
			cur.push_back(p);
			rec(rem - p, p);
			cur.pop_back();
		}
	};
	if (n == 0) {
		f(cur);
		return;
	}
	rec(n, n);
}

inline void partitions(int64_t n, const std::function<void(const Partition &)> &f)
{
	partitions_in_range(n, 1, -1, f);
}

inline void overpartitions(int64_t n,
                           const std::function<void(const Overpartition &)> &f)
{
	partitions(n, [&](const Partition &p) {
		Overpartition op;
		op.parts = p;
		for (int64_t v : p)
			if (op.sizes.empty() || op.sizes.back() != v) op.sizes.push_back(v);
		const size_t k = op.sizes.size();
		op.overlined.assign(k, false);
		for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
			for (size_t i = 0; i < k; ++i)
				op.overlined[i] = (mask >> i) & 1;
			f(op);
		}
	});
}

} // namespace enumerate

inline int64_t smallest_part(const Partition &p) { return p.back(); }
inline int64_t largest_part(const Partition &p) { return p.front(); }

inline int64_t smallest_multiplicity(const Partition &p)
{
	const int64_t s = p.back();
	int64_t m = 0;
	for (auto it = p.rbegin(); it != p.rend() && *it == s; ++it) ++m;
	return m;
}

inline Int partition_count(int64_t n)
{
	/* p(n) by the Euler recurrence with pentagonal numbers. */
	static std::vector<Int> cache{Int(1)};
	while (static_cast<int64_t>(cache.size()) <= n) {
		const int64_t m = static_cast<int64_t>(cache.size());
		Int s = 0;
		for (int64_t k = 1;; ++k) {
			const int64_t g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
			if (g1 > m) break;
			const Int sgn = (k % 2 == 1) ? 1 : -1;
			s += sgn * cache[m - g1];
			if (g2 <= m) s += sgn * cache[m - g2];
		}
		cache.push_back(s);
	}
	return cache[static_cast<size_t>(n)];
}

/* The weighted smallest-parts counts of the paper's three definitions, plus
 * the classical spt, sptbar and M2spt they refine. Everything here is honest
 * enumeration; the series side must reproduce these numbers. */
enum class SptKind { Plain, Bar, M2, A1, A3, A5, A7, C1, C5, E2, E4 };

inline const char *kind_name(SptKind k)
{
	switch (k) {
	case SptKind::Plain: return "plain";
	case SptKind::Bar: return "bar";
	case SptKind::M2: return "M2";
	case SptKind::A1: return "A1";
	case SptKind::A3: return "A3";
	case SptKind::A5: return "A5";
	case SptKind::A7: return "A7";
	case SptKind::C1: return "C1";
	case SptKind::C5: return "C5";
	case SptKind::E2: return "E2";
	case SptKind::E4: return "E4";
	}
	return "?";
}

inline SptKind kind_from_name(const std::string &s)
{
	for (SptKind k : {SptKind::Plain, SptKind::Bar, SptKind::M2, SptKind::A1,
	                  SptKind::A3, SptKind::A5, SptKind::A7, SptKind::C1,
	                  SptKind::C5, SptKind::E2, SptKind::E4})
		if (s == kind_name(k)) return k;
	throw std::invalid_argument("unknown spt kind: " + s);
}

inline bool kind_is_pair_based(SptKind k)
{
	return k == SptKind::A1 || k == SptKind::A3 || k == SptKind::A5 ||
	       k == SptKind::A7;
}

namespace detail_oracle {

/* Weighted count over the partition pairs PP of n: pi_1 nonempty, all parts
 * of pi_2 larger than s(pi_1) and no more than 2 s(pi_1). */
template <class W>
Int pp_weighted(int64_t n, W weight)
{
	Int total = 0;
	for (int64_t a = 1; a <= n; ++a) {
		enumerate::partitions(a, [&](const Partition &p1) {
			const int64_t s = smallest_part(p1);
			const int64_t m = smallest_multiplicity(p1);
			const Int w = weight(s, m);
			if (w == 0) return;
			enumerate::partitions_in_range(
			    n - a, s + 1, 2 * s, [&](const Partition &) { total += w; });
		});
	}
	return total;
}

/* Overpartitions whose smallest part is not overlined. */
template <class W>
Int pbar_weighted(int64_t n, W weight)
{
	Int total = 0;
	enumerate::overpartitions(n, [&](const Overpartition &op) {
		if (op.parts.empty()) return;
		if (op.overlined.back()) return; // smallest size overlined
		const int64_t s = op.parts.back();
		total += weight(s, smallest_multiplicity(op.parts));
	});
	return total;
}

} // namespace detail_oracle

inline Int oracle_spt(SptKind kind, int64_t n)
{
	const int64_t guard = kind_is_pair_based(kind) ? 32 : 40;
	if (n < 0 || n > guard)
		throw std::invalid_argument("oracle_spt: n outside enumeration guard");

	switch (kind) {
	case SptKind::Plain: {
		Int total = 0;
		enumerate::partitions(n, [&](const Partition &p) {
			if (!p.empty()) total += smallest_multiplicity(p);
		});
		return total;
	}
	case SptKind::Bar:
		return detail_oracle::pbar_weighted(
		    n, [](int64_t, int64_t m) { return Int(m); });
	case SptKind::M2: {
		/* Partitions without repeated odd parts and smallest part even. */
		Int total = 0;
		enumerate::partitions(n, [&](const Partition &p) {
			if (p.empty() || p.back() % 2 != 0) return;
			for (size_t i = 1; i < p.size(); ++i)
				if (p[i] == p[i - 1] && p[i] % 2 == 1) return;
			total += smallest_multiplicity(p);
		});
		return total;
	}
	case SptKind::A1:
		return detail_oracle::pp_weighted(
		    n, [](int64_t, int64_t m) { return Int(m); });
	case SptKind::A3:
		return detail_oracle::pp_weighted(
		    n, [](int64_t, int64_t m) { return Int(m - 1); });
	case SptKind::A5:
		return detail_oracle::pp_weighted(
		    n, [](int64_t s, int64_t m) { return Int(std::max<int64_t>(m - s, 0)); });
	case SptKind::A7:
		return detail_oracle::pp_weighted(n, [](int64_t s, int64_t m) {
			return Int(std::max<int64_t>(m - s + 1, 0));
		});
	case SptKind::C1: {
		/* All odd parts less than twice the smallest part. */
		Int total = 0;
		enumerate::partitions(n, [&](const Partition &p) {
			if (p.empty()) return;
			const int64_t s = p.back();
			for (int64_t v : p)
				if (v % 2 == 1 && v >= 2 * s) return;
			total += smallest_multiplicity(p);
		});
		return total;
	}
	case SptKind::C5: {
		Int c1 = oracle_spt(SptKind::C1, n);
		if (n % 2 == 0) c1 -= oracle_spt(SptKind::Plain, n / 2);
		return c1;
	}
	case SptKind::E2:
		return detail_oracle::pbar_weighted(n, [](int64_t s, int64_t m) {
			return (s % 2 == 0) ? Int(m) : Int(-m);
		});
	case SptKind::E4:
		return detail_oracle::pbar_weighted(
		    n, [](int64_t, int64_t m) { return Int(m - 1); });
	}
	throw std::invalid_argument("oracle_spt: unknown kind");
}

/* Exact statistic tables N(m,n) by brute force. */
inline std::map<int64_t, Int> oracle_rank_counts(int64_t n)
{
	std::map<int64_t, Int> out;
	enumerate::partitions(n, [&](const Partition &p) {
		const int64_t rank =
		    p.empty() ? 0 : largest_part(p) - static_cast<int64_t>(p.size());
		out[rank] += 1;
	});
	return out;
}

inline std::map<int64_t, Int> oracle_overline_rank_counts(int64_t n)
{
	std::map<int64_t, Int> out;
	enumerate::overpartitions(n, [&](const Overpartition &op) {
		const int64_t rank =
		    op.parts.empty()
		        ? 0
		        : largest_part(op.parts) - static_cast<int64_t>(op.parts.size());
		out[rank] += 1;
	});
	return out;
}

/* M2-rank of partitions without repeated odd parts: ceil(largest/2) - #parts. */
inline std::map<int64_t, Int> oracle_m2rank_counts(int64_t n)
{
	std::map<int64_t, Int> out;
	enumerate::partitions(n, [&](const Partition &p) {
		for (size_t i = 1; i < p.size(); ++i)
			if (p[i] == p[i - 1] && p[i] % 2 == 1) return;
		const int64_t rank =
		    p.empty() ? 0
		              : (largest_part(p) + 1) / 2 - static_cast<int64_t>(p.size());
		out[rank] += 1;
	});
	return out;
}

inline Int overpartition_count(int64_t n)
{
	Int c = 0;
	enumerate::overpartitions(n, [&](const Overpartition &) { c += 1; });
	return c;
}

} // namespace qspt

#endif
