#include "qspt/spt.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qspt;

namespace {

const std::vector<SptKind> kAllFamilies = {
    SptKind::A1, SptKind::A3, SptKind::A5, SptKind::A7,
    SptKind::C1, SptKind::C5, SptKind::E2, SptKind::E4};

const std::vector<SptKind> kAllKinds = {
    SptKind::Plain, SptKind::Bar, SptKind::M2, SptKind::A1,
    SptKind::A3,    SptKind::A5,  SptKind::A7, SptKind::C1,
    SptKind::C5,    SptKind::E2,  SptKind::E4};

} // namespace

TEST_CASE("spt series match the brute-force oracles")
{
	for (SptKind k : kAllKinds) {
		const int64_t n_max = kind_is_pair_based(k) ? 16 : 20;
		QSeries<Int> s = spt_series(k, n_max);
		INFO(kind_name(k));
		for (int64_t n = 0; n <= n_max; ++n) {
			INFO(n);
			CHECK(s.coeff(n) == oracle_spt(k, n));
		}
	}
	CHECK(spt_series(SptKind::Plain, 4).coeff(4) == 10);
	CHECK(spt_series(SptKind::A1, 2).coeff(1) == 1);
}

TEST_CASE("production builder equals the literal displayed forms")
{
	for (SptKind k : kAllKinds) {
		INFO(kind_name(k));
		CHECK(spt_series(k, 120) == spt_series_literal(k, 120));
	}
}

TEST_CASE("z = 1 evaluation of the crank series is the spt series")
{
	for (SptKind k : kAllKinds) {
		INFO(kind_name(k));
		CHECK(spt_crank_series(k, 60).eval_z1() == spt_series(k, 60));
	}
}

TEST_CASE("root evaluation agrees between the two construction paths")
{
	for (SptKind k : kAllFamilies)
		for (int p : {3, 5, 7}) {
			INFO(kind_name(k) << " p=" << p);
			CHECK(spt_crank_series(k, 60).eval_root(p) ==
			      spt_crank_root_series(k, p, 60));
		}
}

TEST_CASE("crank coefficients are palindromic with bounded support")
{
	for (SptKind k : kAllFamilies) {
		ZQSeries s = spt_crank_series(k, 50);
		INFO(kind_name(k));
		CHECK(s.palindromic_all());
		CHECK(s.support_within(1));
	}
}

TEST_CASE("cleared series equals the literal infinite-product clearing")
{
	const int64_t N = 60;
	ZQSeries zpoch = zpoch_pair_infinite(0, 1, N);
	for (SptKind k : kAllFamilies) {
		INFO(kind_name(k));
		CHECK(cleared_crank_series(k, N) == zpoch * spt_crank_series(k, N));
	}
	// The q^2-modulus case as well (S2 feeds the M2 oracle relation).
	CHECK(cleared_crank_series(SptKind::M2, N) ==
	      zpoch_pair_infinite(0, 2, N) * spt_crank_series(SptKind::M2, N));
}

TEST_CASE("C1 and C5 agree at odd powers")
{
	ZQSeries c1 = spt_crank_series(SptKind::C1, 41);
	ZQSeries c5 = spt_crank_series(SptKind::C5, 41);
	for (int64_t n = 1; n <= 41; n += 2) CHECK(c1.coeff(n) == c5.coeff(n));
}

TEST_CASE("m-coefficient and residue extraction")
{
	const int64_t N = 30;
	for (SptKind k : kAllFamilies) {
		const QSeries<Int> &s = SeriesCache::instance().spt(k, N);
		for (int64_t n = 1; n <= N; ++n) {
			Int total = 0;
			for (int64_t j = 0; j < 5; ++j) total += m_residue(k, j, 5, n, N);
			CHECK(total == s.coeff(n));
			CHECK(m_coeff(k, n + 2, n, N) == 0);
			CHECK(m_coeff(k, -n - 2, n, N) == 0);
		}
	}
}

TEST_CASE("congruence scans")
{
	// (A5, 5, 4): both verdicts hold.
	CongruenceReport good = congruence_check(SptKind::A5, 5, 4, 120);
	CHECK(good.series_pass);
	CHECK(good.root_checked);
	CHECK(good.root_pass);

	// (C1, 5, 3): the dissection-only congruence still vanishes at the root.
	CongruenceReport c1 = congruence_check(SptKind::C1, 5, 3, 100);
	CHECK(c1.series_pass);
	CHECK(c1.root_pass);

	// Negative control: (A1, 3, 1) fails quickly.
	CongruenceReport bad = congruence_check(SptKind::A1, 3, 1, 60);
	CHECK(!bad.series_pass);
	CHECK(bad.series_witness >= 0);
	CHECK(!bad.root_pass);

	// Non-cyclotomic modulus: verdict (ii) is skipped, reported as such.
	CongruenceReport skip = congruence_check(SptKind::A1, 4, 0, 20);
	CHECK(!skip.root_checked);
}

TEST_CASE("rank and crank generating functions")
{
	const int64_t N = 24;
	ZQSeries rank = rank_series(N);
	for (int64_t n = 0; n <= 18; ++n) {
		auto counts = oracle_rank_counts(n);
		for (const auto &[m, c] : counts) {
			INFO("n=" << n << " m=" << m);
			CHECK(rank.extract(m, n) == c);
		}
		CHECK(rank.eval_z1().coeff(n) == partition_count(n));
	}

	ZQSeries crank = crank_series(N);
	CHECK(crank.eval_z1().coeff(4) == 5);
	// The classical q^1 anomaly: M(0,1) = -1, M(+-1,1) = 1.
	CHECK(crank.extract(0, 1) == -1);
	CHECK(crank.extract(1, 1) == 1);
	CHECK(crank.extract(-1, 1) == 1);

	// Residual overpartition crank at z = 1 counts overpartitions.
	ZQSeries rc = residual_crank_series(ResidualCrank::Overpartition, N);
	CHECK(rc.extract(0, 0) == 1);
	QSeries<Int> z1 = rc.eval_z1();
	for (int64_t n = 0; n <= 10; ++n) CHECK(z1.coeff(n) == overpartition_count(n));
}

TEST_CASE("overline rank matches enumeration")
{
	const int64_t N = 14;
	ZQSeries obar = overline_rank_series(N);
	for (int64_t n = 0; n <= N; ++n) {
		auto counts = oracle_overline_rank_counts(n);
		for (const auto &[m, c] : counts) CHECK(obar.extract(m, n) == c);
		CHECK(obar.eval_z1().coeff(n) == overpartition_count(n));
	}
}

TEST_CASE("the M2-rank relation from the introduction")
{
	// (1-z)(1-z^{-1}) S2(z,q) + (-q;q^2)_infty C(z,q^2) generates the M2-rank
	// of partitions without repeated odd parts.
	const int64_t N = 14;
	ZLaurentPoly pref = ZLaurentPoly::constant(Int(2)) - ZLaurentPoly::pair(1, -1);
	ZQSeries lhs = spt_crank_series(SptKind::M2, N);
	lhs.mul_lpoly(pref);
	ZQSeries res = crank_series(N).substitute_power(2);
	res.mul_scalar_series(poch_infinite(neg_qpow(1), 2, N));
	lhs += res;
	for (int64_t n = 0; n <= N; ++n) {
		auto counts = oracle_m2rank_counts(n);
		ZLaurentPoly expect;
		for (const auto &[m, c] : counts) expect.add_term(m, c);
		INFO(n);
		CHECK(lhs.coeff(n) == expect);
	}
}

TEST_CASE("the overpartition rank relation from the introduction")
{
	const int64_t N = 14;
	ZLaurentPoly pref = ZLaurentPoly::constant(Int(2)) - ZLaurentPoly::pair(1, -1);
	ZQSeries lhs = spt_crank_series(SptKind::Bar, N);
	lhs.mul_lpoly(pref);
	lhs += residual_crank_series(ResidualCrank::Overpartition, N);
	CHECK(lhs == overline_rank_series(N));
}
