#include "qspt/partitions.hpp"
#include "qspt/qseries.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qspt;

TEST_CASE("partition enumeration")
{
	int count4 = 0;
	enumerate::partitions(4, [&](const Partition &) { ++count4; });
	CHECK(count4 == 5);

	int count0 = 0;
	enumerate::partitions(0, [&](const Partition &p) {
		CHECK(p.empty());
		++count0;
	});
	CHECK(count0 == 1);

	int count10 = 0;
	enumerate::partitions(10, [&](const Partition &) { ++count10; });
	CHECK(count10 == 42);
	CHECK(partition_count(10) == 42);

	// Cross-check the recurrence against 1/(q;q)_infty.
	QSeries<Int> pgen = poch_infinite(qpow(1), 1, 30).invert();
	for (int64_t n = 0; n <= 30; ++n) CHECK(pgen.coeff(n) == partition_count(n));
}

TEST_CASE("overpartition enumeration")
{
	CHECK(overpartition_count(3) == 8);
	CHECK(overpartition_count(0) == 1);

	// Count for n = 8 equals the coefficient in (-q;q)_infty/(q;q)_infty.
	QSeries<Int> ogen = poch_infinite(neg_qpow(1), 1, 10) *
	                    poch_infinite(qpow(1), 1, 10).invert();
	CHECK(overpartition_count(8) == ogen.coeff(8));
	for (int64_t n = 0; n <= 10; ++n)
		CHECK(overpartition_count(n) == ogen.coeff(n));
}

TEST_CASE("spt oracles: the paper's spot values")
{
	CHECK(oracle_spt(SptKind::Plain, 4) == 10);
	CHECK(oracle_spt(SptKind::Bar, 3) == 6);
	CHECK(oracle_spt(SptKind::M2, 6) == 5);
	CHECK(oracle_spt(SptKind::A1, 2) == 3);
	CHECK(oracle_spt(SptKind::A1, 0) == 0);
	CHECK(oracle_spt(SptKind::Plain, 0) == 0);
}

TEST_CASE("rank statistics by brute force")
{
	auto r0 = oracle_rank_counts(0);
	CHECK(r0.size() == 1);
	CHECK(r0[0] == 1);

	for (int64_t n = 0; n <= 12; ++n) {
		Int total = 0;
		for (const auto &[m, c] : oracle_rank_counts(n)) total += c;
		CHECK(total == partition_count(n));
	}

	// Ranks are symmetric by conjugation.
	for (int64_t n = 0; n <= 12; ++n) {
		auto counts = oracle_rank_counts(n);
		for (const auto &[m, c] : counts) CHECK(counts[-m] == c);
	}
}

TEST_CASE("overline and M2 rank tables")
{
	auto o1 = oracle_overline_rank_counts(1);
	CHECK(o1[0] == 2); // 1 and overlined 1 both have rank 0

	auto o2 = oracle_overline_rank_counts(2);
	CHECK(o2[1] == 2);
	CHECK(o2[-1] == 2);

	auto m2 = oracle_m2rank_counts(2);
	CHECK(m2[0] == 1); // only the partition 2; 1+1 repeats an odd part

	Int total = 0;
	for (const auto &[m, c] : oracle_m2rank_counts(9)) total += c;
	// partitions of 9 without repeated odd parts: coefficient in
	// (-q;q^2)_infty / (q^2;q^2)_infty
	QSeries<Int> gen = poch_infinite(neg_qpow(1), 2, 12) *
	                   poch_infinite(qpow(2), 2, 12).invert();
	CHECK(total == gen.coeff(9));
}

TEST_CASE("enumeration guards")
{
	CHECK_THROWS(oracle_spt(SptKind::A1, 33));
	CHECK_THROWS(oracle_spt(SptKind::Plain, 41));
	CHECK_THROWS(oracle_spt(SptKind::Plain, -1));
}
