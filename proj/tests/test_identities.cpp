#include "qspt/identities.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qspt;

namespace {

void expect_pass(const std::string &id, int64_t order)
{
	VerifyReport rep = IdentityRegistry::instance().verify(id, order);
	INFO(rep.id << " at order " << rep.order << " note: " << rep.note
	            << " mismatch: " << rep.first_mismatch);
	CHECK(rep.pass);
}

} // namespace

TEST_CASE("registry sanity")
{
	const auto &cases = IdentityRegistry::instance().cases();
	CHECK(cases.size() >= 50);
	CHECK(IdentityRegistry::instance().find("eqintro1") != nullptr);
	CHECK(IdentityRegistry::instance().find("nope") == nullptr);
	CHECK_THROWS_AS(IdentityRegistry::instance().verify("nope"),
	                std::invalid_argument);
}

TEST_CASE("section 1 and section 5 identities at reduced order")
{
	expect_pass("eqintro1", 90);
	expect_pass("prop5.diff.C1", 80);
	expect_pass("prop5.diff.C5", 80);
	expect_pass("prop5.diff.E2", 80);
	expect_pass("prop5.diff.E4", 80);
	expect_pass("prop5.r2rel", 80);
}

TEST_CASE("first forms at reduced order")
{
	for (const char *id : {"firstforms.A1", "firstforms.A5", "firstforms.C1",
	                       "firstforms.C5", "firstforms.E2", "firstforms.E4"})
		expect_pass(id, 70);
}

TEST_CASE("Theorem 2 at reduced order")
{
	for (const char *id : {"thm2.A1", "thm2.A3", "thm2.A5", "thm2.A7",
	                       "thm2.C1", "thm2.C5", "thm2.E2", "thm2.E4"})
		expect_pass(id, 70);
}

TEST_CASE("Hecke-Rogers forms at reduced order")
{
	for (const char *id : {"cor3.A1", "cor3.A3", "cor3.C1", "cor3.E4"})
		expect_pass(id, 70);
}

TEST_CASE("product identities at reduced order")
{
	for (const char *id : {"cor4.A5", "cor4.A7", "cor4.C5", "cor4.E2"})
		expect_pass(id, 80);
	for (int p = 1; p <= 6; ++p)
		expect_pass("cor6.p" + std::to_string(p), 120);
}

TEST_CASE("C1/C5 relations at reduced order")
{
	for (const char *id : {"cor7.ns", "cor7.modd", "cor7.spteven", "cor7.sptodd"})
		expect_pass(id, 90);
}

TEST_CASE("finite expansion and first double series")
{
	expect_pass("prop41", 60);
	for (const char *id : {"prop31.A1", "prop31.A3", "prop31.C1", "prop31.E4"})
		expect_pass(id, 70);
}

TEST_CASE("dissections at reduced order")
{
	for (const char *id : {"thm5.C1", "thm5.C5", "thm5.E2", "thm5.E4",
	                       "sec4.a5zeta7", "prop5.diss.rank5",
	                       "prop5.diss.crank5", "prop5.diss.r1zeta3",
	                       "prop5.diss.ocrank3", "prop5.diss.oddcrank5",
	                       "prop5.diss.r2zeta3"})
		expect_pass(id, 110);
}

TEST_CASE("auxiliary product identities")
{
	expect_pass("aux.gauss", 120);
	expect_pass("aux.lemma39", 100);
	expect_pass("aux.rodseth", 120);
	expect_pass("aux.lo1", 100);
	expect_pass("aux.pentagonal49", 150);
	expect_pass("e4.sptbar", 120);
}

TEST_CASE("verification failures are detected and located")
{
	// A deliberately corrupted comparison: S_A1 against the A3 right side
	// must fail, and the smallest mismatching exponent must be reported.
	ZQSeries lhs = SeriesCache::instance().cleared(SptKind::A1, 40);
	lhs.mul_lpoly(detail_id::one_plus_z());
	ZQSeries rhs = detail_id::thm2_rhs(SptKind::A3, 40);
	CaseResult r = detail_id::from_zq(lhs, rhs);
	CHECK(!r.pass);
	CHECK(r.first_mismatch >= 0);

	ZQSeries rhsGood = detail_id::thm2_rhs(SptKind::A1, 40);
	CHECK(detail_id::from_zq(lhs, rhsGood).pass);
}

TEST_CASE("prefix stability of a registry case")
{
	VerifyReport small = IdentityRegistry::instance().verify("thm2.C5", 50);
	VerifyReport big = IdentityRegistry::instance().verify("thm2.C5", 100);
	CHECK(small.pass);
	CHECK(big.pass);
}

TEST_CASE("filtered runs")
{
	auto reports = IdentityRegistry::instance().verify_filter("cor6", 80);
	CHECK(reports.size() == 6);
	for (const auto &r : reports) CHECK(r.pass);

	auto all = IdentityRegistry::instance().verify_filter("thm5", 60);
	CHECK(all.size() == 4);
}
