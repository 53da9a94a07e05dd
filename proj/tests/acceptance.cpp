/* Acceptance suite: one line per criterion, exact arithmetic throughout.
 * Runs the full identity registry at its default orders plus the large-order
 * scans (congruences to 1500, root-of-unity vanishing to 900/750/700, the
 * Corollary 7 relations to 600, oracle equivalence, nonnegativity). */

#include "qspt/identities.hpp"
#include "qspt/partitions.hpp"
#include "qspt/spt.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace qspt;

namespace {

struct Criterion {
	int number;
	bool pass;
	std::string text;
};

std::vector<Criterion> results;

void record(int number, bool pass, const std::string &text)
{
	results.push_back({number, pass, text});
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
	    .count();
}

bool subset_passes(const std::vector<VerifyReport> &reports,
                   const std::string &prefix, int expected, std::string &detail)
{
	int found = 0, failed = 0;
	for (const auto &r : reports) {
		if (r.id.rfind(prefix, 0) != 0) continue;
		++found;
		if (!r.pass) {
			++failed;
			detail += " " + r.id + (r.first_mismatch >= 0
			                            ? "@q^" + std::to_string(r.first_mismatch)
			                            : "");
		}
	}
	if (found != expected) {
		detail += " (expected " + std::to_string(expected) + " cases, found " +
		          std::to_string(found) + ")";
		return false;
	}
	return failed == 0;
}

} // namespace

int main()
{
	std::printf("qspt acceptance suite\n");

	/* Criterion 13 first, so the whole-registry timing is measured on cold
	 * caches; later criteria reuse the cached series. */
	auto t13 = std::chrono::steady_clock::now();
	std::vector<VerifyReport> reg =
	    IdentityRegistry::instance().verify_filter("");
	const double allSecs = seconds_since(t13);
	{
		int failed = 0;
		std::string bad;
		for (const auto &r : reg)
			if (!r.pass) {
				++failed;
				bad += " " + r.id;
			}
		char buf[256];
		std::snprintf(buf, sizeof buf,
		              "full registry (%zu cases) at default orders in %.1f s "
		              "(budget 600 s)%s",
		              reg.size(), allSecs, bad.c_str());
		record(13, failed == 0 && allSecs < 600.0, buf);
	}

	/* 1: Bailey pair definitions, n <= 40 at order 200, under 30 s. */
	{
		auto t0 = std::chrono::steady_clock::now();
		bool ok = true;
		std::string bad;
		for (const auto &pair : bailey_registry()) {
			PairReport rep = verify_pair(pair, 40, 200);
			if (!rep.all_pass) {
				ok = false;
				bad += " " + pair.name;
			}
		}
		const double secs = seconds_since(t0);
		char buf[256];
		std::snprintf(buf, sizeof buf,
		              "ten Bailey pairs satisfy the definition for n <= 40 at "
		              "order 200 in %.1f s (budget 30 s)%s",
		              secs, bad.c_str());
		record(1, ok && secs < 30.0, buf);
	}

	/* 2: every applicable (pair, variant) limiting case at order 200. */
	{
		bool ok = true;
		int combos = 0;
		std::string bad;
		for (const auto &pair : bailey_registry())
			for (int v = 1; v <= 7; ++v) {
				if (!bailey_variant_applicable(pair, v)) continue;
				++combos;
				LimitPair lr = bailey_limit(pair, v, 200);
				if (!(lr.lhs == lr.rhs)) {
					ok = false;
					bad += " " + pair.name + "/v" + std::to_string(v);
				}
			}
		char buf[256];
		std::snprintf(buf, sizeof buf,
		              "Bailey lemma transforms: %d (pair, variant) combinations "
		              "agree to order 200%s",
		              combos, bad.c_str());
		record(2, ok, buf);
	}

	/* 3: Theorem 1 congruences for n <= 1500 via the one-variable series. */
	{
		auto t0 = std::chrono::steady_clock::now();
		bool ok = true;
		std::string bad;
		for (const auto &c : congruence_registry()) {
			const QSeries<Int> &s = SeriesCache::instance().spt(c.family, 1500);
			for (int64_t n = c.residue; n <= 1500; n += c.modulus)
				if (s.coeff(n) % c.modulus != 0) {
					ok = false;
					bad += std::string(" ") + kind_name(c.family) + "@" +
					       std::to_string(n);
					break;
				}
		}
		const double secs = seconds_since(t0);
		char buf[256];
		std::snprintf(buf, sizeof buf,
		              "ten congruences hold for n <= 1500 in %.1f s "
		              "(budget 120 s)%s",
		              secs, bad.c_str());
		record(3, ok && secs < 120.0, buf);
	}

	/* 4: root-of-unity vanishing along the stated progressions. */
	{
		struct Scan {
			SptKind X;
			int p;
			int64_t r;
			int64_t N;
		};
		const std::vector<Scan> scans = {
		    {SptKind::A1, 3, 0, 900}, {SptKind::A3, 3, 1, 900},
		    {SptKind::E2, 3, 0, 900}, {SptKind::E4, 3, 1, 900},
		    {SptKind::A3, 5, 1, 750}, {SptKind::A5, 5, 4, 750},
		    {SptKind::A7, 5, 4, 750}, {SptKind::C1, 5, 3, 750},
		    {SptKind::C5, 5, 3, 750}, {SptKind::A5, 7, 1, 700}};
		bool ok = true;
		std::string bad;
		for (const auto &s : scans) {
			int64_t w = first_nonvanishing(s.X, s.p, s.r, s.N);
			if (w >= 0) {
				ok = false;
				bad += std::string(" ") + kind_name(s.X) + "/zeta" +
				       std::to_string(s.p) + "@" + std::to_string(w);
			}
		}
		record(4, ok,
		       "S_X(zeta_t,q) progression coefficients vanish to 900 (t=3), "
		       "750 (t=5), 700 (t=7)" + bad);
	}

	/* 5-8: registry subsets at their default orders. */
	{
		std::string d;
		bool ok = subset_passes(reg, "thm2.", 8, d);
		record(5, ok, "Theorem 2: eight bivariate identities at order 200" + d);
	}
	{
		std::string d;
		bool ok = subset_passes(reg, "cor3.", 4, d);
		record(6, ok, "Corollary 3: four Hecke-Rogers double sums at order 200" + d);
	}
	{
		std::string d;
		bool ok = subset_passes(reg, "cor4.", 4, d) &&
		          subset_passes(reg, "cor6.", 6, d);
		record(7, ok, "Corollaries 4 and 6: ten product identities at order 400" + d);
	}
	{
		std::string d;
		bool ok = subset_passes(reg, "thm5.", 4, d);
		record(8, ok,
		       "Theorem 5: four dissections at order 250 with progression "
		       "vanishing" + d);
	}

	/* 9: the 7-dissection of S_A5(zeta_7,q) plus vanishing to 700. */
	{
		std::string d;
		bool ok = subset_passes(reg, "sec4.a5zeta7", 1, d);
		int64_t w = first_nonvanishing(SptKind::A5, 7, 1, 700);
		if (w >= 0) {
			ok = false;
			d += " nonvanishing q^" + std::to_string(w);
		}
		record(9, ok,
		       "S_A5(zeta_7,q) 7-dissection at order 300; no q^{7N+1} terms "
		       "to 700" + d);
	}

	/* 10: Corollary 7 relations at order 600. */
	{
		bool ok = true;
		std::string d;
		for (const char *id : {"cor7.ns", "cor7.modd", "cor7.spteven",
		                       "cor7.sptodd"}) {
			VerifyReport r = IdentityRegistry::instance().verify(id, 600);
			if (!r.pass) {
				ok = false;
				d += std::string(" ") + id;
			}
		}
		/* Spot value from the introduction: spt(4) = 10. */
		const QSeries<Int> &plain = SeriesCache::instance().spt(SptKind::Plain, 300);
		if (plain.coeff(4) != 10) {
			ok = false;
			d += " spt(4) != 10";
		}
		record(10, ok, "Corollary 7: four C1/C5 relations to order 600" + d);
	}

	/* 11: oracle equivalence for all eleven kinds. */
	{
		bool ok = true;
		std::string d;
		for (SptKind k :
		     {SptKind::Plain, SptKind::Bar, SptKind::M2, SptKind::A1,
		      SptKind::A3, SptKind::A5, SptKind::A7, SptKind::C1, SptKind::C5,
		      SptKind::E2, SptKind::E4}) {
			const int64_t n_max = kind_is_pair_based(k) ? 24 : 30;
			QSeries<Int> s = spt_series(k, n_max);
			for (int64_t n = 0; n <= n_max; ++n)
				if (s.coeff(n) != oracle_spt(k, n)) {
					ok = false;
					d += std::string(" ") + kind_name(k) + "@" +
					     std::to_string(n);
					break;
				}
		}
		if (oracle_spt(SptKind::Plain, 4) != 10) ok = false;
		if (oracle_spt(SptKind::Bar, 3) != 6) ok = false;
		if (oracle_spt(SptKind::M2, 6) != 5) ok = false;
		record(11, ok,
		       "series == brute-force enumeration for every kind "
		       "(pairs to 24, others to 30; spt(4)=10, sptbar(3)=6, "
		       "M2spt(6)=5)" + d);
	}

	/* 12: nonnegativity: M_E4 is a theorem, M_C1/M_C5 a reported finding. */
	{
		std::vector<NegativeEntry> e4 = scan_negative(SptKind::E4, 300);
		bool ok = e4.empty();
		std::string d = ok ? std::string()
		                   : " M_E4(" + std::to_string(e4[0].m) + "," +
		                         std::to_string(e4[0].n) + ") < 0";
		std::vector<NegativeEntry> c1 = scan_negative(SptKind::C1, 200);
		std::vector<NegativeEntry> c5 = scan_negative(SptKind::C5, 200);
		d += "; conjecture scan: " + std::to_string(c1.size() + c5.size()) +
		     " negative M_C1/M_C5 entries for n <= 200 (finding, not failure)";
		record(12, ok, "M_E4(m,n) >= 0 for n <= 300" + d);
	}

	std::sort(results.begin(), results.end(),
	          [](const Criterion &a, const Criterion &b) {
		          return a.number < b.number;
	          });
	int failed = 0;
	for (const auto &c : results) {
		std::printf("CRITERION %2d: %s — %s\n", c.number,
		            c.pass ? "PASS" : "FAIL", c.text.c_str());
		if (!c.pass) ++failed;
	}
	std::printf("%zu/%zu acceptance criteria passed\n", results.size() - failed,
	            results.size());
	return failed == 0 ? 0 : 1;
}
