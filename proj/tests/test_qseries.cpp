#include "qspt/partitions.hpp"
#include "qspt/qseries.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qspt;

namespace {

QSeries<Int> geometric(int64_t N)
{
	QSeries<Int> g = QSeries<Int>::one(N);
	g.div_one_minus(Int(1), 1);
	return g;
}

} // namespace

TEST_CASE("series arithmetic basics")
{
	const int64_t N = 12;
	QSeries<Int> oneMinusQ = QSeries<Int>::one(N);
	oneMinusQ.mul_one_minus(Int(1), 1);
	CHECK(oneMinusQ * geometric(N) == QSeries<Int>::one(N));

	QSeries<Int> a(5), b(9);
	CHECK((a * b).order() == 5);
	CHECK((a + b).order() == 5);

	QSeries<Int> euler = poch_infinite(qpow(1), 1, N);
	CHECK(euler * euler.invert() == QSeries<Int>::one(N));
}

TEST_CASE("inversion")
{
	const int64_t N = 40;
	QSeries<Int> oneMinusQ = QSeries<Int>::one(N);
	oneMinusQ.mul_one_minus(Int(1), 1);
	CHECK(oneMinusQ.invert() == geometric(N));

	QSeries<Int> pgen = poch_infinite(qpow(1), 1, N).invert();
	CHECK(pgen.coeff(4) == 5);
	for (int64_t n = 0; n <= N; ++n)
		CHECK(pgen.coeff(n) == partition_count(n));

	QSeries<Int> noUnit(4);
	noUnit.add_term(1, Int(1));
	CHECK_THROWS(noUnit.invert());
}

TEST_CASE("substitute power")
{
	QSeries<Int> s = QSeries<Int>::one(9);
	s.add_term(1, Int(1)); // 1 + q
	QSeries<Int> cubed = s.substitute_power(3);
	CHECK(cubed.coeff(0) == 1);
	CHECK(cubed.coeff(3) == 1);
	CHECK(cubed.coeff(1) == 0);

	QSeries<Int> pent = poch_infinite(qpow(1), 1, 20).substitute_power(2);
	for (int64_t n = 1; n <= 20; n += 2) CHECK(pent.coeff(n) == 0);

	QSeries<Int> p2 = poch_infinite(qpow(2), 2, 20).invert();
	CHECK(p2.coeff(8) == 5); // p(4)
}

TEST_CASE("finite Pochhammer symbols")
{
	const int64_t N = 10;
	CHECK(poch_finite(qpow(1), 1, 0, N) == QSeries<Int>::one(N));

	QSeries<Int> p2 = poch_finite(qpow(1), 1, 2, N); // (q;q)_2
	CHECK(p2.coeff(0) == 1);
	CHECK(p2.coeff(1) == -1);
	CHECK(p2.coeff(2) == -1);
	CHECK(p2.coeff(3) == 1);

	QSeries<Int> m2 = poch_finite(neg_qpow(1), 1, 2, N); // (-q;q)_2
	CHECK(m2.coeff(0) == 1);
	CHECK(m2.coeff(1) == 1);
	CHECK(m2.coeff(2) == 1);
	CHECK(m2.coeff(3) == 1);

	CHECK_THROWS(poch_finite(qpow(0), 1, 2, N)); // (1;q)_2 = 0
}

TEST_CASE("infinite Pochhammer products")
{
	QSeries<Int> euler = poch_infinite(qpow(1), 1, 8);
	const long expect[] = {1, -1, -1, 0, 0, 1, 0, 1, 0};
	for (int64_t n = 0; n <= 8; ++n) CHECK(euler.coeff(n) == expect[n]);

	QSeries<Int> odd = poch_infinite(qpow(1), 2, 4);
	CHECK(odd.coeff(0) == 1);
	CHECK(odd.coeff(1) == -1);
	CHECK(odd.coeff(2) == 0);
	CHECK(odd.coeff(3) == -1);
	CHECK(odd.coeff(4) == 1);

	// Euler splitting: (-q;q) (q;q^2) (q^2;q^2) / (q;q) = 1
	const int64_t N = 30;
	QSeries<Int> lhs = poch_infinite(neg_qpow(1), 1, N) *
	                   poch_infinite(qpow(1), 2, N) *
	                   poch_infinite(qpow(2), 2, N) *
	                   poch_infinite(qpow(1), 1, N).invert();
	CHECK(lhs == QSeries<Int>::one(N));

	CHECK_THROWS(poch_infinite(qpow(0), 1, 5));
	// (-1; q)_infty is fine: leading factor 2
	CHECK(poch_infinite(neg_qpow(0), 1, 5).coeff(0) == 2);
}

TEST_CASE("jacprod")
{
	QSeries<Int> j = jacprod(1, 2, 3);
	CHECK(j.coeff(0) == 1);
	CHECK(j.coeff(1) == -2);
	CHECK(j.coeff(2) == 1);
	CHECK(j.coeff(3) == -2);

	CHECK(jacprod(2, 7, 25) == jacprod(5, 7, 25));
	CHECK_THROWS(jacprod(7, 7, 10));
	CHECK_THROWS(jacprod(9, 7, 10));
}

TEST_CASE("theta expansions")
{
	QSeries<Int> sq = theta_jtp(1, 12);
	CHECK(sq.coeff(0) == 1);
	CHECK(sq.coeff(1) == -2);
	CHECK(sq.coeff(4) == 2);
	CHECK(sq.coeff(9) == -2);
	CHECK(sq.coeff(2) == 0);

	CHECK(theta_jtp(2, 15).is_zero());

	CHECK(theta_jtp(3, 40) == poch_infinite(qpow(1), 1, 40));
}

TEST_CASE("lambert sums")
{
	// Only n = 0 reaches order 9: 1/(1-q^{10}) == 1 there.
	QSeries<Int> l = lambert_sum(
	    9, [](int64_t n) { return 75 * n * (n + 1); },
	    [](int64_t n) { return 50 * n + 10; });
	CHECK(l == QSeries<Int>::one(9));

	// 9n^2+9n / (9n+3): n=0 gives 1/(1-q^3), n=-1 canonicalizes to
	// -q^6/(1-q^6); up to order 17 nothing else contributes.
	QSeries<Int> e4 = lambert_sum(
	    17, [](int64_t n) { return 9 * n * n + 9 * n; },
	    [](int64_t n) { return 9 * n + 3; });
	QSeries<Int> expect(17);
	for (int64_t k = 0; k <= 17; k += 3) expect.add_term(k, Int(1));
	for (int64_t k = 6; k <= 17; k += 6) expect.add_term(k, Int(-1));
	CHECK(e4 == expect);

	CHECK_THROWS(lambert_sum(
	    9, [](int64_t n) { return n * n; }, [](int64_t n) { return n; }));

	// Padding invariance: widening the stored order and truncating back
	// changes nothing.
	QSeries<Int> wide = lambert_sum(
	    40, [](int64_t n) { return 9 * n * n + 9 * n; },
	    [](int64_t n) { return 9 * n + 3; });
	for (int64_t n = 0; n <= 17; ++n) CHECK(wide.coeff(n) == e4.coeff(n));
}

TEST_CASE("series over cyclotomic coefficients")
{
	const int64_t N = 20;
	QSeries<CycInt> a = to_cyc(poch_infinite(qpow(1), 1, N));
	CHECK(a * a.invert() == QSeries<CycInt>::one(N));

	// (zeta q; q)_infty (zeta^{-1} q; q)_infty over Z[zeta_3] equals
	// (q^3;q^3)_infty / (q;q)_infty by the cubic factorization.
	QSeries<CycInt> prod = QSeries<CycInt>::one(N);
	for (int64_t j = 1; j <= N; ++j) {
		prod.mul_one_minus(CycInt::zeta_pow(3, 1), j);
		prod.mul_one_minus(CycInt::zeta_pow(3, -1), j);
	}
	QSeries<Int> expect =
	    poch_infinite(qpow(3), 3, N) * poch_infinite(qpow(1), 1, N).invert();
	CHECK(prod == to_cyc(expect));
}
