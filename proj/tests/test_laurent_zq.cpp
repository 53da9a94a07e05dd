#include "qspt/zqseries.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qspt;

namespace {

ZQSeries random_zq(int64_t N, std::mt19937 &rng)
{
	std::uniform_int_distribution<int> e(-4, 4), c(-5, 5);
	ZQSeries s(N);
	for (int64_t n = 0; n <= N; ++n)
		for (int k = 0; k < 3; ++k)
			s.coeff_ref(n).add_term(e(rng), Int(c(rng)));
	return s;
}

} // namespace

TEST_CASE("Laurent polynomial arithmetic")
{
	ZLaurentPoly a = ZLaurentPoly::pair(1, -1);   // z + z^{-1}
	ZLaurentPoly b = ZLaurentPoly::term(1, Int(1));
	b.add_term(-1, Int(-1));                      // z - z^{-1}
	ZLaurentPoly prod = a * b;
	CHECK(prod.coeff(2) == 1);
	CHECK(prod.coeff(-2) == -1);
	CHECK(prod.coeff(0) == 0);

	CHECK((a * ZLaurentPoly{}).is_zero());

	// (1-z)(1-z^{-1}) = 2 - z - z^{-1}
	ZLaurentPoly f = ZLaurentPoly::constant(Int(1));
	f.add_term(1, Int(-1));
	ZLaurentPoly g = ZLaurentPoly::constant(Int(1));
	g.add_term(-1, Int(-1));
	ZLaurentPoly h = f * g;
	CHECK(h.coeff(0) == 2);
	CHECK(h.coeff(1) == -1);
	CHECK(h.coeff(-1) == -1);
}

TEST_CASE("geometric factor inverses")
{
	ZQSeries g = ZQSeries::geometric_factor_inverse(1, 2, 5);
	CHECK(g.extract(0, 0) == 1);
	CHECK(g.extract(1, 2) == 1);
	CHECK(g.extract(2, 4) == 1);
	CHECK(g.extract(1, 1) == 0);

	ZQSeries h = ZQSeries::geometric_factor_inverse(-1, 1, 3);
	CHECK(h.extract(-3, 3) == 1);
	CHECK(h.extract(-2, 2) == 1);
	CHECK(h.extract(2, 2) == 0);

	// product of the two kernels at e = 1: q^2 coefficient z^2 + 1 + z^{-2}
	// plus the cross term from lower layers.
	ZQSeries gp = ZQSeries::geometric_factor_inverse(1, 1, 4);
	ZQSeries gm = ZQSeries::geometric_factor_inverse(-1, 1, 4);
	ZQSeries prod = gp * gm;
	CHECK(prod.extract(2, 2) == 1);
	CHECK(prod.extract(-2, 2) == 1);
	CHECK(prod.extract(0, 2) == 1); // the single route z q * z^{-1} q

	CHECK_THROWS(ZQSeries::geometric_factor_inverse(1, 0, 4));
	CHECK_THROWS(ZQSeries::geometric_factor_inverse(2, 1, 4));
}

TEST_CASE("evaluations")
{
	ZQSeries s(3);
	s.coeff_ref(1) = ZLaurentPoly::pair(1, -1);
	s.coeff_ref(1).add_term(0, Int(-2)); // z - 2 + z^{-1} at q^1
	CHECK(s.eval_z1().coeff(1) == 0);

	ZQSeries c(2);
	c.coeff_ref(0) = ZLaurentPoly::constant(Int(7));
	CHECK(c.eval_z1().coeff(0) == 7);

	ZQSeries phi(2);
	phi.coeff_ref(0).add_term(0, Int(1));
	phi.coeff_ref(0).add_term(1, Int(1));
	phi.coeff_ref(0).add_term(2, Int(1));
	CHECK(phi.eval_root(3).coeff(0).is_zero());
	CHECK(!phi.eval_root(5).coeff(0).is_zero());
}

TEST_CASE("extraction")
{
	// (1-z)(1-z^{-1}) q
	ZQSeries s(2);
	s.coeff_ref(1).add_term(0, Int(2));
	s.coeff_ref(1).add_term(1, Int(-1));
	s.coeff_ref(1).add_term(-1, Int(-1));
	CHECK(s.extract(0, 1) == 2);
	CHECK(s.extract(5, 1) == 0);
	CHECK_THROWS(s.extract(0, 3));
}

TEST_CASE("evaluation commutes with ring operations")
{
	std::mt19937 rng(4242);
	for (int iter = 0; iter < 6; ++iter) {
		ZQSeries a = random_zq(8, rng), b = random_zq(8, rng);
		CHECK((a + b).eval_z1() == a.eval_z1() + b.eval_z1());
		CHECK((a * b).eval_z1() == a.eval_z1() * b.eval_z1());
		for (int p : {3, 5, 7}) {
			CHECK((a + b).eval_root(p) == a.eval_root(p) + b.eval_root(p));
			CHECK((a * b).eval_root(p) == a.eval_root(p) * b.eval_root(p));
		}
	}
}

TEST_CASE("coefficient extraction sums to the z = 1 value")
{
	std::mt19937 rng(17);
	ZQSeries a = random_zq(8, rng);
	for (int64_t n = 0; n <= 8; ++n) {
		Int total = 0;
		for (int64_t m = -6; m <= 6; ++m) total += a.extract(m, n);
		CHECK(total == a.eval_z1().coeff(n));
	}
}

TEST_CASE("in-place z factors match the series constructor")
{
	ZQSeries viaCtor = ZQSeries::geometric_factor_inverse(1, 3, 12);
	ZQSeries viaOp = ZQSeries::one(12);
	viaOp.div_one_minus_z(1, 3);
	CHECK(viaCtor == viaOp);

	// (1 - z q) * 1/(1 - z q) = 1
	ZQSeries t = ZQSeries::geometric_factor_inverse(1, 1, 9);
	t.mul_one_minus_z(1, 1);
	CHECK(t == ZQSeries::one(9));

	// e = 0 factor: multiply the constant row by (1 - z)
	ZQSeries u = ZQSeries::one(2);
	u.mul_one_minus_z(1, 0);
	CHECK(u.extract(0, 0) == 1);
	CHECK(u.extract(1, 0) == -1);
}

TEST_CASE("dense accumulator agrees with map operations")
{
	// Build (z,z^{-1};q)_infty both ways.
	const int64_t N = 25;
	ZQSeries viaAccum = zpoch_pair_infinite(0, 1, N);
	ZQSeries viaOps = ZQSeries::one(N);
	for (int64_t j = 0; j <= N; ++j) {
		viaOps.mul_one_minus_z(1, j);
		viaOps.mul_one_minus_z(-1, j);
	}
	CHECK(viaAccum == viaOps);
	CHECK(viaAccum.coeff(0) ==
	      (ZLaurentPoly::constant(Int(2)) - ZLaurentPoly::pair(1, -1)));
}

TEST_CASE("substitution and support")
{
	ZQSeries g = ZQSeries::geometric_factor_inverse(1, 1, 6);
	ZQSeries g2 = g.substitute_power(2);
	CHECK(g2.extract(1, 2) == 1);
	CHECK(g2.extract(1, 1) == 0);
	CHECK(g.support_within(0));
	CHECK(g.palindromic_all() == false);

	ZQSeries sym = g * ZQSeries::geometric_factor_inverse(-1, 1, 6);
	CHECK(sym.palindromic_all());
}
