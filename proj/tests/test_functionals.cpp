#include "calbf/functionals.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace calbf;

namespace {

constexpr double pi = std::numbers::pi;

void fill(Field &A, unsigned mask, int ch, const std::function<double(double)> &fx)
{
	const Space &sp = A.sp;
	Field x = coordinate(sp, AX);
	double *c = A.ptr(sp.index_of(mask), ch);
	for (long p = 0; p < sp.npts(); ++p)
		c[p] = fx(x.v[p]);
}

} // namespace

TEST(Functionals, Normalization) { EXPECT_DOUBLE_EQ(cs_normalization(), 1 / (16 * pi * pi)); }

TEST(Functionals, CircleDistance)
{
	EXPECT_NEAR(circle_distance(0.9, 0.1), 0.2, 1e-15);
	EXPECT_NEAR(circle_distance(-0.25, 0.75), 0, 1e-15);
	EXPECT_NEAR(circle_distance(3.5, 0), 0.5, 1e-15);
	EXPECT_NEAR(make_action(-0.25).mod_one, 0.75, 1e-15);
}

TEST(Functionals, AbelianChernSimons)
{
	// A = t3 (p sin(2 pi x) dy + q cos(2 pi x) dtheta): A ^ dA = 2 pi p q dx^dy^dtheta, CS_k = k p q / (8 pi)
	LieAlgebra g(2);
	Space sp = Space::bundle(16, 16, 16, 0);
	Field A(sp, 1, 3);
	const double p = 0.7, q = -1.3;
	fill(A, 1u << AY, 2, [&](double x) { return p * std::sin(2 * pi * x); });
	fill(A, 1u << AT, 2, [&](double x) { return q * std::cos(2 * pi * x); });
	for (int k = 1; k <= 3; ++k)
		EXPECT_NEAR(cs_action(g, A, k).value, k * p * q / (8 * pi), 1e-12);
}

TEST(Functionals, DegreeOneHedgehog)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(48, 48, 48, 0);
	Field U = hedgehog(sp, 1);
	EXPECT_NEAR(winding_number(U), 1, 1e-3);
	EXPECT_NEAR(cs_action(g, maurer_cartan(g, U), 2).value, 2, 2e-3);
}

TEST(Functionals, CsVariation)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(16, 16, 16, 1);
	Rng rng(1);
	Field A = random_field(sp, 1, 3, rng), dA = random_field(sp, 1, 3, rng);
	double h = 1e-3;
	double fd = (cs_action(g, A + h * dA, 2).value - cs_action(g, A + (-h) * dA, 2).value) / (2 * h);
	EXPECT_NEAR(fd, cs_variation(g, A, dA, 2), 1e-6);
}

TEST(Functionals, BfActionIsMinusCs)
{
	LieAlgebra g(2);
	for (int d : {0, 1}) {
		Space b = Space::base(16, 16, 16, d);
		Rng rng(2);
		auto f = make_caloron(random_field(b, 1, 3, rng), random_field(b, 0, 3, rng));
		double cs = cs_action(g, cal_inverse(f).A, 3).value;
		EXPECT_NEAR(caloron_bf_action(g, make_lift(f), 3).value, -cs, 1e-6 * std::max(1.0, std::abs(cs))) << d;
		EXPECT_NEAR(cs_split_action(g, cal_inverse(f), 3), -cs, 1e-6 * std::max(1.0, std::abs(cs))) << d;
	}
}

TEST(Functionals, TwistShiftsAction)
{
	LieAlgebra g(2);
	Space b = Space::base(16, 16, 16, 0);
	Rng rng(3);
	auto lc = make_lift(make_caloron(random_field(b, 1, 3, rng), random_field(b, 0, 3, rng)));
	double s0 = caloron_bf_action(g, lc, 2).value;
	for (int n : {-2, 1, 3})
		EXPECT_NEAR(caloron_bf_action(g, lift_twist(lc, Field(b, 1, 1), n), 2).value - s0, n, 1e-12);
}

TEST(Functionals, MomentRatioIsFieldIndependent)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(16, 16, 16, 1);
	Field k = make_kappa(sp);
	Rng rng(4);
	for (int i = 0; i < 3; ++i) {
		Field a = project_horizontal(random_field(sp, 1, 3, rng), k);
		double r = bw_moment_square(g, bw_moment(g, a, k), k) / contact_cs_action(g, a, k, 2).value;
		EXPECT_NEAR(r, -8 * pi * pi, 1e-9);
	}
}

TEST(Functionals, MsvIdentityUntwisted)
{
	LieAlgebra g(2);
	Space b = Space::base3(16, 16, 8, 16, 0);
	Rng rng(5);
	auto f = make_caloron(random_field(b, 1, 3, rng), random_field(b, 0, 3, rng));
	EXPECT_LT(msv_identity(g, f, 2).rel(), 1e-12);
}

TEST(Functionals, PureGaugeSolvesFieldEquations)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(32, 32, 32, 0);
	Rng rng(6);
	FieldGen smooth;
	smooth.amplitude = 0.2;
	Field A = maurer_cartan(g, group_exp(g, random_field(sp, 0, 3, rng, smooth)));
	auto r = eom_residual(g, cal_forward(make_connection(A)));
	EXPECT_LT(r.bf, 1e-8);
	EXPECT_LT(r.bianchi, 1e-8);
}

TEST(Functionals, DescentRejectsTwistedBundle)
{
	LieAlgebra g(2);
	Space b = Space::base(8, 8, 8, 1);
	EXPECT_THROW(eom_descent(g, make_caloron(Field(b, 1, 3), Field(b, 0, 3))), std::invalid_argument);
}

TEST(Functionals, DescentFlattensSmallPerturbation)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(12, 12, 12, 0);
	Rng rng(7);
	Field A(sp, 1, 3);
	for (int c = 0; c < 3; ++c)
		fill(A, 1u << AT, c, [c](double) { return 2 * pi * (0.3 + 0.2 * c); });
	FieldGen small;
	small.amplitude = 0.02;
	A += random_field(sp, 1, 3, rng, small);
	DescentOptions opt;
	opt.target = 1e-6;
	auto r = eom_descent(g, cal_forward(make_connection(A)), opt);
	EXPECT_LT(r.flatness, 1e-6);
	EXPECT_LT(r.iterations, 500);
	// the energy never increases along the run
	EXPECT_GT(r.history.front(), r.history.back());
}

TEST(Functionals, WilsonLoopOfConstantConnection)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(8, 8, 16, 0);
	Field A(sp, 1, 3);
	const double c = 1.7;
	fill(A, 1u << AT, 2, [&](double) { return c; });
	// exp(-c t3) has trace 2 cos(c/2)
	EXPECT_NEAR(wilson_trace(g, A, 3, 5), 2 * std::cos(c / 2), 1e-13);
}

TEST(Functionals, WilsonOrbitConstantLoops)
{
	// g constant: both sides reduce to -<<alpha, g^{-1} phi g>>
	LieAlgebra g(2);
	const int n = 16;
	LoopElement phi(g, n), alpha(g, n);
	for (int j = 0; j < n; ++j) {
		phi.at(j)[0] = 0.5, phi.at(j)[2] = -0.2;
		alpha.at(j)[0] = 0.3, alpha.at(j)[1] = 0.1;
	}
	Mat h = exp_map(0.6 * g.generator(1));
	auto gl = loop_constant(h, n);
	Mat hp = h.adjoint() * phi.matrix(0) * h;
	double expect = -pair(alpha.matrix(0), hp);
	EXPECT_NEAR(wilson_orbit_rhs(gl, phi, alpha), expect, 1e-14);
	EXPECT_NEAR(wilson_orbit_lhs(gl, phi, alpha, 2), expect, 1e-14);
}
