#include "calbf/gauge.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace calbf;

namespace {

constexpr double pi = std::numbers::pi;

Field abelian_group(const LieAlgebra &g, const Space &sp, const std::function<double(double)> &f)
{
	Field xi(sp, 0, g.dim());
	Field x = coordinate(sp, AX);
	for (long p = 0; p < sp.npts(); ++p)
		xi.ptr(0, 2)[p] = f(x.v[p]);
	return group_exp(g, xi);
}

FieldGen theta_const()
{
	FieldGen g;
	g.theta_const = true;
	return g;
}

} // namespace

TEST(Gauge, MaurerCartanOfAbelianMap)
{
	// g = exp(f(x) t3): g^{-1} dg = f'(x) t3 dx
	LieAlgebra g(2);
	Space sp = Space::bundle(32, 8, 8, 0);
	Field u = abelian_group(g, sp, [](double x) { return 0.8 * std::sin(2 * pi * x); });
	Field mc = maurer_cartan(g, u);
	Field x = coordinate(sp, AX);
	int cx = sp.index_of(1u << AX);
	for (long p = 0; p < sp.npts(); ++p) {
		EXPECT_NEAR(mc.ptr(cx, 2)[p], 0.8 * 2 * pi * std::cos(2 * pi * x.v[p]), 1e-10);
		EXPECT_NEAR(mc.ptr(cx, 0)[p], 0, 1e-10);
	}
	EXPECT_LT(sup_norm(mc) - sup_norm(select_channel_block(mc, 2, 1)), 1e-10);
}

TEST(Gauge, ConstantGaugeConjugates)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(8, 8, 8, 1);
	Rng rng(1);
	Field A = random_field(sp, 1, 3, rng);
	Mat h = exp_map(0.4 * g.generator(0) - 0.9 * g.generator(2));
	Field u = group_identity(sp, 2);
	for (long p = 0; p < sp.npts(); ++p)
		set_group_at(u, p, h);
	Field Ag = gauge_act_3d(g, u, A);
	for (int c = 0; c < 3; ++c)
		for (long p = 0; p < sp.npts(); p += 11) {
			std::vector<double> a(3), b(3);
			for (int ch = 0; ch < 3; ++ch)
				a[ch] = A.ptr(c, ch)[p], b[ch] = Ag.ptr(c, ch)[p];
			Mat expect = h.adjoint() * g.to_matrix(a.data()) * h;
			EXPECT_LT((g.to_matrix(b.data()) - expect).cwiseAbs().maxCoeff(), 1e-14);
		}
}

TEST(Gauge, ActionComposes)
{
	// (A^g)^h = A^(gh) for smooth fields on the torus
	LieAlgebra g(2);
	Space sp = Space::bundle(32, 32, 32, 0);
	Rng rng(2);
	FieldGen smooth;
	smooth.amplitude = 0.2;
	Field u = group_exp(g, random_field(sp, 0, 3, rng, smooth)), v = group_exp(g, random_field(sp, 0, 3, rng, smooth));
	Field A = random_field(sp, 1, 3, rng);
	EXPECT_LT(sup_diff(gauge_act_3d(g, v, gauge_act_3d(g, u, A)), gauge_act_3d(g, group_multiply(u, v), A)), 1e-8);
}

TEST(Gauge, CurvatureIsCovariant)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(32, 32, 32, 0);
	Rng rng(3);
	FieldGen smooth;
	smooth.amplitude = 0.2;
	Field u = group_exp(g, random_field(sp, 0, 3, rng, smooth));
	Field A = random_field(sp, 1, 3, rng);
	EXPECT_LT(sup_diff(curvature(g, gauge_act_3d(g, u, A)), conjugate_by(g, u, curvature(g, A))), 1e-8);
}

TEST(Gauge, LiftTwistAddsTwist)
{
	Space b = Space::base(8, 8, 8, 0);
	LiftedConnection lc = make_lift(make_caloron(Field(b, 1, 3), Field(b, 0, 3)));
	auto t = lift_twist(lift_twist(lc, Field(b, 1, 1), 2), Field(b, 1, 1), -5);
	EXPECT_EQ(t.twist, -3);
}

TEST(Gauge, K0IsAntisymmetricAndVanishesOnBasicFields)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(16, 16, 16, 1);
	Rng rng(4);
	Field k = make_kappa(sp);
	Field a = random_field(sp, 0, 3, rng), b = random_field(sp, 0, 3, rng);
	EXPECT_NEAR(cocycle_k0(g, a, b, k), -cocycle_k0(g, b, a, k), 1e-12);
	EXPECT_GT(std::abs(cocycle_k0(g, a, b, k)), 1e-6);
	EXPECT_NEAR(cocycle_k0(g, random_field(sp, 0, 3, rng, theta_const()), b, k), 0, 1e-14);
}

TEST(Gauge, ExtendedAlgebraJacobiAndInvariance)
{
	LieAlgebra g(2);
	Space sp = Space::bundle(16, 16, 16, 1);
	Rng rng(5);
	auto el = [&] {
		return ExtendedElement{random_field(sp, 0, 1, rng, theta_const()), random_field(sp, 0, 3, rng),
		                       random_field(sp, 0, 1, rng, theta_const())};
	};
	auto u = el(), v = el(), w = el();
	auto B = [&](const ExtendedElement &a, const ExtendedElement &b) { return extended_bracket(g, a, b); };
	auto j1 = B(u, B(v, w)), j2 = B(v, B(w, u)), j3 = B(w, B(u, v));
	EXPECT_LT(sup_norm(j1.xi + j2.xi + j3.xi), 1e-10);
	EXPECT_LT(sup_norm(extended_pair(g, B(w, u), v) + extended_pair(g, u, B(w, v))), 1e-10);
	auto uu = B(u, u);
	EXPECT_LT(sup_norm(uu.xi) + sup_norm(uu.y), 1e-13);
}

TEST(Gauge, MomentMapOfTheExtendedAction)
{
	LieAlgebra g(2);
	for (int d : {0, 1}) {
		Space sp = Space::bundle(12, 12, 12, d);
		Rng rng(6);
		Field k = make_kappa(sp);
		auto hz = [&](int nch, const FieldGen &G) { return project_horizontal(random_field(sp, 1, nch, rng, G), k); };
		CConnection l{k, hz(3, {}), hz(1, theta_const())};
		CConnection Y{hz(1, theta_const()), hz(3, {}), hz(1, theta_const())};
		ExtendedElement u{random_field(sp, 0, 1, rng, theta_const()), random_field(sp, 0, 3, rng),
		                  random_field(sp, 0, 1, rng, theta_const())};
		double lhs = omega_cconnection(g, rep_on_cconnection(g, u, l), Y);
		double rhs = (moment_pairing(g, moment_f(g, l + 0.5 * Y), u) - moment_pairing(g, moment_f(g, l + (-0.5) * Y), u));
		EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(lhs))) << d;
	}
}
