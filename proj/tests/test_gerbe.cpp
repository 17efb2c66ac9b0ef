#include "calbf/gauge.hpp"
#include "calbf/gerbe.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace calbf;

namespace {

constexpr double pi = std::numbers::pi;

LoopElement trig(const LieAlgebra &g, int n, int a, bool sine)
{
	return make_loop(g, n, [&](double t, double *x) {
		std::fill(x, x + g.dim(), 0.0);
		x[a] = sine ? std::sin(2 * pi * t) : std::cos(2 * pi * t);
	});
}

Splitting splitting(const LieAlgebra &g, int n, double a, double z)
{
	Splitting s;
	s.a = a;
	s.zeta = make_loop(g, n, [&](double t, double *x) {
		for (int b = 0; b < g.dim(); ++b)
			x[b] = z * std::cos(2 * pi * t + b);
	});
	return s;
}

} // namespace

TEST(Gerbe, OmegaSigmaOfTrigLoops)
{
	LieAlgebra g(2);
	// k <<cos, sin'>> = 2 pi k / 2
	EXPECT_NEAR(omega_sigma({0, trig(g, 32, 0, false)}, {0, trig(g, 32, 0, true)}, {}, loop_convention(2)), 2 * pi, 1e-12);
}

TEST(Gerbe, SplittingShiftsOmegaByACoboundary)
{
	LieAlgebra g(2);
	const int n = 32;
	auto cv = loop_convention(3);
	CheckVector u{0.4, trig(g, n, 0, false)}, v{-1.1, trig(g, n, 1, true)};
	Splitting s = splitting(g, n, 0.7, 0.3);
	double shift = splitting_value(s, check_bracket(u, v));
	EXPECT_NEAR(omega_sigma(u, v, s, cv), omega_sigma(u, v, {}, cv) - shift, 1e-12);
	EXPECT_NEAR(omega_sigma(u, v, s, cv), -omega_sigma(v, u, s, cv), 1e-12);
}

TEST(Gerbe, ZSigmaOfConstantLoopVanishesForDefaultSplitting)
{
	LieAlgebra g(2);
	Mat h = exp_map(0.5 * g.generator(0));
	EXPECT_NEAR(z_sigma(loop_constant(h, 16), {0, trig(g, 16, 2, true)}, {}, loop_convention(2)), 0, 1e-14);
}

TEST(Gerbe, BundleSplittingNormalization)
{
	LieAlgebra g(2);
	auto cv = bundle_convention(2, 0.1);
	LoopElement Phi = trig(g, 16, 1, false);
	EXPECT_NEAR(bundle_splitting(affine_c(g, 16), Phi, cv), 1, 1e-15);
	// the Higgs value itself is null, so s_V(V) = 0
	EXPECT_NEAR(bundle_splitting(higgs_vector(Phi, cv), Phi, cv), 0, 1e-14);
}

TEST(Gerbe, PrincipalCurvatureClosedForm)
{
	LieAlgebra g(2);
	for (int d : {0, 1}) {
		Space b = Space::base(16, 16, 16, d);
		Rng rng(1);
		auto f = make_caloron(random_field(b, 1, 3, rng), random_field(b, 0, 3, rng));
		auto G = gerbe_curvature(g, f, splitting(g, 16, 0.2, 0.5), 2);
		EXPECT_LT(sup_diff(G.central, G.central_closed), 1e-12 * std::max(1.0, sup_norm(G.central_closed)));
		EXPECT_LT(sup_diff(G.central + G.s_sigma, G.sigma_central), 1e-13);
		EXPECT_LT(sup_norm(partial(G.curving, AT)), 1e-12);
	}
}

TEST(Gerbe, FlatTrivialDataHasNoCurvature)
{
	LieAlgebra g(2);
	Space b = Space::base(8, 8, 8, 0);
	auto f = make_caloron(Field(b, 1, 3), Field(b, 0, 3));
	auto G = gerbe_curvature(g, f, splitting(g, 8, 0.4, 0.2), 1);
	EXPECT_EQ(sup_norm(G.curving), 0);
	EXPECT_EQ(sup_norm(G.central), 0);
}

TEST(Gerbe, LiftIdentity)
{
	LieAlgebra g(2);
	Space b = Space::base(16, 16, 16, 0);
	Rng rng(2);
	FieldGen flat;
	flat.theta_const = true;
	auto f = make_caloron(random_field(b, 1, 3, rng), random_field(b, 0, 3, rng));
	auto lc = make_lift(f);
	lc.alpha = random_field(b, 1, 1, rng, flat);
	auto s = splitting(g, 16, -0.3, 0.4);
	EXPECT_LT(sup_diff(curving_f(g, f, s, 3) - exterior_d(lc.alpha), -1.0 * lifted_splitting_curvature(g, lc, s, 3)),
	          1e-12);
	auto lt = lift_twist(lc, Field(b, 1, 1), 2);
	EXPECT_NEAR(fiber_integrate(lifted_splitting_curvature(g, lt, s, 3)) -
	                fiber_integrate(lifted_splitting_curvature(g, lc, s, 3)),
	            2, 1e-12);
}

TEST(Gerbe, SplittingLengthMismatchThrows)
{
	LieAlgebra g(2);
	Space b = Space::base(8, 8, 8, 0);
	auto f = make_caloron(Field(b, 1, 3), Field(b, 0, 3));
	EXPECT_THROW(splitting_of_connection(g, f, splitting(g, 16, 0, 1)), std::invalid_argument);
}

TEST(Heisenberg, GroupLaw)
{
	using namespace heisenberg;
	H g{1, 2, 3}, h{-0.5, 4, 1};
	H gh = multiply(g, h);
	EXPECT_DOUBLE_EQ(gh[0], 0.5);
	EXPECT_DOUBLE_EQ(gh[1], 6);
	EXPECT_DOUBLE_EQ(gh[2], 4 + 0.5 * (1 * 4 - 2 * -0.5));
	H e = multiply(g, inverse(g));
	EXPECT_EQ(e, (H{0, 0, 0}));
	EXPECT_DOUBLE_EQ(omega(g, h), 1 * 4 - 2 * -0.5);
}

TEST(Heisenberg, AssociativityProperty)
{
	using namespace heisenberg;
	std::mt19937_64 rng(3);
	std::uniform_real_distribution<double> U(-3, 3);
	for (int i = 0; i < 100; ++i) {
		H a{U(rng), U(rng), U(rng)}, b{U(rng), U(rng), U(rng)}, c{U(rng), U(rng), U(rng)};
		H l = multiply(multiply(a, b), c), r = multiply(a, multiply(b, c));
		for (int j = 0; j < 3; ++j)
			EXPECT_NEAR(l[j], r[j], 1e-12);
	}
}

TEST(Heisenberg, AdjointAndBracketClosedForms)
{
	using namespace heisenberg;
	H g{0.3, -1.2, 5}, X{2, 0.5, -1}, Y{-0.7, 1.5, 2};
	H a = adjoint_fd(g, X);
	EXPECT_NEAR(a[0], 2, 1e-13);
	EXPECT_NEAR(a[1], 0.5, 1e-13);
	EXPECT_NEAR(a[2], -1 + omega(g, X), 1e-13);
	H b = bracket_fd(X, Y);
	EXPECT_NEAR(b[0], 0, 1e-13);
	EXPECT_NEAR(b[1], 0, 1e-13);
	EXPECT_NEAR(b[2], omega(X, Y), 1e-13);
	EXPECT_NEAR(nu({1, 2, 0}, {0, 0, 1}), 1, 1e-15);
	EXPECT_NEAR(nu({1, 2, 0}, {0, 1, 0}), -0.5, 1e-15);
}
