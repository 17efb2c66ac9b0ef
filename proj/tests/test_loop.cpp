#include "calbf/loop.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace calbf;

namespace {

constexpr double pi = std::numbers::pi;

LoopElement along(const LieAlgebra &g, int n, int a, std::function<double(double)> f)
{
	return make_loop(g, n, [&](double th, double *x) {
		std::fill(x, x + g.dim(), 0.0);
		x[a] = f(th);
	});
}

double sup(const LoopElement &x)
{
	double m = 0;
	for (double v : x.c)
		m = std::max(m, std::abs(v));
	return m;
}

LoopElement random_smooth(const LieAlgebra &g, int n, std::mt19937_64 &rng)
{
	std::normal_distribution<double> N(0, 0.4);
	std::vector<double> c(g.dim() * 5);
	for (auto &v : c)
		v = N(rng);
	return make_loop(g, n, [&](double th, double *x) {
		for (int a = 0; a < g.dim(); ++a)
			x[a] = c[5 * a] + c[5 * a + 1] * std::cos(2 * pi * th) + c[5 * a + 2] * std::sin(2 * pi * th) +
			       c[5 * a + 3] * std::cos(4 * pi * th) + c[5 * a + 4] * std::sin(4 * pi * th);
	});
}

LoopGroupElement spin(int n, int m)
{
	LieAlgebra g(2);
	LoopGroupElement r;
	for (int j = 0; j < n; ++j)
		r.g.push_back(exp_map(4 * pi * m * double(j) / n * g.generator(2)));
	return r;
}

} // namespace

TEST(Loop, DerivativeIsSpectral)
{
	LieAlgebra g(2);
	for (int m = 1; m <= 5; ++m) {
		auto s = along(g, 32, 1, [m](double t) { return std::sin(2 * pi * m * t); });
		auto c = along(g, 32, 1, [m](double t) { return 2 * pi * m * std::cos(2 * pi * m * t); });
		EXPECT_LT(sup(loop_derivative(s) - c), 1e-11) << m;
	}
}

TEST(Loop, PairIsTheSampleMean)
{
	LieAlgebra g(2);
	auto a = along(g, 16, 0, [](double t) { return std::cos(2 * pi * t); });
	auto b = along(g, 16, 0, [](double t) { return 1.0 + std::cos(2 * pi * t); });
	EXPECT_NEAR(loop_pair(a, a), 0.5, 1e-15);
	EXPECT_NEAR(loop_pair(a, b), 0.5, 1e-15);
	EXPECT_NEAR(loop_norm(b), std::sqrt(1.5), 1e-14);
}

TEST(Loop, ExpOfConstantLoop)
{
	LieAlgebra g(2);
	std::mt19937_64 rng(1);
	auto x = along(g, 8, 2, [](double) { return 1.3; });
	auto e = loop_exp(x);
	ASSERT_EQ(e.n(), 8);
	for (int j = 0; j < 8; ++j)
		EXPECT_LT((e.g[j] - exp_map(1.3 * g.generator(2))).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Loop, LogDerivativeOfSpinLoop)
{
	LieAlgebra g(2);
	auto w = left_log_derivative(g, spin(32, 1));
	EXPECT_LT(sup(w - along(g, 32, 2, [](double) { return 4 * pi; })), 1e-11);
}

TEST(Loop, MultiplyAndInverse)
{
	LieAlgebra g(3);
	std::mt19937_64 rng(2);
	auto a = loop_exp(random_smooth(g, 16, rng)), b = loop_exp(random_smooth(g, 16, rng));
	auto ab = loop_multiply(a, b), id = loop_multiply(a, loop_inverse(a));
	for (int j = 0; j < 16; ++j) {
		EXPECT_LT((ab.g[j] - a.g[j] * b.g[j]).cwiseAbs().maxCoeff(), 1e-13);
		EXPECT_LT((id.g[j] - Mat::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-13);
	}
}

TEST(Affine, BracketOfDAndC)
{
	LieAlgebra g(2);
	const int n = 32;
	auto s = along(g, n, 0, [](double t) { return std::sin(2 * pi * t); });
	auto d = affine_d(g, n), c = affine_c(g, n);
	auto r = affine_bracket(d, {0, s, 0}, 1);
	EXPECT_LT(sup(r.xi - along(g, n, 0, [](double t) { return 2 * pi * std::cos(2 * pi * t); })), 1e-11);
	EXPECT_NEAR(r.x, 0, 1e-15);
	EXPECT_NEAR(r.y, 0, 1e-12);
	auto z = affine_bracket(c, {1, s, 2}, 3);
	EXPECT_EQ(z.x, 0);
	EXPECT_LT(sup(z.xi), 1e-15);
	EXPECT_EQ(z.y, 0);
}

TEST(Affine, CentralTermIsLevelTimesCocycle)
{
	LieAlgebra g(2);
	const int n = 32;
	auto c1 = along(g, n, 0, [](double t) { return std::cos(2 * pi * t); });
	auto s1 = along(g, n, 0, [](double t) { return std::sin(2 * pi * t); });
	for (int k = 1; k <= 3; ++k)
		EXPECT_NEAR(affine_bracket({0, c1, 0}, {0, s1, 0}, k).y, k * pi, 1e-11);
}

TEST(Affine, PairingAndOrientation)
{
	LieAlgebra g(2);
	auto d = affine_d(g, 4), c = affine_c(g, 4);
	EXPECT_DOUBLE_EQ(affine_pair(d, c, 1), -1);
	EXPECT_DOUBLE_EQ(affine_pair(d, c, bundle_convention(1, 0.5)), 1);
	EXPECT_DOUBLE_EQ(affine_pair(d, d, 1), 0);
}

TEST(Affine, ConstantLoopActsByConjugation)
{
	LieAlgebra g(2);
	std::mt19937_64 rng(3);
	auto xi = random_smooth(g, 16, rng);
	Mat h = exp_map(0.7 * g.generator(0) + 0.2 * g.generator(1));
	auto r = affine_adjoint(loop_constant(h, 16), {0, xi, 0}, 2);
	EXPECT_NEAR(r.x, 0, 1e-15);
	EXPECT_NEAR(r.y, 0, 1e-12);
	for (int j = 0; j < 16; ++j)
		EXPECT_LT((r.xi.matrix(j) - h * xi.matrix(j) * h.adjoint()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Affine, SpinLoopMovesD)
{
	LieAlgebra g(2);
	for (int k = 1; k <= 3; ++k) {
		auto r = affine_adjoint(spin(32, 1), affine_d(g, 32), k);
		EXPECT_NEAR(r.x, 1, 1e-14);
		EXPECT_LT(sup(r.xi + along(g, 32, 2, [](double) { return 4 * pi; })), 1e-11);
		EXPECT_NEAR(r.y, 8 * pi * pi * k, 1e-9);
	}
}

TEST(Affine, HiggsValueIsNullWithUnitCharge)
{
	LieAlgebra g(3);
	std::mt19937_64 rng(4);
	for (auto cv : {loop_convention(2), bundle_convention(3, 0.1)}) {
		auto V = higgs_vector(random_smooth(g, 16, rng), cv);
		auto [vv, vc] = higgs_constraints(V, cv);
		EXPECT_NEAR(vv, 0, 1e-13);
		EXPECT_NEAR(vc, 0, 1e-15);
	}
}

TEST(Affine, AdjointPropertiesOnRandomLoops)
{
	LieAlgebra g(2);
	std::mt19937_64 rng(5);
	std::normal_distribution<double> N;
	for (int i = 0; i < 20; ++i) {
		auto gam = loop_exp(random_smooth(g, 64, rng));
		AffineVector u{N(rng), random_smooth(g, 64, rng), N(rng)}, v{N(rng), random_smooth(g, 64, rng), N(rng)};
		EXPECT_NEAR(affine_pair(affine_adjoint(gam, u, 2), affine_adjoint(gam, v, 2), 2), affine_pair(u, v, 2), 1e-8);
		// the central part of the action is the group cocycle
		EXPECT_NEAR(affine_adjoint(gam, {u.x, u.xi, 0}, 2).y, group_cocycle_sigma(gam, {u.x, u.xi}, 2), 1e-10);
	}
}

TEST(Affine, BetaMapValues)
{
	LieAlgebra g(2);
	std::mt19937_64 rng(6);
	auto xi = random_smooth(g, 16, rng), phi = random_smooth(g, 16, rng);
	auto b = beta_map({2.0, xi}, {1.0, -1.0 * phi});
	EXPECT_EQ(b.x, 0);
	EXPECT_LT(sup(b.xi - (xi + 2.0 * phi)), 1e-15);
	EXPECT_LT(sup(beta_map({1.0, xi}, {1.0, xi}).xi), 1e-15);
}

TEST(Loop, GridMismatchThrows)
{
	LieAlgebra g(2);
	EXPECT_THROW(loop_pair(LoopElement(g, 8), LoopElement(g, 16)), std::invalid_argument);
}
