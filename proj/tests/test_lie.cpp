#include "calbf/lie.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace calbf;

namespace {

const cplx I(0, 1);

Mat pauli(int a)
{
	Mat s(2, 2);
	if (a == 1)
		s << 0, 1, 1, 0;
	else if (a == 2)
		s << 0, -I, I, 0;
	else
		s << 1, 0, 0, -1;
	return s;
}

Mat random_su(int n, std::mt19937_64 &rng)
{
	std::normal_distribution<double> N;
	Mat h(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			h(i, j) = cplx(N(rng), N(rng));
	Mat x = h - h.adjoint();
	x -= (x.trace() / double(n)) * Mat::Identity(n, n);
	return x;
}

double dist(const Mat &a, const Mat &b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace

TEST(Lie, Su2BasisIsPauli)
{
	LieAlgebra g(2);
	ASSERT_EQ(g.dim(), 3);
	for (int a = 0; a < 3; ++a)
		EXPECT_LT(dist(g.generator(a), -0.5 * I * pauli(a + 1)), 1e-15);
}

TEST(Lie, Su2StructureConstants)
{
	LieAlgebra g(2);
	double x[3] = {1, 0, 0}, y[3] = {0, 1, 0}, z[3];
	g.bracket(x, y, z);
	EXPECT_NEAR(z[0], 0, 1e-15);
	EXPECT_NEAR(z[1], 0, 1e-15);
	EXPECT_NEAR(z[2], 1, 1e-15);
}

TEST(Lie, BasisOrthonormal)
{
	for (int n = 2; n <= 5; ++n) {
		LieAlgebra g(n);
		EXPECT_EQ(g.dim(), n * n - 1);
		for (int a = 0; a < g.dim(); ++a)
			for (int b = 0; b < g.dim(); ++b)
				EXPECT_NEAR(pair(g.generator(a), g.generator(b)), a == b ? 1.0 : 0.0, 1e-14) << n << " " << a << " " << b;
	}
}

TEST(Lie, CoordinatesRoundTrip)
{
	std::mt19937_64 rng(1);
	for (int n = 2; n <= 4; ++n) {
		LieAlgebra g(n);
		Mat X = random_su(n, rng);
		std::vector<double> c(g.dim());
		g.from_matrix(X, c.data());
		EXPECT_LT(dist(g.to_matrix(c.data()), X), 1e-13);
	}
}

TEST(Lie, CoordinateBracketMatchesMatrix)
{
	std::mt19937_64 rng(2);
	LieAlgebra g(3);
	Mat X = random_su(3, rng), Y = random_su(3, rng);
	std::vector<double> x(g.dim()), y(g.dim()), z(g.dim());
	g.from_matrix(X, x.data());
	g.from_matrix(Y, y.data());
	g.bracket(x.data(), y.data(), z.data());
	EXPECT_LT(dist(g.to_matrix(z.data()), X * Y - Y * X), 1e-12);
	EXPECT_NEAR(g.pair(x.data(), y.data()), -2 * (X * Y).trace().real(), 1e-12);
}

TEST(Lie, ExpOfCartanIsDiagonalPhase)
{
	LieAlgebra g(2);
	double t = 0.83;
	Mat e = exp_map(t * g.generator(2));
	EXPECT_LT(std::abs(e(0, 0) - std::exp(-I * t / 2.0)), 1e-15);
	EXPECT_LT(std::abs(e(1, 1) - std::exp(I * t / 2.0)), 1e-15);
	EXPECT_LT(std::abs(e(0, 1)), 1e-15);
	// exp(2 pi t3) = -1
	EXPECT_LT(dist(exp_map(2 * std::numbers::pi * g.generator(2)), -Mat::Identity(2, 2)), 1e-14);
}

TEST(Lie, ExpIsUnitaryWithUnitDeterminant)
{
	std::mt19937_64 rng(3);
	for (int n = 2; n <= 4; ++n)
		for (int i = 0; i < 10; ++i) {
			Mat e = exp_map(random_su(n, rng));
			EXPECT_TRUE(is_group_matrix(e));
			EXPECT_NEAR(std::abs(e.determinant() - 1.0), 0, 1e-12);
		}
}

TEST(Lie, AdjointIsConjugation)
{
	std::mt19937_64 rng(4);
	Mat g = exp_map(random_su(3, rng)), X = random_su(3, rng), Y = random_su(3, rng);
	EXPECT_LT(dist(adjoint(g, X), g * X * g.adjoint()), 1e-13);
	// Ad preserves the pairing and the bracket
	EXPECT_NEAR(pair(adjoint(g, X), adjoint(g, Y)), pair(X, Y), 1e-12);
	EXPECT_LT(dist(adjoint(g, bracket(X, Y)), bracket(adjoint(g, X), adjoint(g, Y))), 1e-12);
}

TEST(Lie, JacobiAndInvarianceProperty)
{
	std::mt19937_64 rng(5);
	for (int i = 0; i < 50; ++i) {
		int n = 2 + i % 4;
		Mat X = random_su(n, rng), Y = random_su(n, rng), Z = random_su(n, rng);
		Mat J = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
		EXPECT_LT(J.cwiseAbs().maxCoeff(), 1e-11);
		EXPECT_NEAR(pair(bracket(X, Y), Z), pair(X, bracket(Y, Z)), 1e-11);
		EXPECT_TRUE(is_lie_matrix(bracket(X, Y), 1e-12));
	}
}

TEST(Lie, RankMismatchThrows)
{
	EXPECT_THROW(bracket(Mat::Zero(2, 2), Mat::Zero(3, 3)), std::invalid_argument);
	EXPECT_THROW(pair(Mat::Zero(2, 2), Mat::Zero(3, 3)), std::invalid_argument);
}
