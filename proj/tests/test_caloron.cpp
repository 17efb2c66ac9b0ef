#include "calbf/caloron.hpp"
#include "calbf/gauge.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace calbf;

namespace {

CaloronFields random_caloron(const LieAlgebra &g, const Space &b, Rng &rng)
{
	return make_caloron(random_field(b, 1, g.dim(), rng), random_field(b, 0, g.dim(), rng));
}

} // namespace

TEST(Caloron, RoundTripBothWays)
{
	LieAlgebra g(2);
	for (int d : {0, 1}) {
		Space b = Space::base(16, 16, 16, d);
		Rng rng(1);
		auto f = random_caloron(g, b, rng);
		auto f2 = cal_forward(cal_inverse(f));
		EXPECT_LT(sup_diff(f2.Lambda, f.Lambda), 1e-13);
		EXPECT_LT(sup_diff(f2.Phi, f.Phi), 1e-13);
		Field A = random_field(bundle_of(b), 1, g.dim(), rng);
		EXPECT_LT(sup_diff(cal_inverse(cal_forward(make_connection(A))).A, A), 1e-13);
	}
}

TEST(Caloron, ConstantConnectionOracle)
{
	// A = a dx + b dy + c dtheta with constants: Phi = c, Lambda = a dx + (b - d x c) dy
	LieAlgebra g(2);
	for (int d : {0, 2}) {
		Space m = Space::bundle(8, 8, 16, d);
		Field A(m, 1, 3);
		const double a = 0.3, b = -0.7, c = 1.1;
		std::fill(A.ptr(m.index_of(1u << AX), 0), A.ptr(m.index_of(1u << AX), 0) + m.npts(), a);
		std::fill(A.ptr(m.index_of(1u << AY), 1), A.ptr(m.index_of(1u << AY), 1) + m.npts(), b);
		std::fill(A.ptr(m.index_of(1u << AT), 2), A.ptr(m.index_of(1u << AT), 2) + m.npts(), c);
		auto f = cal_forward(make_connection(A));
		Space b2 = f.Lambda.sp;
		Field x = coordinate(b2, AX);
		for (long p = 0; p < b2.npts(); ++p) {
			EXPECT_DOUBLE_EQ(f.Phi.ptr(0, 2)[p], c);
			EXPECT_DOUBLE_EQ(f.Lambda.ptr(b2.index_of(1u << AX), 0)[p], a);
			EXPECT_NEAR(f.Lambda.ptr(b2.index_of(1u << AY), 1)[p], b, 1e-15);
			EXPECT_NEAR(f.Lambda.ptr(b2.index_of(1u << AY), 2)[p], -d * x.v[p] * c, 1e-15);
			EXPECT_NEAR(f.lambda.ptr(b2.index_of(1u << AY), 0)[p], d * x.v[p], 1e-15);
		}
	}
}

TEST(Caloron, CurvatureIdentityUntwisted)
{
	LieAlgebra g(3);
	Rng rng(2);
	auto r = looped_curvature_identity(g, random_caloron(g, Space::base(16, 16, 16, 0), rng));
	EXPECT_LT(r.rel(), 1e-12);
	EXPECT_GT(r.scale, 0.1);
}

TEST(Caloron, CurvatureIdentityTwistedConverges)
{
	LieAlgebra g(2);
	auto rel = [&](int n) {
		Rng rng(3);
		return looped_curvature_identity(g, random_caloron(g, Space::base(n, n, n, 1), rng)).rel();
	};
	double e16 = rel(16), e32 = rel(32);
	EXPECT_LT(e32, 1e-6);
	EXPECT_GT(std::log2(e16 / e32), 5.5);
}

TEST(Caloron, CurvatureOfAbelianConnection)
{
	// A = phi(x) t3 dtheta on the torus: F = phi'(x) t3 dx^dtheta; caloron side has N = -dPhi
	LieAlgebra g(2);
	Space b = Space::base(16, 16, 16, 0);
	Field Phi(b, 0, 3);
	Field x = coordinate(b, AX);
	for (long p = 0; p < b.npts(); ++p)
		Phi.ptr(0, 2)[p] = std::sin(2 * M_PI * x.v[p]);
	auto f = make_caloron(Field(b, 1, 3), Phi);
	EXPECT_LT(sup_norm(caloron_curvature(g, f)), 1e-15);
	Field N = higgs_covariant(g, f);
	for (long p = 0; p < b.npts(); ++p)
		EXPECT_NEAR(N.ptr(b.index_of(1u << AX), 2)[p], -2 * M_PI * std::cos(2 * M_PI * x.v[p]), 1e-11);
}

TEST(Caloron, GaugeEquivariance)
{
	LieAlgebra g(2);
	for (int d : {0, 1}) {
		Space m = Space::bundle(16, 16, 16, d);
		Rng rng(4);
		Field u = group_exp(g, random_field(m, 0, 3, rng));
		Field A = random_field(m, 1, 3, rng);
		auto lhs = cal_forward(make_connection(gauge_act_3d(g, u, A)));
		auto rhs = gauge_act_caloron(g, u, cal_forward(make_connection(A)));
		EXPECT_LT(sup_diff(lhs.Lambda, rhs.Lambda), 1e-12);
		EXPECT_LT(sup_diff(lhs.Phi, rhs.Phi), 1e-12);
	}
}

TEST(Caloron, WrongFormDegreeThrows)
{
	Space b = Space::base(8, 8, 8, 0);
	EXPECT_ANY_THROW(make_caloron(Field(b, 0, 3), Field(b, 0, 3)));
}
