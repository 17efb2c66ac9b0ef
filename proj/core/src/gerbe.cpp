#include "calbf/gerbe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace calbf {

namespace {

constexpr double pi = std::numbers::pi;

AffineConvention gerbe_convention(int k) { return bundle_convention(k, 1.0 / (8 * pi * pi)); }

// indices of the base points (theta index 0) of a base-type space
std::vector<long> base_points(const Space &sp)
{
	std::vector<long> r;
	for (long pt = 0; pt < sp.npts(); pt += sp.n[AT])
		r.push_back(pt);
	return r;
}

LoopElement loop_from(const LieAlgebra &alg, const Field &f, int comp, long pt0)
{
	int nt = f.sp.n[AT];
	LoopElement l(alg, nt);
	for (int j = 0; j < nt; ++j)
		for (int a = 0; a < alg.dim(); ++a)
			l.at(j)[a] = f.ptr(comp, a)[pt0 + j];
	return l;
}

double real_at(const Field &f, int comp, long pt0) { return f.ptr(comp, 0)[pt0]; }

void fill_real(Field &f, int comp, long pt0, double v)
{
	double *c = f.ptr(comp, 0) + pt0;
	std::fill(c, c + f.sp.n[AT], v);
}

// loop (zeta) broadcast over the base as a 0-form
Field broadcast(const LieAlgebra &alg, const Space &sp, const LoopElement &z)
{
	Space s0 = sp;
	Field f(s0, 0, alg.dim());
	if (z.c.empty())
		return f;
	if (z.n != sp.n[AT])
		throw std::invalid_argument("splitting loop does not match n_theta");
	for (long pt0 : base_points(sp))
		for (int j = 0; j < z.n; ++j)
			for (int a = 0; a < alg.dim(); ++a)
				f.ptr(0, a)[pt0 + j] = z.at(j)[a];
	return f;
}

// d l(L) = a dlambda + d <<zeta, Lambda>>, written so that the non-periodic lambda is never differentiated
Field d_splitting(const LieAlgebra &alg, const CaloronFields &f, const Splitting &s)
{
	Field r = s.a * f.dlambda;
	if (!s.zeta.c.empty())
		r += exterior_d(fiber_average(wedge_pair(alg, broadcast(alg, f.Lambda.sp, s.zeta), f.Lambda)));
	return r;
}

void check_fields(const CaloronFields &f)
{
	if (f.Lambda.p != 1 || f.Phi.p != 0 || f.lambda.p != 1 || f.dlambda.p != 2)
		throw std::invalid_argument("caloron fields have the wrong form degrees");
	Space s = f.Lambda.sp;
	s.form = f.Phi.sp.form;
	if (s != f.Phi.sp)
		throw std::invalid_argument("Lambda and Phi grids differ");
}

} // namespace

double splitting_value(const Splitting &s, const CheckVector &u)
{
	double v = s.a * u.x;
	if (!s.zeta.c.empty())
		v += loop_pair(s.zeta, u.xi);
	return v;
}

AffineVector apply_splitting(const Splitting &s, const CheckVector &u)
{
	return {u.x, u.xi, splitting_value(s, u)};
}

double omega_sigma(const CheckVector &u, const CheckVector &v, const Splitting &s, const AffineConvention &cv)
{
	AffineVector b = affine_bracket(apply_splitting(s, u), apply_splitting(s, v), cv);
	return b.y - splitting_value(s, {b.x, b.xi});
}

double z_sigma(const LoopGroupElement &gamma, const CheckVector &u, const Splitting &s, const AffineConvention &cv)
{
	AffineVector a = affine_adjoint(gamma, apply_splitting(s, u), cv);
	CheckVector au = check_adjoint(gamma, u, cv.orientation);
	return a.y - splitting_value(s, au);
}

double bundle_splitting(const AffineVector &X, const LoopElement &Phi, const AffineConvention &cv)
{
	return -cv.orientation * affine_pair(X, higgs_vector(Phi, cv), cv);
}

LoopElement loop_at(const LieAlgebra &alg, const Field &f, int comp, int ix, int iy, int is)
{
	const Space &sp = f.sp;
	return loop_from(alg, f, comp, sp.stride(AX) * ix + sp.stride(AY) * iy + sp.stride(AS) * is);
}

Field splitting_of_connection(const LieAlgebra &alg, const CaloronFields &f, const Splitting &s)
{
	check_fields(f);
	Field r = s.a * f.lambda;
	if (!s.zeta.c.empty())
		r += fiber_average(wedge_pair(alg, broadcast(alg, f.Lambda.sp, s.zeta), f.Lambda));
	return r;
}

GerbeCurvature gerbe_curvature(const LieAlgebra &alg, const CaloronFields &f, const Splitting &s, int k)
{
	check_fields(f);
	AffineConvention cv = gerbe_convention(k);
	const Space &sp = f.Lambda.sp;
	Field F = caloron_curvature(alg, f);
	Field dl = d_splitting(alg, f, s);

	GerbeCurvature r;
	r.curving = r.central = r.sigma_central = r.s_sigma = Field(sp, 2, 1);
	const auto &c1 = sp.components(1);
	for (long pt0 : base_points(sp)) {
		LoopElement Phi = loop_from(alg, f.Phi, 0, pt0);
		for (std::size_t i = 0; i < c1.size(); ++i)
			for (std::size_t j = i + 1; j < c1.size(); ++j) {
				int c2 = sp.index_of(c1[i] | c1[j]);
				CheckVector Li{real_at(f.lambda, int(i), pt0), loop_from(alg, f.Lambda, int(i), pt0)};
				CheckVector Lj{real_at(f.lambda, int(j), pt0), loop_from(alg, f.Lambda, int(j), pt0)};
				// sigma(F_L) = (dlambda, F, l(dL) + 1/2 l([L ^ L])) = (dlambda, F, d l(L) + l([L_i, L_j]))
				CheckVector Lij = check_bracket(Li, Lj, cv.orientation);
				AffineVector sF{real_at(f.dlambda, c2, pt0), loop_from(alg, F, c2, pt0),
				                real_at(dl, c2, pt0) + splitting_value(s, Lij)};
				double sv = bundle_splitting(sF, Phi, cv);
				fill_real(r.sigma_central, c2, pt0, sF.y);
				fill_real(r.s_sigma, c2, pt0, sv);
				fill_real(r.central, c2, pt0, sF.y - sv);
				fill_real(r.curving, c2, pt0, -(omega_sigma(Li, Lj, s, cv) + sv));
			}
	}
	double K = cv.level();
	r.central_closed = K * fiber_average(wedge_pair(alg, F, f.Phi)) +
	                   0.5 * K * wedge(f.dlambda, fiber_average(pointwise_pair(alg, f.Phi, f.Phi)));
	return r;
}

Field curving_f(const LieAlgebra &alg, const CaloronFields &f, const Splitting &s, int k)
{
	return gerbe_curvature(alg, f, s, k).curving;
}

Field lifted_splitting_curvature(const LieAlgebra &alg, const LiftedConnection &lc, const Splitting &s, int k)
{
	const CaloronFields &f = lc.fields;
	check_fields(f);
	AffineConvention cv = gerbe_convention(k);
	const Space &sp = f.Lambda.sp;
	Field ell = splitting_of_connection(alg, f, s) + lc.alpha;
	Field dLam = exterior_d(f.Lambda);
	Field dc = d_splitting(alg, f, s) + exterior_d(lc.alpha);

	Field r(sp, 2, 1);
	const auto &c1 = sp.components(1);
	for (long pt0 : base_points(sp)) {
		LoopElement Phi = loop_from(alg, f.Phi, 0, pt0);
		for (std::size_t i = 0; i < c1.size(); ++i)
			for (std::size_t j = i + 1; j < c1.size(); ++j) {
				int c2 = sp.index_of(c1[i] | c1[j]);
				AffineVector Li{real_at(f.lambda, int(i), pt0), loop_from(alg, f.Lambda, int(i), pt0),
				                real_at(ell, int(i), pt0)};
				AffineVector Lj{real_at(f.lambda, int(j), pt0), loop_from(alg, f.Lambda, int(j), pt0),
				                real_at(ell, int(j), pt0)};
				AffineVector Fij = affine_bracket(Li, Lj, cv);
				Fij.x += real_at(f.dlambda, c2, pt0);
				Fij.xi += loop_from(alg, dLam, c2, pt0);
				Fij.y += real_at(dc, c2, pt0);
				if (c1[i] == (1u << AX) && c1[j] == (1u << AY))
					Fij.y += lc.twist;
				fill_real(r, c2, pt0, bundle_splitting(Fij, Phi, cv));
			}
	}
	return r;
}

namespace heisenberg {

H multiply(const H &g, const H &h)
{
	return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + 0.5 * (g[0] * h[1] - g[1] * h[0])};
}

H inverse(const H &g) { return {-g[0], -g[1], -g[2]}; }

double omega(const H &u, const H &v) { return u[0] * v[1] - u[1] * v[0]; }

namespace {

H scaled(const H &X, double t) { return {t * X[0], t * X[1], t * X[2]}; }

H conj(const H &g, const H &X, double t) { return multiply(multiply(g, scaled(X, t)), inverse(g)); }

H commutator(const H &X, const H &Y, double s, double t)
{
	H a = scaled(X, s), b = scaled(Y, t);
	return multiply(multiply(multiply(a, b), inverse(a)), inverse(b));
}

} // namespace

H adjoint_fd(const H &g, const H &X, double h)
{
	H p = conj(g, X, h), m = conj(g, X, -h);
	return {(p[0] - m[0]) / (2 * h), (p[1] - m[1]) / (2 * h), (p[2] - m[2]) / (2 * h)};
}

H bracket_fd(const H &X, const H &Y, double h)
{
	H r{};
	for (int c = 0; c < 3; ++c)
		r[c] = (commutator(X, Y, h, h)[c] - commutator(X, Y, h, -h)[c] - commutator(X, Y, -h, h)[c] +
		        commutator(X, Y, -h, -h)[c]) /
		       (4 * h * h);
	return r;
}

double nu(const H &g, const H &dg) { return dg[2] - 0.5 * (g[0] * dg[1] - g[1] * dg[0]); }

} // namespace heisenberg

} // namespace calbf
