#include "calbf/gauge.hpp"

#include <stdexcept>

namespace calbf {

namespace {

// fixed-capacity matrices keep the per-point loops off the heap
using SMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;

SMat load(const Field &g, long pt, int n)
{
	SMat m(n, n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			int ch = 2 * (i * n + k);
			m(i, k) = cplx(g.ptr(0, ch)[pt], g.ptr(0, ch + 1)[pt]);
		}
	return m;
}

void store(Field &g, long pt, const SMat &m)
{
	int n = int(m.rows());
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			int ch = 2 * (i * n + k);
			g.ptr(0, ch)[pt] = m(i, k).real();
			g.ptr(0, ch + 1)[pt] = m(i, k).imag();
		}
}

struct Basis {
	std::vector<SMat> t;
	explicit Basis(const LieAlgebra &alg)
	{
		for (int a = 0; a < alg.dim(); ++a)
			t.push_back(alg.generator(a));
	}
	SMat to(const double *c, long stride) const
	{
		SMat m = SMat::Zero(t[0].rows(), t[0].cols());
		for (std::size_t a = 0; a < t.size(); ++a)
			m += c[a * stride] * t[a];
		return m;
	}
	void from(const SMat &m, double *c, long stride) const
	{
		for (std::size_t a = 0; a < t.size(); ++a)
			c[a * stride] = -2 * (t[a].cwiseProduct(m.transpose())).sum().real();
	}
};

int rank_checked(const LieAlgebra &alg, const Field &g)
{
	int n = group_rank(g);
	if (n != alg.rank())
		throw std::invalid_argument("rank mismatch");
	if (n > 8)
		throw std::invalid_argument("group fields support rank <= 8");
	return n;
}

void same_grid(const Field &a, const Field &b)
{
	Space s = a.sp;
	s.form = b.sp.form;
	if (s != b.sp)
		throw std::invalid_argument("grid mismatch");
}

} // namespace

Field group_multiply(const Field &g, const Field &h)
{
	require_same(g, h);
	int n = group_rank(g);
	Field r(g.sp, 0, g.nch);
	for (long pt = 0; pt < g.npts(); ++pt)
		store(r, pt, load(g, pt, n) * load(h, pt, n));
	return r;
}

Field group_inverse(const Field &g)
{
	int n = group_rank(g);
	Field r(g.sp, 0, g.nch);
	for (long pt = 0; pt < g.npts(); ++pt)
		store(r, pt, load(g, pt, n).adjoint());
	return r;
}

double group_unitarity_defect(const Field &g)
{
	int n = group_rank(g);
	double e = 0;
	for (long pt = 0; pt < g.npts(); ++pt) {
		SMat m = load(g, pt, n);
		SMat u = m * m.adjoint() - SMat::Identity(n, n);
		e = std::max({e, u.cwiseAbs().maxCoeff(), std::abs(m.determinant() - 1.0)});
	}
	return e;
}

Field conjugate_by(const LieAlgebra &alg, const Field &g, const Field &X)
{
	int n = rank_checked(alg, g);
	same_grid(g, X);
	if (X.nch != alg.dim())
		throw std::invalid_argument("conjugate_by channel mismatch");
	Basis B(alg);
	Field r(X.sp, X.p, X.nch);
	long N = X.npts();
	for (long pt = 0; pt < N; ++pt) {
		SMat G = load(g, pt, n);
		for (int c = 0; c < X.ncomp(); ++c) {
			SMat Y = G.adjoint() * B.to(X.ptr(c, 0) + pt, N) * G;
			B.from(Y, r.ptr(c, 0) + pt, N);
		}
	}
	return r;
}

Field maurer_cartan_axis(const LieAlgebra &alg, const Field &g, int axis)
{
	int n = rank_checked(alg, g);
	Field dg = partial(g, axis);
	Basis B(alg);
	long N = g.npts();
	Field r(g.sp, 0, alg.dim());
	for (long pt = 0; pt < N; ++pt)
		B.from(load(g, pt, n).adjoint() * load(dg, pt, n), r.ptr(0, 0) + pt, N);
	return r;
}

Field maurer_cartan(const LieAlgebra &alg, const Field &g)
{
	const Space &sp = g.sp;
	Field r(sp, 1, alg.dim());
	for (int axis = 0; axis < 4; ++axis) {
		if (!sp.has(axis))
			continue;
		Field m = maurer_cartan_axis(alg, g, axis);
		int c = sp.index_of(1u << axis);
		for (int ch = 0; ch < alg.dim(); ++ch)
			std::copy(m.ptr(0, ch), m.ptr(0, ch) + sp.npts(), r.ptr(c, ch));
	}
	return r;
}

Field gauge_act_3d(const LieAlgebra &alg, const Field &g, const Field &A)
{
	return conjugate_by(alg, g, A) + maurer_cartan(alg, reinterpret(g, A.sp));
}

Field gauge_act_reduced(const LieAlgebra &alg, const Field &g, const Field &a, const Field &kappa)
{
	Field gm = reinterpret(g, a.sp);
	return conjugate_by(alg, gm, a) + maurer_cartan(alg, gm) -
	       wedge(kappa, maurer_cartan_axis(alg, gm, AT));
}

CaloronFields gauge_act_caloron(const LieAlgebra &alg, const Field &g, const CaloronFields &f)
{
	Field gb = reinterpret(g, f.Lambda.sp);
	Field w = maurer_cartan_axis(alg, gb, AT);
	CaloronFields r = f;
	r.Lambda = conjugate_by(alg, gb, f.Lambda) - wedge(f.lambda, w) + maurer_cartan(alg, gb);
	r.Phi = conjugate_by(alg, gb, f.Phi) + w;
	return r;
}

LiftedConnection lift_twist(const LiftedConnection &lc, const Field &beta, int twist)
{
	LiftedConnection r = lc;
	r.alpha += beta;
	r.twist += twist;
	return r;
}

double contact_pair(const LieAlgebra &alg, const Field &u, const Field &v, const Field &kappa)
{
	Field vol = wedge(kappa, exterior_d(kappa));
	return fiber_integrate(wedge(pointwise_pair(alg, u, v), vol));
}

double cocycle_k0(const LieAlgebra &alg, const Field &xi1, const Field &xi2, const Field &kappa)
{
	if (kappa.sp.degree == 0)
		throw std::invalid_argument("degenerate contact volume (degree 0)");
	return contact_pair(alg, partial(xi1, AT), xi2, kappa);
}

Field pointwise_bracket(const LieAlgebra &alg, const Field &a, const Field &b)
{
	return wedge_bracket(alg, a, b);
}

ExtendedElement extended_zero(const LieAlgebra &alg, const Space &sp)
{
	return {Field(sp, 0, 1), Field(sp, 0, alg.dim()), Field(sp, 0, 1)};
}

Field gamma_cocycle(const LieAlgebra &alg, const Field &xi1, const Field &xi2)
{
	return fiber_average(pointwise_pair(alg, xi1, partial(xi2, AT)));
}

ExtendedElement extended_bracket(const LieAlgebra &alg, const ExtendedElement &u, const ExtendedElement &v)
{
	ExtendedElement r;
	r.x = Field(u.x.sp, 0, 1);
	r.xi = pointwise_bracket(alg, u.xi, v.xi) - wedge(u.x, partial(v.xi, AT)) + wedge(v.x, partial(u.xi, AT));
	r.y = gamma_cocycle(alg, u.xi, v.xi);
	return r;
}

Field extended_pair(const LieAlgebra &alg, const ExtendedElement &u, const ExtendedElement &v)
{
	return fiber_average(pointwise_pair(alg, u.xi, v.xi)) + wedge(u.x, v.y) + wedge(v.x, u.y);
}

CConnection operator+(const CConnection &l, const CConnection &t)
{
	return {l.kappa + t.kappa, l.a + t.a, l.b + t.b};
}

CConnection operator*(double s, const CConnection &l) { return {s * l.kappa, s * l.a, s * l.b}; }

CConnection rep_on_cconnection(const LieAlgebra &alg, const ExtendedElement &u, const CConnection &l)
{
	Field dxi = partial(u.xi, AT);
	CConnection r;
	r.kappa = exterior_d(u.x);
	r.a = exterior_d(u.xi) - wedge(l.kappa, dxi) + wedge_bracket(alg, l.a, u.xi) +
	      wedge(u.x, partial(l.a, AT));
	r.b = exterior_d(u.y) + fiber_average(wedge_pair(alg, l.a, dxi));
	return r;
}

CConnection moment_f(const LieAlgebra &alg, const CConnection &l)
{
	Field da = partial(l.a, AT);
	CConnection r;
	r.kappa = exterior_d(l.kappa);
	r.a = curvature(alg, l.a) - wedge(l.kappa, da);
	r.b = exterior_d(l.b) + 0.5 * fiber_average(wedge_pair(alg, l.a, da));
	return r;
}

namespace {

double xy_integral(const Field &w)
{
	if (w.p != 2 || w.nch != 1)
		throw std::invalid_argument("xy_integral takes a real 2-form");
	const double *c = w.ptr(w.sp.index_of((1u << AX) | (1u << AY)), 0);
	double s = 0;
	for (long pt = 0; pt < w.npts(); ++pt)
		s += c[pt];
	return s / w.npts();
}

} // namespace

double omega_cconnection(const LieAlgebra &alg, const CConnection &X, const CConnection &Y)
{
	return -xy_integral(wedge_pair(alg, X.a, Y.a)) - xy_integral(wedge(X.kappa, Y.b)) -
	       xy_integral(wedge(X.b, Y.kappa));
}

double moment_pairing(const LieAlgebra &alg, const CConnection &F, const ExtendedElement &u)
{
	return xy_integral(wedge_pair(alg, F.a, u.xi)) + xy_integral(wedge(u.y, F.kappa)) +
	       xy_integral(wedge(u.x, F.b));
}

} // namespace calbf
