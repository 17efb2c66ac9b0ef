#include "calbf/caloron.hpp"

#include <stdexcept>

namespace calbf {

Connection3d make_connection(Field A)
{
	Connection3d c;
	c.kappa = make_kappa(A.sp);
	c.A = std::move(A);
	return c;
}

Space base_of(const Space &bundle)
{
	Space s = bundle;
	s.form = (1u << AX) | (1u << AY);
	return s;
}

Space bundle_of(const Space &base)
{
	if (base.n[AS] != 1)
		throw std::invalid_argument("bundle_of: base has an extra direction");
	Space s = base;
	s.form = (1u << AX) | (1u << AY) | (1u << AT);
	return s;
}

Field base_lambda(const Space &base)
{
	Field l(base, 1, 1);
	auto x = coordinate(base, AX);
	double *ly = l.ptr(base.index_of(1u << AY), 0);
	for (long pt = 0; pt < base.npts(); ++pt)
		ly[pt] = base.degree * x.v[pt];
	return l;
}

Field base_dlambda(const Space &base)
{
	Field f(base, 2, 1);
	double *c = f.ptr(base.index_of((1u << AX) | (1u << AY)), 0);
	std::fill(c, c + base.npts(), double(base.degree));
	return f;
}

CaloronFields make_caloron(Field Lambda, Field Phi)
{
	if (Lambda.p != 1 || Phi.p != 0)
		throw std::invalid_argument("make_caloron: Lambda must be a 1-form and Phi a 0-form");
	if (Lambda.nch != Phi.nch || Lambda.sp != Phi.sp)
		throw std::invalid_argument("make_caloron: Lambda and Phi differ in shape");
	if (Lambda.sp.form & (1u << AT))
		throw std::invalid_argument("make_caloron: theta is the loop parameter, not a form direction");
	CaloronFields f;
	f.lambda = base_lambda(Lambda.sp);
	f.dlambda = base_dlambda(Lambda.sp);
	f.Lambda = std::move(Lambda);
	f.Phi = std::move(Phi);
	return f;
}

LiftedConnection make_lift(CaloronFields f)
{
	LiftedConnection lc;
	lc.alpha = Field(f.Lambda.sp, 1, 1);
	lc.fields = std::move(f);
	return lc;
}

CaloronFields cal_forward(const Connection3d &c)
{
	const Space &sp = c.A.sp;
	Space b = base_of(sp);
	Field Phi = contract_R(c.A);
	Field hor = project_horizontal(c.A, c.kappa);
	CaloronFields f;
	f.lambda = restrict_components(c.kappa, b, 1);
	f.dlambda = restrict_components(exterior_d(c.kappa), b, 2);
	f.Lambda = restrict_components(hor, b, 1);
	f.Phi = reinterpret(Phi, b);
	return f;
}

Connection3d cal_inverse(const CaloronFields &f)
{
	Space m = bundle_of(f.Lambda.sp);
	Connection3d c;
	c.kappa = embed_components(f.lambda, m);
	std::fill(c.kappa.ptr(m.index_of(1u << AT), 0), c.kappa.ptr(m.index_of(1u << AT), 0) + m.npts(), 1.0);
	Field Phi = reinterpret(f.Phi, m);
	c.A = embed_components(f.Lambda, m) + wedge(c.kappa, Phi);
	return c;
}

Field curvature(const LieAlgebra &g, const Field &A)
{
	return exterior_d(A) + 0.5 * wedge_bracket(g, A, A);
}

Field caloron_curvature(const LieAlgebra &g, const CaloronFields &f)
{
	return exterior_d(f.Lambda) + 0.5 * wedge_bracket(g, f.Lambda, f.Lambda) -
	       wedge(f.lambda, partial(f.Lambda, AT));
}

Field higgs_covariant(const LieAlgebra &g, const CaloronFields &f)
{
	Field n = exterior_d(f.Phi) + wedge_bracket(g, f.Lambda, f.Phi);
	n -= wedge(f.lambda, partial(f.Phi, AT));
	n -= partial(f.Lambda, AT);
	return -1.0 * n;
}

Field bf_curvature(const LieAlgebra &g, const CaloronFields &f)
{
	return caloron_curvature(g, f) + wedge(f.dlambda, f.Phi);
}

Field looped_curvature(const LieAlgebra &g, const CaloronFields &f)
{
	Space m = bundle_of(f.Lambda.sp);
	Field kappa = embed_components(f.lambda, m);
	std::fill(kappa.ptr(m.index_of(1u << AT), 0), kappa.ptr(m.index_of(1u << AT), 0) + m.npts(), 1.0);
	return embed_components(bf_curvature(g, f), m) + wedge(kappa, embed_components(higgs_covariant(g, f), m));
}

Residual looped_curvature_identity(const LieAlgebra &g, const CaloronFields &f)
{
	Field lhs = curvature(g, cal_inverse(f).A);
	Field rhs = looped_curvature(g, f);
	return {sup_diff(lhs, rhs), std::max(sup_norm(lhs), sup_norm(rhs))};
}

} // namespace calbf
