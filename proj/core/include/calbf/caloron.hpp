#pragma once

#include "calbf/field.hpp"

namespace calbf {

// 3d data on the bundle space: kappa real, A Lie-valued (nch = dim)
struct Connection3d {
	Field kappa;
	Field A;
};

Connection3d make_connection(Field A);

// Loop-valued data on the base space (theta is the loop parameter).
// lambda, dlambda are real and theta-independent; Lambda is a 1-form, Phi a 0-form.
struct CaloronFields {
	Field lambda;
	Field dlambda;
	Field Lambda;
	Field Phi;
};

// L~ = (lambda, Lambda, alpha) with alpha a periodic real 1-form; `twist` adds
// twist * dx^dy to d alpha, the curvature of a degree-`twist` line bundle.
struct LiftedConnection {
	CaloronFields fields;
	Field alpha;
	int twist = 0;
};

Space base_of(const Space &bundle);
Space bundle_of(const Space &base);

// lambda = d x dy and d lambda = d dx^dy on a base-type space
Field base_lambda(const Space &base);
Field base_dlambda(const Space &base);
CaloronFields make_caloron(Field Lambda, Field Phi);
LiftedConnection make_lift(CaloronFields f);

CaloronFields cal_forward(const Connection3d &c);
Connection3d cal_inverse(const CaloronFields &f);

Field curvature(const LieAlgebra &g, const Field &A); // dA + 1/2 [A ^ A]

// Loop-side pieces, written for the circle-bundle orientation of the affine algebra:
//   F_mid = d Lambda + 1/2 [Lambda ^ Lambda] - lambda ^ Lambda'
//   N     = -(d Phi + [Lambda, Phi] - lambda Phi' - Lambda')   (the middle slot of d_L V)
Field caloron_curvature(const LieAlgebra &g, const CaloronFields &f);
Field higgs_covariant(const LieAlgebra &g, const CaloronFields &f);
// F_mid + dlambda Phi, the loop part of beta(F_L, V)
Field bf_curvature(const LieAlgebra &g, const CaloronFields &f);
// beta(F_L, V) - beta(L, d_L V) reassembled on the bundle: bf + kappa ^ N
Field looped_curvature(const LieAlgebra &g, const CaloronFields &f);

struct Residual {
	double abs = 0;
	double scale = 0;
	double rel() const { return scale > 0 ? abs / scale : abs; }
};

// F of cal_inverse(f) against looped_curvature(f)
Residual looped_curvature_identity(const LieAlgebra &g, const CaloronFields &f);

} // namespace calbf
