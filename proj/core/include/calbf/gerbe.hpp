#pragma once

#include "calbf/caloron.hpp"
#include "calbf/loop.hpp"

#include <array>

namespace calbf {

// sigma(x, xi) = (x, xi, l(x, xi)) with l(x, xi) = a x + <<zeta, xi>>; zeta empty means 0
struct Splitting {
	double a = 0;
	LoopElement zeta;
};

double splitting_value(const Splitting &s, const CheckVector &u);
AffineVector apply_splitting(const Splitting &s, const CheckVector &u);

// omega_sigma(u, v) = [sigma u, sigma v] - sigma [u, v], a central number
double omega_sigma(const CheckVector &u, const CheckVector &v, const Splitting &s, const AffineConvention &cv);
// Z_sigma(gamma, u) = Ad_gamma sigma(u) - sigma(Ad_gamma u)
double z_sigma(const LoopGroupElement &gamma, const CheckVector &u, const Splitting &s, const AffineConvention &cv);
// s_V(X) = -o <<<X, V~>>> for the Higgs value over Phi, so that s_V(c) = 1
double bundle_splitting(const AffineVector &X, const LoopElement &Phi, const AffineConvention &cv);

// loop at one base point of a base-type field: component `comp`, point (ix, iy, is)
LoopElement loop_at(const LieAlgebra &alg, const Field &f, int comp, int ix, int iy, int is = 0);

// Curvature data of the gerbe for L = (lambda, Lambda), Phi, on a 2d base.
// All are real 2-forms (dx^dy) on the base space, theta-constant.
struct GerbeCurvature {
	Field curving;        // f = -(1/2 omega_sigma(L ^ L) + s_V(sigma F_L))
	Field central;        // central slot of (1 - s_V) sigma(F_L), assembled per point
	Field central_closed; // k s K<F, Phi> + (k s / 2) dlambda K<Phi, Phi>
	Field sigma_central;  // central slot of sigma(F_L)
	Field s_sigma;        // s_V(sigma F_L)
};

GerbeCurvature gerbe_curvature(const LieAlgebra &alg, const CaloronFields &f, const Splitting &s, int k);
Field curving_f(const LieAlgebra &alg, const CaloronFields &f, const Splitting &s, int k);
// l(L) as a real base 1-form
Field splitting_of_connection(const LieAlgebra &alg, const CaloronFields &f, const Splitting &s);
// s_V(F_L~) for L~ = sigma(L) + alpha c + twist, assembled per point with affine brackets (degree 0)
Field lifted_splitting_curvature(const LieAlgebra &alg, const LiftedConnection &lc, const Splitting &s, int k);

// Heisenberg group in exponential coordinates, (a,b,z)(a',b',z') = (a+a', b+b', z+z'+(ab'-ba')/2)
namespace heisenberg {

using H = std::array<double, 3>;

H multiply(const H &g, const H &h);
H inverse(const H &g);
double omega(const H &u, const H &v); // a b' - b a'
// Ad_g X by a central difference of g exp(tX) g^{-1}
H adjoint_fd(const H &g, const H &X, double h = 0.5);
// [X, Y] by the mixed central difference of the group commutator
H bracket_fd(const H &X, const H &Y, double h = 0.5);
// nu = dz - (a db - b da)/2 along a tangent vector at g
double nu(const H &g, const H &dg);

} // namespace heisenberg

} // namespace calbf
