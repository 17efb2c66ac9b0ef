#pragma once

#include "calbf/gauge.hpp"
#include "calbf/loop.hpp"

#include <string>
#include <utility>
#include <vector>

namespace calbf {

// 1/(16 pi^2): with <X,Y> = -2 Re tr(XY) this makes CS_k(g^{-1}dg) = k deg(g)
double cs_normalization();

struct ActionValue {
	double value = 0;
	double mod_one = 0;
	std::vector<std::pair<std::string, double>> breakdown;
};

ActionValue make_action(double value, std::vector<std::pair<std::string, double>> breakdown = {});
// distance on R/Z
double circle_distance(double a, double b);

// k int_M (1/16 pi^2) <A ^ (dA + 1/3 [A ^ A])>
ActionValue cs_action(const LieAlgebra &alg, const Field &A, int k);
// d/dt CS_k(A + t dA) = (k/8 pi^2) int <dA ^ F_A>
double cs_variation(const LieAlgebra &alg, const Field &A, const Field &dA, int k);

// SU(2) maps on the torus: hedgehog of the given degree (degree n realized as U^n)
Field hedgehog(const Space &sp, int degree, double width = 0.12);
// (1/2 pi^2) int det(q, dq/dx, dq/dy, dq/dtheta) for U = q0 + i q.sigma; SU(2) only
double winding_number(const Field &g);

// contact form data for a horizontal a on a bundle with degree != 0
struct BWMoment {
	double x = -1;
	Field f;        // -(kappa ^ F_a - dkappa ^ a) / (kappa ^ dkappa)
	double y = 0;   // -I/2
	double I = 0;   // int kappa ^ <a ^ L_R a>
};

BWMoment bw_moment(const LieAlgebra &alg, const Field &a, const Field &kappa);
// <<<mu, mu>>> = <<f, f>>_kappa + 2 x y
double bw_moment_square(const LieAlgebra &alg, const BWMoment &mu, const Field &kappa);
// CS'(a) = CS_k(a) - k/(16 pi^2) <<f, f>>_kappa
ActionValue contact_cs_action(const LieAlgebra &alg, const Field &a, const Field &kappa, int k);

// the Hamiltonian picture on horizontal connections: generator of (u, xi),
// v_a(u, xi) and Omega_kappa(X, Y) = int kappa ^ <X ^ Y>
Field bw_generator(const LieAlgebra &alg, const Field &a, const Field &kappa, double u, const Field &xi);
double bw_hamiltonian(const LieAlgebra &alg, const Field &a, const Field &kappa, double u, const Field &xi);
double bw_omega(const LieAlgebra &alg, const Field &kappa, const Field &X, const Field &Y);

// S = int_Sigma <<<F_L~, V~>>> with level scale 1/(8 pi^2)
ActionValue caloron_bf_action(const LieAlgebra &alg, const LiftedConnection &lc, int k);
// the same action from 3d data:
// -k s int_M (<phi, kappa^F_a - dkappa^a> + 1/2 kappa^dkappa <phi,phi> - 1/2 kappa^<a ^ L_R a>)
double cs_split_action(const LieAlgebra &alg, const Connection3d &c, int k);
// derivative of the action in Phi: -k s int K<dPhi, F + dlambda Phi>
double bf_phi_variation(const LieAlgebra &alg, const CaloronFields &f, const Field &dPhi, int k);

struct EOMResidual {
	double bf = 0;       // sup |F_mid + dlambda Phi|
	double bianchi = 0;  // sup |N|
	double flatness = 0; // sup |F_A|
};

EOMResidual eom_residual(const LieAlgebra &alg, const CaloronFields &f);

struct DescentOptions {
	int max_iter = 500;
	double target = 1e-5;
	double mu = 0;   // preconditioner scale, 0 = 4 (2 pi)^2
	double step = 0; // initial step scale, 0 = 1.5 / mu
};

struct DescentResult {
	CaloronFields fields;
	int iterations = 0;
	double flatness = 0;
	std::vector<double> history;
};

// preconditioned L-BFGS descent of 1/2 |F_A|^2 in (Lambda, Phi); degree 0 only
DescentResult eom_descent(const LieAlgebra &alg, CaloronFields start, const DescentOptions &opt = {});

// d<<<F_L~, V~>>> against 1/2 msv, msv = 2 k s K<(F_mid + dlambda Phi) ^ N>, on a base with an s-axis
Field bf_density(const LieAlgebra &alg, const LiftedConnection &lc, int k);
Field msv_form(const LieAlgebra &alg, const CaloronFields &f, int k);
Residual msv_identity(const LieAlgebra &alg, const CaloronFields &f, int k);

// ordered product of exp(-A_theta h) along the fiber over (ix, iy), fundamental representation
Mat wilson_holonomy(const LieAlgebra &alg, const Field &A, int ix, int iy);
double wilson_trace(const LieAlgebra &alg, const Field &A, int ix, int iy);

// k^{-1} <<<Ad_g (0, alpha, 0), (1, -phi, .)>>> and -cs_alpha(U, A) = -<<alpha, g^{-1}g' + g^{-1} phi g>>
double wilson_orbit_lhs(const LoopGroupElement &g, const LoopElement &phi, const LoopElement &alpha, int k);
double wilson_orbit_rhs(const LoopGroupElement &g, const LoopElement &phi, const LoopElement &alpha);

} // namespace calbf
