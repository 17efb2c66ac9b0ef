#pragma once

#include "calbf/caloron.hpp"

namespace calbf {

// pointwise operations on group fields (see group_at for the layout)
Field group_multiply(const Field &g, const Field &h);
Field group_inverse(const Field &g);
Field conjugate_by(const LieAlgebra &alg, const Field &g, const Field &X); // g^{-1} X g, any degree
Field maurer_cartan(const LieAlgebra &alg, const Field &g);                 // g^{-1} dg over the form axes
Field maurer_cartan_axis(const LieAlgebra &alg, const Field &g, int axis);  // g^{-1} d_axis g as a 0-form
double group_unitarity_defect(const Field &g);

// A^g = g^{-1} A g + g^{-1} dg
Field gauge_act_3d(const LieAlgebra &alg, const Field &g, const Field &A);
// a^g = g^{-1} a g + g^{-1} (d - kappa L_R) g
Field gauge_act_reduced(const LieAlgebra &alg, const Field &g, const Field &a, const Field &kappa);
// Lambda^g = g^{-1} Lambda g - lambda g^{-1} g' + g^{-1} d g,  Phi^g = g^{-1} Phi g + g^{-1} g'
CaloronFields gauge_act_caloron(const LieAlgebra &alg, const Field &g, const CaloronFields &f);

// alpha -> alpha + beta for periodic beta, plus `twist` units of a degree-one line bundle
LiftedConnection lift_twist(const LiftedConnection &lc, const Field &beta, int twist);

// k0(xi1, xi2) = <<L_R xi1, xi2>> with the contact pairing <<u,v>> = int kappa^dkappa <u,v>
double contact_pair(const LieAlgebra &alg, const Field &u, const Field &v, const Field &kappa);
double cocycle_k0(const LieAlgebra &alg, const Field &xi1, const Field &xi2, const Field &kappa);
Field pointwise_bracket(const LieAlgebra &alg, const Field &a, const Field &b);

// (x, xi, y) with x, y theta-independent real 0-forms and xi a Lie 0-form, all on the bundle
struct ExtendedElement {
	Field x;
	Field xi;
	Field y;
};

ExtendedElement extended_zero(const LieAlgebra &alg, const Space &sp);
// gamma(xi1, xi2) = K <xi1, L_R xi2>
Field gamma_cocycle(const LieAlgebra &alg, const Field &xi1, const Field &xi2);
// (0, [xi1,xi2] - x1 xi2' + x2 xi1', gamma(xi1, xi2))
ExtendedElement extended_bracket(const LieAlgebra &alg, const ExtendedElement &u, const ExtendedElement &v);
// K<xi1,xi2> + x1 y2 + x2 y1, a function on the base
Field extended_pair(const LieAlgebra &alg, const ExtendedElement &u, const ExtendedElement &v);

// l~ = (kappa, a, b): kappa a connection, a horizontal Lie 1-form, b a basic real 1-form
struct CConnection {
	Field kappa;
	Field a;
	Field b;
};

CConnection operator+(const CConnection &l, const CConnection &t);
CConnection operator*(double s, const CConnection &l);

// infinitesimal action: (dx, D_H xi + [a, xi] + x L_R a, dy + K<a, L_R xi>)
CConnection rep_on_cconnection(const LieAlgebra &alg, const ExtendedElement &u, const CConnection &l);
// F_l = (dkappa, F_a - kappa ^ L_R a, db + 1/2 K<a ^ L_R a>)
CConnection moment_f(const LieAlgebra &alg, const CConnection &l);
// -int_Sigma [K<X_a ^ Y_a> + X_kappa ^ Y_b + X_b ^ Y_kappa], the sign that makes F_l the moment map
// for the pairing with + cross terms
double omega_cconnection(const LieAlgebra &alg, const CConnection &X, const CConnection &Y);
// int_Sigma [K<F_a, xi> + F_kappa y + F_b x] over the dx^dy components
double moment_pairing(const LieAlgebra &alg, const CConnection &F, const ExtendedElement &u);

} // namespace calbf
