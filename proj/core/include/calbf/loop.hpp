#pragma once

#include "calbf/lie.hpp"

#include <functional>
#include <vector>

namespace calbf {

// A loop in su(n) sampled at theta_j = j/n, stored as basis coordinates c[j*dim + a].
struct LoopElement {
	const LieAlgebra *alg = nullptr;
	int n = 0;
	std::vector<double> c;

	LoopElement() = default;
	LoopElement(const LieAlgebra &g, int n_);

	int dim() const { return alg->dim(); }
	double *at(int j) { return c.data() + std::size_t(j) * dim(); }
	const double *at(int j) const { return c.data() + std::size_t(j) * dim(); }
	Mat matrix(int j) const { return alg->to_matrix(at(j)); }

	LoopElement &operator+=(const LoopElement &o);
	LoopElement &operator-=(const LoopElement &o);
	LoopElement &operator*=(double s);
};

LoopElement operator+(LoopElement a, const LoopElement &b);
LoopElement operator-(LoopElement a, const LoopElement &b);
LoopElement operator*(double s, LoopElement a);

LoopElement make_loop(const LieAlgebra &g, int n, const std::function<void(double, double *)> &f);
LoopElement loop_derivative(const LoopElement &x);
LoopElement loop_bracket(const LoopElement &x, const LoopElement &y);
double loop_pair(const LoopElement &x, const LoopElement &y);
double loop_band_excess(const LoopElement &x);
double loop_norm(const LoopElement &x);

struct LoopGroupElement {
	std::vector<Mat> g;
	int winding = 0;

	int n() const { return int(g.size()); }
};

LoopGroupElement loop_exp(const LoopElement &x);
LoopGroupElement loop_constant(const Mat &g, int n);
LoopGroupElement loop_multiply(const LoopGroupElement &a, const LoopGroupElement &b);
LoopGroupElement loop_inverse(const LoopGroupElement &a);
std::vector<Mat> loop_group_derivative(const LoopGroupElement &a);
// gamma^{-1} gamma', projected to the algebra
LoopElement left_log_derivative(const LieAlgebra &alg, const LoopGroupElement &a);
LoopElement loop_conjugate(const LoopGroupElement &a, const LoopElement &x); // gamma x gamma^{-1}

// Conventions of the affine algebra.  The central cocycle is always
// +k*scale*<<xi1, xi2'>>; orientation o = +1 gives the rotation terms
// +x1 xi2' - x2 xi1' and pairing -x1 y2 - x2 y1, o = -1 flips both.  The two
// choices are isomorphic via x -> -x.  Circle-bundle code uses o = -1.
struct AffineConvention {
	int k = 1;
	double scale = 1.0;
	int orientation = +1;

	double level() const { return k * scale; }
};

inline AffineConvention loop_convention(int k) { return {k, 1.0, +1}; }
inline AffineConvention bundle_convention(int k, double scale) { return {k, scale, -1}; }

struct CheckVector {
	double x = 0;
	LoopElement xi;
};

struct AffineVector {
	double x = 0;
	LoopElement xi;
	double y = 0;
};

AffineVector affine_d(const LieAlgebra &g, int n);
AffineVector affine_c(const LieAlgebra &g, int n);

AffineVector affine_bracket(const AffineVector &u, const AffineVector &v, const AffineConvention &cv);
AffineVector affine_bracket(const AffineVector &u, const AffineVector &v, int k);
double affine_pair(const AffineVector &u, const AffineVector &v, const AffineConvention &cv);
double affine_pair(const AffineVector &u, const AffineVector &v, int k);
AffineVector affine_adjoint(const LoopGroupElement &gamma, const AffineVector &v,
                            const AffineConvention &cv);
AffineVector affine_adjoint(const LoopGroupElement &gamma, const AffineVector &v, int k);

CheckVector check_bracket(const CheckVector &u, const CheckVector &v, int orientation = +1);
CheckVector check_adjoint(const LoopGroupElement &gamma, const CheckVector &u,
                          int orientation = +1);
CheckVector beta_map(const CheckVector &u, const CheckVector &v);

double group_cocycle_sigma(const LoopGroupElement &gamma, const CheckVector &u,
                           const AffineConvention &cv);
double group_cocycle_sigma(const LoopGroupElement &gamma, const CheckVector &u, int k);

// the Higgs value over Phi: (1, -Phi, y) with y fixed by <<<V,V>>> = 0
AffineVector higgs_vector(const LoopElement &Phi, const AffineConvention &cv);
// the two orbit constraints: <<<V,V>>> and <<<V,c>>> + orientation
std::pair<double, double> higgs_constraints(const AffineVector &V, const AffineConvention &cv);

} // namespace calbf
