#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace calbf {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// su(n) in the basis t_a = -(i/2) lambda_a with lambda_a the generalized
// Gell-Mann matrices.  The basis is orthonormal for <X,Y> = -2 Re tr(XY),
// so coordinates in it are the natural storage for Lie-valued fields.
class LieAlgebra {
public:
	explicit LieAlgebra(int n = 2);

	int rank() const { return n_; }
	int dim() const { return dim_; }
	const Mat &generator(int a) const { return basis_[a]; }

	Mat to_matrix(const double *c) const;
	void from_matrix(const Mat &m, double *c) const;

	struct Entry {
		int a, b, c;
		double v;
	};
	// nonzero structure constants, [t_a, t_b] = sum_c v t_c
	const std::vector<Entry> &structure() const { return f_; }

	void bracket(const double *x, const double *y, double *out) const;
	double pair(const double *x, const double *y) const;

private:
	int n_, dim_;
	std::vector<Mat> basis_;
	std::vector<Entry> f_;
};

// matrix-level operations; rank mismatch throws std::invalid_argument
Mat bracket(const Mat &X, const Mat &Y);
double pair(const Mat &X, const Mat &Y);
Mat exp_map(const Mat &X);
Mat adjoint(const Mat &g, const Mat &X);

bool is_lie_matrix(const Mat &X, double tol = 1e-13);
bool is_group_matrix(const Mat &g, double tol = 1e-12);

} // namespace calbf
