#include "calbf/lie.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace calbf {

namespace {

void check_same(const Mat &X, const Mat &Y)
{
	if (X.rows() != Y.rows() || X.cols() != Y.cols() || X.rows() != X.cols())
		throw std::invalid_argument("rank mismatch");
}

} // namespace

LieAlgebra::LieAlgebra(int n) : n_(n), dim_(n * n - 1)
{
	if (n < 2)
		throw std::invalid_argument("su(n) needs n >= 2");
	const cplx I(0, 1);
	auto add = [&](const Mat &lambda) { basis_.push_back(-0.5 * I * lambda); };
	for (int k = 1; k < n; ++k) {
		for (int j = 0; j < k; ++j) {
			Mat s = Mat::Zero(n, n);
			s(j, k) = s(k, j) = 1;
			add(s);
			Mat a = Mat::Zero(n, n);
			a(j, k) = -I;
			a(k, j) = I;
			add(a);
		}
		Mat d = Mat::Zero(n, n);
		double c = std::sqrt(2.0 / (k * (k + 1.0)));
		for (int j = 0; j < k; ++j)
			d(j, j) = c;
		d(k, k) = -k * c;
		add(d);
	}
	for (int a = 0; a < dim_; ++a)
		for (int b = 0; b < dim_; ++b) {
			Mat br = basis_[a] * basis_[b] - basis_[b] * basis_[a];
			for (int c = 0; c < dim_; ++c) {
				double v = calbf::pair(basis_[c], br);
				if (std::abs(v) > 1e-14)
					f_.push_back({a, b, c, v});
			}
		}
}

Mat LieAlgebra::to_matrix(const double *c) const
{
	Mat m = Mat::Zero(n_, n_);
	for (int a = 0; a < dim_; ++a)
		m += c[a] * basis_[a];
	return m;
}

void LieAlgebra::from_matrix(const Mat &m, double *c) const
{
	for (int a = 0; a < dim_; ++a) {
		// -2 Re tr(t_a m) without forming the product
		double s = 0;
		for (int i = 0; i < n_; ++i)
			for (int j = 0; j < n_; ++j)
				s += (basis_[a](i, j) * m(j, i)).real();
		c[a] = -2 * s;
	}
}

void LieAlgebra::bracket(const double *x, const double *y, double *out) const
{
	for (int c = 0; c < dim_; ++c)
		out[c] = 0;
	for (const auto &e : f_)
		out[e.c] += e.v * x[e.a] * y[e.b];
}

double LieAlgebra::pair(const double *x, const double *y) const
{
	double s = 0;
	for (int a = 0; a < dim_; ++a)
		s += x[a] * y[a];
	return s;
}

Mat bracket(const Mat &X, const Mat &Y)
{
	check_same(X, Y);
	return X * Y - Y * X;
}

double pair(const Mat &X, const Mat &Y)
{
	check_same(X, Y);
	return -2 * (X * Y).trace().real();
}

Mat exp_map(const Mat &X)
{
	if (X.rows() != X.cols())
		throw std::invalid_argument("rank mismatch");
	if (X.rows() == 2) {
		// X = -(i/2) v.sigma  ->  exp(X) = cos(|v|/2) - i sin(|v|/2) vhat.sigma
		cplx a = X(0, 0), b = X(0, 1), c = X(1, 0);
		if (std::abs(a + X(1, 1)) > 1e-12 || std::abs(a.real()) > 1e-12 ||
		    std::abs(b + std::conj(c)) > 1e-12)
			return X.exp();
		double v1 = -(b.imag() + c.imag());
		double v2 = c.real() - b.real();
		double v3 = -2 * a.imag();
		double r = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
		if (r == 0)
			return Mat::Identity(2, 2);
		double co = std::cos(r / 2), si = std::sin(r / 2) / r;
		Mat g(2, 2);
		const cplx I(0, 1);
		g(0, 0) = co - I * si * v3;
		g(1, 1) = co + I * si * v3;
		g(0, 1) = -I * si * cplx(v1, -v2);
		g(1, 0) = -I * si * cplx(v1, v2);
		return g;
	}
	return X.exp();
}

Mat adjoint(const Mat &g, const Mat &X)
{
	check_same(g, X);
	return g * X * g.adjoint();
}

bool is_lie_matrix(const Mat &X, double tol)
{
	return X.rows() == X.cols() && (X + X.adjoint()).cwiseAbs().maxCoeff() < tol &&
	       std::abs(X.trace()) < tol;
}

bool is_group_matrix(const Mat &g, double tol)
{
	if (g.rows() != g.cols())
		return false;
	Mat e = g * g.adjoint() - Mat::Identity(g.rows(), g.cols());
	return e.cwiseAbs().maxCoeff() < tol && std::abs(g.determinant() - 1.0) < tol;
}

} // namespace calbf
