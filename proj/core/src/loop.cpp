#include "calbf/loop.hpp"

#include "calbf/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace calbf {

namespace {

void same_grid(const LoopElement &a, const LoopElement &b)
{
	if (a.n != b.n || a.alg->dim() != b.alg->dim())
		throw std::invalid_argument("grid mismatch");
}

void same_grid(const LoopGroupElement &g, const LoopElement &x)
{
	if (g.n() != x.n || g.g[0].rows() != x.alg->rank())
		throw std::invalid_argument("grid mismatch");
}

} // namespace

LoopElement::LoopElement(const LieAlgebra &g, int n_) : alg(&g), n(n_), c(std::size_t(n_) * g.dim(), 0.0) {}

LoopElement &LoopElement::operator+=(const LoopElement &o)
{
	same_grid(*this, o);
	for (std::size_t i = 0; i < c.size(); ++i)
		c[i] += o.c[i];
	return *this;
}

LoopElement &LoopElement::operator-=(const LoopElement &o)
{
	same_grid(*this, o);
	for (std::size_t i = 0; i < c.size(); ++i)
		c[i] -= o.c[i];
	return *this;
}

LoopElement &LoopElement::operator*=(double s)
{
	for (auto &v : c)
		v *= s;
	return *this;
}

LoopElement operator+(LoopElement a, const LoopElement &b) { return a += b; }
LoopElement operator-(LoopElement a, const LoopElement &b) { return a -= b; }
LoopElement operator*(double s, LoopElement a) { return a *= s; }

LoopElement make_loop(const LieAlgebra &g, int n, const std::function<void(double, double *)> &f)
{
	LoopElement x(g, n);
	for (int j = 0; j < n; ++j)
		f(double(j) / n, x.at(j));
	return x;
}

LoopElement loop_derivative(const LoopElement &x)
{
	LoopElement d(*x.alg, x.n);
	int D = x.dim();
	for (int a = 0; a < D; ++a)
		fft::derivative(x.c.data() + a, D, d.c.data() + a, D, x.n);
	return d;
}

LoopElement loop_bracket(const LoopElement &x, const LoopElement &y)
{
	same_grid(x, y);
	LoopElement r(*x.alg, x.n);
	for (int j = 0; j < x.n; ++j)
		x.alg->bracket(x.at(j), y.at(j), r.at(j));
	return r;
}

double loop_pair(const LoopElement &x, const LoopElement &y)
{
	same_grid(x, y);
	double s = 0;
	for (std::size_t i = 0; i < x.c.size(); ++i)
		s += x.c[i] * y.c[i];
	return s / x.n;
}

double loop_norm(const LoopElement &x) { return std::sqrt(loop_pair(x, x)); }

double loop_band_excess(const LoopElement &x)
{
	double e = 0;
	for (int a = 0; a < x.dim(); ++a)
		e = std::max(e, fft::band_excess(x.c.data() + a, x.dim(), x.n, x.n / 3));
	return e;
}

LoopGroupElement loop_exp(const LoopElement &x)
{
	LoopGroupElement g;
	g.g.reserve(x.n);
	for (int j = 0; j < x.n; ++j)
		g.g.push_back(exp_map(x.matrix(j)));
	return g;
}

LoopGroupElement loop_constant(const Mat &g, int n)
{
	LoopGroupElement r;
	r.g.assign(n, g);
	return r;
}

LoopGroupElement loop_multiply(const LoopGroupElement &a, const LoopGroupElement &b)
{
	if (a.n() != b.n())
		throw std::invalid_argument("grid mismatch");
	LoopGroupElement r;
	r.winding = a.winding + b.winding;
	for (int j = 0; j < a.n(); ++j)
		r.g.push_back(a.g[j] * b.g[j]);
	return r;
}

LoopGroupElement loop_inverse(const LoopGroupElement &a)
{
	LoopGroupElement r;
	r.winding = -a.winding;
	for (const auto &m : a.g)
		r.g.push_back(m.adjoint());
	return r;
}

std::vector<Mat> loop_group_derivative(const LoopGroupElement &a)
{
	int n = a.n(), r = int(a.g[0].rows());
	std::vector<Mat> d(n, Mat(r, r));
	std::vector<double> re(n), im(n), dre(n), dim(n);
	for (int i = 0; i < r; ++i)
		for (int k = 0; k < r; ++k) {
			for (int j = 0; j < n; ++j) {
				re[j] = a.g[j](i, k).real();
				im[j] = a.g[j](i, k).imag();
			}
			fft::derivative(re.data(), 1, dre.data(), 1, n);
			fft::derivative(im.data(), 1, dim.data(), 1, n);
			for (int j = 0; j < n; ++j)
				d[j](i, k) = cplx(dre[j], dim[j]);
		}
	return d;
}

LoopElement left_log_derivative(const LieAlgebra &alg, const LoopGroupElement &a)
{
	auto d = loop_group_derivative(a);
	LoopElement w(alg, a.n());
	for (int j = 0; j < a.n(); ++j)
		alg.from_matrix(a.g[j].adjoint() * d[j], w.at(j));
	return w;
}

LoopElement loop_conjugate(const LoopGroupElement &a, const LoopElement &x)
{
	same_grid(a, x);
	LoopElement r(*x.alg, x.n);
	for (int j = 0; j < x.n; ++j)
		x.alg->from_matrix(a.g[j] * x.matrix(j) * a.g[j].adjoint(), r.at(j));
	return r;
}

AffineVector affine_d(const LieAlgebra &g, int n) { return {1.0, LoopElement(g, n), 0.0}; }
AffineVector affine_c(const LieAlgebra &g, int n) { return {0.0, LoopElement(g, n), 1.0}; }

AffineVector affine_bracket(const AffineVector &u, const AffineVector &v, const AffineConvention &cv)
{
	same_grid(u.xi, v.xi);
	auto d1 = loop_derivative(u.xi), d2 = loop_derivative(v.xi);
	AffineVector r;
	r.x = 0;
	r.xi = loop_bracket(u.xi, v.xi);
	for (std::size_t i = 0; i < r.xi.c.size(); ++i)
		r.xi.c[i] += cv.orientation * (u.x * d2.c[i] - v.x * d1.c[i]);
	r.y = cv.level() * loop_pair(u.xi, d2);
	return r;
}

AffineVector affine_bracket(const AffineVector &u, const AffineVector &v, int k)
{
	return affine_bracket(u, v, loop_convention(k));
}

double affine_pair(const AffineVector &u, const AffineVector &v, const AffineConvention &cv)
{
	return cv.level() * loop_pair(u.xi, v.xi) - cv.orientation * (u.x * v.y + v.x * u.y);
}

double affine_pair(const AffineVector &u, const AffineVector &v, int k)
{
	return affine_pair(u, v, loop_convention(k));
}

AffineVector affine_adjoint(const LoopGroupElement &gamma, const AffineVector &v,
                            const AffineConvention &cv)
{
	same_grid(gamma, v.xi);
	auto w = left_log_derivative(*v.xi.alg, gamma);
	AffineVector r;
	r.x = v.x;
	r.xi = loop_conjugate(gamma, v.xi - (cv.orientation * v.x) * w);
	double K = cv.level();
	r.y = v.y - K * loop_pair(w, v.xi) + cv.orientation * 0.5 * K * v.x * loop_pair(w, w);
	return r;
}

AffineVector affine_adjoint(const LoopGroupElement &gamma, const AffineVector &v, int k)
{
	return affine_adjoint(gamma, v, loop_convention(k));
}

CheckVector check_bracket(const CheckVector &u, const CheckVector &v, int orientation)
{
	AffineVector a{u.x, u.xi, 0}, b{v.x, v.xi, 0};
	auto r = affine_bracket(a, b, AffineConvention{1, 1.0, orientation});
	return {0.0, r.xi};
}

CheckVector check_adjoint(const LoopGroupElement &gamma, const CheckVector &u, int orientation)
{
	auto r = affine_adjoint(gamma, AffineVector{u.x, u.xi, 0}, AffineConvention{1, 1.0, orientation});
	return {r.x, r.xi};
}

CheckVector beta_map(const CheckVector &u, const CheckVector &v)
{
	same_grid(u.xi, v.xi);
	return {0.0, v.x * u.xi - u.x * v.xi};
}

double group_cocycle_sigma(const LoopGroupElement &gamma, const CheckVector &u,
                           const AffineConvention &cv)
{
	same_grid(gamma, u.xi);
	auto w = left_log_derivative(*u.xi.alg, gamma);
	auto a = (0.5 * cv.orientation * u.x) * w - u.xi;
	return cv.level() * loop_pair(a, w);
}

double group_cocycle_sigma(const LoopGroupElement &gamma, const CheckVector &u, int k)
{
	return group_cocycle_sigma(gamma, u, loop_convention(k));
}

AffineVector higgs_vector(const LoopElement &Phi, const AffineConvention &cv)
{
	return {1.0, -1.0 * Phi, cv.orientation * 0.5 * cv.level() * loop_pair(Phi, Phi)};
}

std::pair<double, double> higgs_constraints(const AffineVector &V, const AffineConvention &cv)
{
	auto c = affine_c(*V.xi.alg, V.xi.n);
	return {affine_pair(V, V, cv), affine_pair(V, c, cv) + cv.orientation};
}

} // namespace calbf
