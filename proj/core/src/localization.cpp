#include "calbf/localization.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace calbf {

namespace {

using cplx = std::complex<double>;
using GL = boost::math::quadrature::gauss<double, 30>;
constexpr double pi = std::numbers::pi;

// composite rule on [-1, 1]
template <class F>
auto panels(int n, F f)
{
	decltype(f(0.0)) s{};
	double h = 2.0 / n;
	for (int p = 0; p < n; ++p)
		s += GL::integrate(f, -1 + p * h, -1 + (p + 1) * h);
	return s;
}

} // namespace

void check_resolution(const Orbit &X, double xi)
{
	if (X.r <= 0 || X.panels <= 0)
		throw std::invalid_argument("orbit radius and panel count must be positive");
	if (std::abs(xi) * X.r * 2.0 / X.panels > 20)
		throw std::domain_error("quadrature resolution too low for this frequency");
}

double symplectic_volume(const Orbit &X)
{
	check_resolution(X, 0);
	return 2 * pi * X.r * panels(X.panels, [](double) { return 1.0; });
}

cplx dh_measure(const Orbit &X, double xi)
{
	check_resolution(X, xi);
	double re = panels(X.panels, [&](double u) { return std::cos(xi * X.r * u); });
	double im = panels(X.panels, [&](double u) { return std::sin(xi * X.r * u); });
	return 2 * pi * X.r * cplx(re, im);
}

cplx dh_measure(const std::vector<Orbit> &disjoint, double xi)
{
	cplx s = 0;
	for (const auto &X : disjoint)
		s += dh_measure(X, xi);
	return s;
}

std::vector<cplx> dh_sample(const Orbit &X, const std::vector<double> &xi)
{
	std::vector<cplx> r;
	r.reserve(xi.size());
	for (double x : xi)
		r.push_back(dh_measure(X, x));
	return r;
}

double dh_support_radius(const Orbit &X)
{
	// <mu^2> = -DH''(0) / DH(0); a uniform density on [-R, R] has <mu^2> = R^2 / 3
	// 7-point sixth-order stencil; DH is entire, so a wide step keeps rounding small
	const double w[] = {-49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
	double h = 0.05 / X.r;
	double d2 = w[0] * dh_measure(X, 0).real();
	for (int j = 1; j <= 3; ++j)
		d2 += w[j] * (dh_measure(X, j * h).real() + dh_measure(X, -j * h).real());
	d2 /= h * h;
	return std::sqrt(-3 * d2 / dh_measure(X, 0).real());
}

double TwoRoutes::rel() const
{
	double s = std::max(std::abs(direct), std::abs(other));
	return s > 0 ? std::abs(direct - other) / s : 0;
}

TwoRoutes z_norm_squared(const Orbit &X, double eps)
{
	if (eps <= 0)
		throw std::invalid_argument("eps must be positive");
	TwoRoutes t;
	t.direct = 2 * pi * X.r * panels(X.panels, [&](double u) { return std::exp(-X.r * X.r * u * u / (2 * eps)); });
	// f_eps is below 1e-16 of its peak beyond |xi| = sqrt(74 / eps)
	double L = std::sqrt(74 / eps);
	int n = std::max(8, int(std::ceil(L * X.r / 4)));
	double c = std::sqrt(eps / (2 * pi));
	auto g = [&](double s) {
		double xi = L * s;
		return c * std::exp(-eps * xi * xi / 2) * dh_measure(X, xi).real();
	};
	t.other = L * panels(n, g);
	return t;
}

TwoRoutes z_pair(const Orbit &X, const Orbit &Y, int points, double cutoff)
{
	if (points < 2)
		throw std::invalid_argument("z_pair needs at least two points");
	TwoRoutes t;
	double a = X.r * Y.r;
	int n = std::max(X.panels, Y.panels);
	check_resolution({1.0, n}, a);
	t.direct = 4 * pi * pi * a * panels(n, [&](double u) {
		return panels(n, [&](double v) { return std::cos(a * u * v); });
	});

	auto grid = [&](double R) {
		std::vector<double> x(points), w(points);
		double h = 2 * R / (points - 1);
		for (int i = 0; i < points; ++i) {
			x[i] = -R + i * h;
			w[i] = (i == 0 || i == points - 1) ? h / 2 : h;
		}
		return std::pair{x, w};
	};
	auto [eta, we] = grid(cutoff / X.r);
	auto [xi, wx] = grid(cutoff / Y.r);
	Orbit Xf = X, Yf = Y;
	Xf.panels = std::max(X.panels, int(std::ceil(cutoff / 5)));
	Yf.panels = std::max(Y.panels, int(std::ceil(cutoff / 5)));
	auto dx = dh_sample(Xf, eta);
	auto dy = dh_sample(Yf, xi);
	// both densities are real and even here, but keep the full complex kernel
	cplx s = 0;
	for (int i = 0; i < points; ++i) {
		cplx row = 0;
		for (int j = 0; j < points; ++j)
			row += wx[j] * std::polar(1.0, -eta[i] * xi[j]) * dy[j];
		s += we[i] * dx[i] * row;
	}
	t.other = s.real() / (2 * pi);
	return t;
}

void write_dh_csv(std::ostream &os, const std::vector<Orbit> &orbits, const std::vector<double> &xi)
{
	os << "r,xi,re,im\n";
	os.precision(17);
	for (const auto &X : orbits)
		for (double x : xi) {
			cplx d = dh_measure(X, x);
			os << X.r << ',' << x << ',' << d.real() << ',' << d.imag() << '\n';
		}
}

} // namespace calbf
