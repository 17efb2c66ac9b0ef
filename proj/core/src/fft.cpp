#include "calbf/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>
#include <vector>

namespace calbf::fft {

namespace {

std::mutex planner_mutex;

struct Plan1d {
	int n = 0;
	double *r = nullptr;
	fftw_complex *c = nullptr;
	fftw_plan fwd = nullptr, bwd = nullptr;
	explicit Plan1d(int n_) : n(n_)
	{
		std::lock_guard<std::mutex> lock(planner_mutex);
		r = fftw_alloc_real(n);
		c = fftw_alloc_complex(n / 2 + 1);
		fwd = fftw_plan_dft_r2c_1d(n, r, c, FFTW_ESTIMATE);
		bwd = fftw_plan_dft_c2r_1d(n, c, r, FFTW_ESTIMATE);
	}
	~Plan1d()
	{
		std::lock_guard<std::mutex> lock(planner_mutex);
		fftw_destroy_plan(fwd);
		fftw_destroy_plan(bwd);
		fftw_free(r);
		fftw_free(c);
	}
	Plan1d(const Plan1d &) = delete;
	Plan1d &operator=(const Plan1d &) = delete;
};

Plan1d &plan(int n)
{
	thread_local std::map<int, std::unique_ptr<Plan1d>> cache;
	auto &p = cache[n];
	if (!p)
		p = std::make_unique<Plan1d>(n);
	return *p;
}

void load(Plan1d &p, const double *in, long is)
{
	for (int j = 0; j < p.n; ++j)
		p.r[j] = in[j * is];
	fftw_execute(p.fwd);
}

void store(Plan1d &p, double *out, long os)
{
	fftw_execute(p.bwd);
	double s = 1.0 / p.n;
	for (int j = 0; j < p.n; ++j)
		out[j * os] = p.r[j] * s;
}

} // namespace

void derivative(const double *in, long is, double *out, long os, int n, int order)
{
	if (n == 1) {
		out[0] = 0;
		return;
	}
	auto &p = plan(n);
	load(p, in, is);
	const double w = 2 * std::numbers::pi;
	for (int m = 0; m <= n / 2; ++m) {
		std::complex<double> f(1, 0), ik(0, w * m);
		for (int o = 0; o < order; ++o)
			f *= ik;
		if (2 * m == n && (order % 2))
			f = 0;
		std::complex<double> v(p.c[m][0], p.c[m][1]);
		v *= f;
		p.c[m][0] = v.real();
		p.c[m][1] = v.imag();
	}
	store(p, out, os);
}

void apply1d(const double *in, long is, double *out, long os, int n,
             const std::function<std::complex<double>(int)> &mult)
{
	auto &p = plan(n);
	load(p, in, is);
	for (int m = 0; m <= n / 2; ++m) {
		std::complex<double> v(p.c[m][0], p.c[m][1]);
		v *= mult(m);
		p.c[m][0] = v.real();
		p.c[m][1] = v.imag();
	}
	store(p, out, os);
}

void band_limit(const double *in, long is, double *out, long os, int n, int mmax)
{
	auto &p = plan(n);
	load(p, in, is);
	for (int m = mmax + 1; m <= n / 2; ++m)
		p.c[m][0] = p.c[m][1] = 0;
	store(p, out, os);
}

double band_excess(const double *in, long is, int n, int mmax)
{
	auto &p = plan(n);
	load(p, in, is);
	double e = 0;
	for (int m = mmax + 1; m <= n / 2; ++m)
		e = std::max(e, std::hypot(p.c[m][0], p.c[m][1]) / n);
	return e;
}

void multiplier3d(double *data, int n0, int n1, int n2,
                  const std::function<double(int, int, int)> &mult)
{
	int h = n2 / 2 + 1;
	long N = long(n0) * n1 * n2;
	fftw_complex *c;
	double *r;
	fftw_plan fwd, bwd;
	{
		std::lock_guard<std::mutex> lock(planner_mutex);
		r = fftw_alloc_real(N);
		c = fftw_alloc_complex(long(n0) * n1 * h);
		fwd = fftw_plan_dft_r2c_3d(n0, n1, n2, r, c, FFTW_ESTIMATE);
		bwd = fftw_plan_dft_c2r_3d(n0, n1, n2, c, r, FFTW_ESTIMATE);
	}
	std::copy(data, data + N, r);
	fftw_execute(fwd);
	auto sgn = [](int m, int n) { return m <= n / 2 ? m : m - n; };
	for (int a = 0; a < n0; ++a)
		for (int b = 0; b < n1; ++b)
			for (int k = 0; k < h; ++k) {
				double f = mult(sgn(a, n0), sgn(b, n1), k) / N;
				auto &v = c[(long(a) * n1 + b) * h + k];
				v[0] *= f;
				v[1] *= f;
			}
	fftw_execute(bwd);
	std::copy(r, r + N, data);
	std::lock_guard<std::mutex> lock(planner_mutex);
	fftw_destroy_plan(fwd);
	fftw_destroy_plan(bwd);
	fftw_free(r);
	fftw_free(c);
}

} // namespace calbf::fft
