#pragma once

#include <complex>
#include <functional>

// Thin FFTW wrappers for periodic sequences of period 1.
namespace calbf::fft {

// d^order/dx^order of a strided periodic sequence; Nyquist dropped for odd order
void derivative(const double *in, long in_stride, double *out, long out_stride, int n,
                int order = 1);

// multiply each Fourier mode m (signed, |m| <= n/2) by mult(m); result must be real
void apply1d(const double *in, long in_stride, double *out, long out_stride, int n,
             const std::function<std::complex<double>(int)> &mult);

// zero all modes with |m| > mmax
void band_limit(const double *in, long in_stride, double *out, long out_stride, int n,
                int mmax);

// largest |c_m| over |m| > mmax, with c_m = (1/n) sum f_j e^{-2 pi i m j/n}
double band_excess(const double *in, long in_stride, int n, int mmax);

// in-place real multiplier on an n0 x n1 x n2 array (last index fastest)
void multiplier3d(double *data, int n0, int n1, int n2,
                  const std::function<double(int, int, int)> &mult);

} // namespace calbf::fft
