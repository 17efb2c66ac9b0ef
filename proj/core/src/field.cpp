#include "calbf/field.hpp"

#include "calbf/fft.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace calbf {

namespace {

using table_t = std::array<std::vector<unsigned>, 16 * 5>;

table_t build_table()
{
	table_t t;
	for (unsigned form = 0; form < 16; ++form) {
		std::vector<int> axes;
		for (int a = 0; a < 4; ++a)
			if ((form >> a) & 1u)
				axes.push_back(a);
		int m = int(axes.size());
		for (int p = 0; p <= m; ++p) {
			// lexicographic combinations of the sorted axis list
			std::vector<int> idx(p);
			for (int i = 0; i < p; ++i)
				idx[i] = i;
			while (true) {
				unsigned mask = 0;
				for (int i : idx)
					mask |= 1u << axes[i];
				t[form * 5 + p].push_back(mask);
				int i = p - 1;
				while (i >= 0 && idx[i] == m - p + i)
					--i;
				if (i < 0)
					break;
				++idx[i];
				for (int j = i + 1; j < p; ++j)
					idx[j] = idx[j - 1] + 1;
			}
		}
	}
	return t;
}

const table_t &table()
{
	static const table_t t = build_table();
	return t;
}

int popcount(unsigned m) { return std::popcount(m); }

// sign of e_I ^ e_J relative to e_{I|J} in sorted order
double merge_sign(unsigned I, unsigned J)
{
	int inv = 0;
	for (int i = 0; i < 4; ++i)
		if ((I >> i) & 1u)
			inv += popcount(J & ((1u << i) - 1));
	return (inv % 2) ? -1.0 : 1.0;
}

constexpr double fd6[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};

} // namespace

Space Space::bundle(int nx, int ny, int nt, int d)
{
	Space s;
	s.n = {nx, ny, 1, nt};
	s.degree = d;
	s.form = (1u << AX) | (1u << AY) | (1u << AT);
	return s;
}

Space Space::base(int nx, int ny, int nt, int d)
{
	Space s;
	s.n = {nx, ny, 1, nt};
	s.degree = d;
	s.form = (1u << AX) | (1u << AY);
	return s;
}

Space Space::base3(int nx, int ny, int ns, int nt, int d)
{
	Space s;
	s.n = {nx, ny, ns, nt};
	s.degree = d;
	s.form = (1u << AX) | (1u << AY) | (1u << AS);
	return s;
}

long Space::stride(int axis) const
{
	long s = 1;
	for (int a = 3; a > axis; --a)
		s *= n[a];
	return s;
}

int Space::form_dim() const { return popcount(form); }

int Space::ncomp(int p) const { return int(components(p).size()); }

const std::vector<unsigned> &Space::components(int p) const
{
	if (p < 0 || p > form_dim())
		throw std::invalid_argument("form degree out of range");
	return table()[form * 5 + p];
}

int Space::index_of(unsigned mask) const
{
	const auto &c = components(popcount(mask));
	auto it = std::find(c.begin(), c.end(), mask);
	return it == c.end() ? -1 : int(it - c.begin());
}

long Space::theta_shift(int iy) const
{
	return long(degree) * iy * (n[AT] / n[AY]);
}

void Space::validate() const
{
	for (int a = 0; a < 4; ++a)
		if (n[a] < 1)
			throw std::invalid_argument("grid size must be positive");
	if (degree != 0 && (n[AT] % n[AY]) != 0)
		throw std::invalid_argument("n_theta must be a multiple of n_y");
	if (degree != 0 && n[AX] < 8)
		throw std::invalid_argument("twisted x direction needs at least 8 points");
}

std::string component_name(unsigned mask)
{
	static const char *names[4] = {"dx", "dy", "ds", "dtheta"};
	if (!mask)
		return "1";
	std::string s;
	for (int a = 0; a < 4; ++a)
		if ((mask >> a) & 1u) {
			if (!s.empty())
				s += "^";
			s += names[a];
		}
	return s;
}

Field::Field(const Space &s, int p_, int nch_) : sp(s), p(p_), nch(nch_)
{
	sp.validate();
	v.assign(std::size_t(sp.ncomp(p)) * nch * sp.npts(), 0.0);
}

void require_same(const Field &a, const Field &b)
{
	if (a.sp != b.sp || a.p != b.p || a.nch != b.nch)
		throw std::invalid_argument("field shape mismatch");
}

Field &Field::operator+=(const Field &o)
{
	require_same(*this, o);
	for (std::size_t i = 0; i < v.size(); ++i)
		v[i] += o.v[i];
	return *this;
}

Field &Field::operator-=(const Field &o)
{
	require_same(*this, o);
	for (std::size_t i = 0; i < v.size(); ++i)
		v[i] -= o.v[i];
	return *this;
}

Field &Field::operator*=(double s)
{
	for (auto &x : v)
		x *= s;
	return *this;
}

Field operator+(Field a, const Field &b) { return a += b; }
Field operator-(Field a, const Field &b) { return a -= b; }
Field operator*(double s, Field a) { return a *= s; }

double sup_norm(const Field &f)
{
	long N = f.npts();
	double m = 0;
	for (int c = 0; c < f.ncomp(); ++c)
		for (long pt = 0; pt < N; ++pt) {
			double s = 0;
			for (int ch = 0; ch < f.nch; ++ch) {
				double x = f.ptr(c, ch)[pt];
				s += x * x;
			}
			m = std::max(m, s);
		}
	return std::sqrt(m);
}

double sup_diff(const Field &a, const Field &b) { return sup_norm(a - b); }

double rms(const Field &f)
{
	double s = 0;
	for (double x : f.v)
		s += x * x;
	return f.v.empty() ? 0.0 : std::sqrt(s / f.v.size());
}

Field coordinate(const Space &sp, int axis)
{
	Field f(sp, 0, 1);
	long st = sp.stride(axis);
	for (long pt = 0; pt < sp.npts(); ++pt)
		f.v[pt] = double((pt / st) % sp.n[axis]) / sp.n[axis];
	return f;
}

Field constant(const Space &sp, double c)
{
	Field f(sp, 0, 1);
	std::fill(f.v.begin(), f.v.end(), c);
	return f;
}

Field partial(const Field &f, int axis)
{
	const Space &sp = f.sp;
	Field out(sp, f.p, f.nch);
	int n = sp.n[axis];
	if (n == 1)
		return out;
	long st = sp.stride(axis), N = sp.npts();
	if (axis != AX || sp.degree == 0) {
		long outer = N / (st * n);
		for (int c = 0; c < f.ncomp(); ++c)
			for (int ch = 0; ch < f.nch; ++ch) {
				const double *in = f.ptr(c, ch);
				double *o = out.ptr(c, ch);
				for (long a = 0; a < outer; ++a)
					for (long b = 0; b < st; ++b) {
						long base = a * st * n + b;
						fft::derivative(in + base, st, o + base, st, n);
					}
			}
		return out;
	}

	// twisted finite differences in x
	sp.validate();
	const int ny = sp.n[AY], ns = sp.n[AS], nt = sp.n[AT], d = sp.degree;
	const double inv_h = n;
	const bool mix = sp.has(AY) && sp.has(AT);
	const auto &comps = sp.components(f.p);
	for (int c = 0; c < f.ncomp(); ++c) {
		unsigned J = comps[c];
		int cm = -1;
		double msign = 0;
		if (mix && (J & (1u << AY)) && !(J & (1u << AT))) {
			unsigned Jp = (J & ~(1u << AY)) | (1u << AT);
			cm = sp.index_of(Jp);
			msign = (J & (1u << AS)) ? -1.0 : 1.0;
		}
		for (int ch = 0; ch < f.nch; ++ch) {
			const double *in = f.ptr(c, ch);
			const double *inm = cm >= 0 ? f.ptr(cm, ch) : nullptr;
			double *o = out.ptr(c, ch);
			for (int ix = 0; ix < n; ++ix)
				for (int iy = 0; iy < ny; ++iy) {
					long sh = sp.theta_shift(iy);
					for (int is = 0; is < ns; ++is) {
						long row = ((long(iy) * ns + is) * nt);
						for (int it = 0; it < nt; ++it) {
							double acc = 0;
							for (int k = 0; k < 7; ++k) {
								if (k == 3)
									continue;
								int jx = ix + k - 3;
								int m = jx < 0 ? -1 : (jx >= n ? 1 : 0);
								jx -= m * n;
								long jt = ((it + m * sh) % nt + nt) % nt;
								long q = long(jx) * st + row + jt;
								double val = in[q];
								if (inm && m)
									val += m * d * msign * inm[q];
								acc += fd6[k] * val;
							}
							o[long(ix) * st + row + it] = acc * inv_h;
						}
					}
				}
		}
	}
	return out;
}

Field exterior_d(const Field &f)
{
	const Space &sp = f.sp;
	if (f.p >= sp.form_dim())
		throw std::invalid_argument("degree overflow in exterior_d");
	Field out(sp, f.p + 1, f.nch);
	const auto &oc = sp.components(f.p + 1);
	long N = sp.npts();
	for (int axis = 0; axis < 4; ++axis) {
		if (!sp.has(axis))
			continue;
		Field df = partial(f, axis);
		for (int k = 0; k < int(oc.size()); ++k) {
			unsigned J = oc[k];
			if (!((J >> axis) & 1u))
				continue;
			unsigned I = J & ~(1u << axis);
			int ci = sp.index_of(I);
			double s = (popcount(I & ((1u << axis) - 1)) % 2) ? -1.0 : 1.0;
			for (int ch = 0; ch < f.nch; ++ch) {
				const double *a = df.ptr(ci, ch);
				double *o = out.ptr(k, ch);
				for (long pt = 0; pt < N; ++pt)
					o[pt] += s * a[pt];
			}
		}
	}
	return out;
}

namespace {

template <class Op>
Field wedge_impl(const Field &a, const Field &b, int nch_out, Op op)
{
	if (a.sp != b.sp)
		throw std::invalid_argument("space mismatch");
	const Space &sp = a.sp;
	if (a.p + b.p > sp.form_dim())
		throw std::invalid_argument("wedge degree overflow");
	Field out(sp, a.p + b.p, nch_out);
	const auto &ca = sp.components(a.p), &cb = sp.components(b.p);
	for (int i = 0; i < int(ca.size()); ++i)
		for (int j = 0; j < int(cb.size()); ++j) {
			if (ca[i] & cb[j])
				continue;
			int k = sp.index_of(ca[i] | cb[j]);
			op(i, j, k, merge_sign(ca[i], cb[j]), out);
		}
	return out;
}

} // namespace

Field wedge(const Field &a, const Field &b)
{
	long N = a.npts();
	if (a.nch == 1)
		return wedge_impl(a, b, b.nch, [&](int i, int j, int k, double s, Field &out) {
			const double *x = a.ptr(i, 0);
			for (int ch = 0; ch < b.nch; ++ch) {
				const double *y = b.ptr(j, ch);
				double *o = out.ptr(k, ch);
				for (long pt = 0; pt < N; ++pt)
					o[pt] += s * x[pt] * y[pt];
			}
		});
	if (b.nch == 1)
		return wedge_impl(a, b, a.nch, [&](int i, int j, int k, double s, Field &out) {
			const double *y = b.ptr(j, 0);
			for (int ch = 0; ch < a.nch; ++ch) {
				const double *x = a.ptr(i, ch);
				double *o = out.ptr(k, ch);
				for (long pt = 0; pt < N; ++pt)
					o[pt] += s * x[pt] * y[pt];
			}
		});
	throw std::invalid_argument("wedge needs a real factor");
}

Field wedge_bracket(const LieAlgebra &g, const Field &a, const Field &b)
{
	if (a.nch != g.dim() || b.nch != g.dim())
		throw std::invalid_argument("wedge_bracket channel mismatch");
	long N = a.npts();
	return wedge_impl(a, b, g.dim(), [&](int i, int j, int k, double s, Field &out) {
		for (const auto &e : g.structure()) {
			const double *x = a.ptr(i, e.a), *y = b.ptr(j, e.b);
			double *o = out.ptr(k, e.c);
			double f = s * e.v;
			for (long pt = 0; pt < N; ++pt)
				o[pt] += f * x[pt] * y[pt];
		}
	});
}

Field wedge_pair(const LieAlgebra &g, const Field &a, const Field &b)
{
	if (a.nch != g.dim() || b.nch != g.dim())
		throw std::invalid_argument("wedge_pair channel mismatch");
	long N = a.npts();
	return wedge_impl(a, b, 1, [&](int i, int j, int k, double s, Field &out) {
		double *o = out.ptr(k, 0);
		for (int ch = 0; ch < g.dim(); ++ch) {
			const double *x = a.ptr(i, ch), *y = b.ptr(j, ch);
			for (long pt = 0; pt < N; ++pt)
				o[pt] += s * x[pt] * y[pt];
		}
	});
}

Field pointwise_pair(const LieAlgebra &g, const Field &a, const Field &b)
{
	if (a.p != 0 || b.p != 0)
		throw std::invalid_argument("pointwise_pair takes 0-forms");
	return wedge_pair(g, a, b);
}

Field contract_R(const Field &w)
{
	const Space &sp = w.sp;
	if (!sp.has(AT))
		throw std::invalid_argument("contract_R needs theta as a form direction");
	if (w.p == 0)
		throw std::invalid_argument("contract_R of a 0-form");
	Field out(sp, w.p - 1, w.nch);
	const auto &ic = sp.components(w.p);
	long N = sp.npts();
	for (int c = 0; c < int(ic.size()); ++c) {
		unsigned J = ic[c];
		if (!(J & (1u << AT)))
			continue;
		unsigned I = J & ~(1u << AT);
		int k = sp.index_of(I);
		double s = (popcount(I) % 2) ? -1.0 : 1.0;
		for (int ch = 0; ch < w.nch; ++ch) {
			const double *x = w.ptr(c, ch);
			double *o = out.ptr(k, ch);
			for (long pt = 0; pt < N; ++pt)
				o[pt] = s * x[pt];
		}
	}
	return out;
}

Field project_horizontal(const Field &w, const Field &kappa)
{
	if (w.p == 0)
		throw std::invalid_argument("project_horizontal needs degree >= 1");
	return w - wedge(kappa, contract_R(w));
}

Field fiber_average(const Field &w)
{
	Field out(w.sp, w.p, w.nch);
	int nt = w.sp.n[AT];
	long outer = w.npts() / nt;
	for (int c = 0; c < w.ncomp(); ++c)
		for (int ch = 0; ch < w.nch; ++ch) {
			const double *x = w.ptr(c, ch);
			double *o = out.ptr(c, ch);
			for (long a = 0; a < outer; ++a) {
				double s = 0;
				for (int t = 0; t < nt; ++t)
					s += x[a * nt + t];
				s /= nt;
				for (int t = 0; t < nt; ++t)
					o[a * nt + t] = s;
			}
		}
	return out;
}

Field top_coefficient(const Field &top)
{
	if (top.p != top.sp.form_dim())
		throw std::invalid_argument("wrong degree: expected a top form");
	Field out(top.sp, 0, top.nch);
	std::copy(top.v.begin(), top.v.end(), out.v.begin());
	return out;
}

double fiber_integrate(const Field &top)
{
	if (top.p != top.sp.form_dim() || top.nch != 1)
		throw std::invalid_argument("wrong degree: expected a real top form");
	// iota_R dx^dy^dtheta = dx^dy, base measure normalized to 1
	double s = 0;
	for (double x : top.v)
		s += x;
	return s / top.npts();
}

Field restrict_components(const Field &f, const Space &target, int p)
{
	Space s = f.sp;
	s.form = target.form;
	if (s != target)
		throw std::invalid_argument("restrict_components: grid mismatch");
	Field out(target, p, f.nch);
	const auto &oc = target.components(p);
	for (int k = 0; k < int(oc.size()); ++k) {
		int c = f.sp.index_of(oc[k]);
		if (c < 0)
			throw std::invalid_argument("restrict_components: missing component");
		for (int ch = 0; ch < f.nch; ++ch)
			std::copy(f.ptr(c, ch), f.ptr(c, ch) + f.npts(), out.ptr(k, ch));
	}
	return out;
}

Field select_channel_block(const Field &f, int ch0, int nch)
{
	Field out(f.sp, f.p, nch);
	for (int c = 0; c < f.ncomp(); ++c)
		for (int ch = 0; ch < nch; ++ch)
			std::copy(f.ptr(c, ch0 + ch), f.ptr(c, ch0 + ch) + f.npts(), out.ptr(c, ch));
	return out;
}

Field embed_components(const Field &f, const Space &target)
{
	Space s = f.sp;
	s.form = target.form;
	if (s != target)
		throw std::invalid_argument("embed_components: grid mismatch");
	Field out(target, f.p, f.nch);
	const auto &oc = target.components(f.p);
	for (int k = 0; k < int(oc.size()); ++k) {
		if (oc[k] & ~f.sp.form)
			continue;
		int c = f.sp.index_of(oc[k]);
		for (int ch = 0; ch < f.nch; ++ch)
			std::copy(f.ptr(c, ch), f.ptr(c, ch) + f.npts(), out.ptr(k, ch));
	}
	return out;
}

Field reinterpret(const Field &f, const Space &target)
{
	if (f.p != 0)
		throw std::invalid_argument("reinterpret takes 0-forms");
	Space s = f.sp;
	s.form = target.form;
	if (s != target)
		throw std::invalid_argument("reinterpret: grid mismatch");
	Field out = f;
	out.sp = target;
	return out;
}

Field make_kappa(const Space &sp)
{
	if (!sp.has(AT) || !sp.has(AY))
		throw std::invalid_argument("make_kappa needs the bundle space");
	Field k(sp, 1, 1);
	auto x = coordinate(sp, AX);
	long N = sp.npts();
	double *ky = k.ptr(sp.index_of(1u << AY), 0), *kt = k.ptr(sp.index_of(1u << AT), 0);
	for (long pt = 0; pt < N; ++pt) {
		ky[pt] = sp.degree * x.v[pt];
		kt[pt] = 1.0;
	}
	return k;
}

namespace {

Field frame_shift(const Field &w, double dir)
{
	const Space &sp = w.sp;
	Field out = w;
	if (sp.degree == 0 || !sp.has(AT) || !sp.has(AY))
		return out;
	auto x = coordinate(sp, AX);
	const auto &comps = sp.components(w.p);
	long N = sp.npts();
	for (int c = 0; c < int(comps.size()); ++c) {
		unsigned J = comps[c];
		if (!(J & (1u << AY)) || (J & (1u << AT)))
			continue;
		int cm = sp.index_of((J & ~(1u << AY)) | (1u << AT));
		double s = dir * sp.degree * ((J & (1u << AS)) ? -1.0 : 1.0);
		for (int ch = 0; ch < w.nch; ++ch) {
			const double *m = w.ptr(cm, ch);
			double *o = out.ptr(c, ch);
			for (long pt = 0; pt < N; ++pt)
				o[pt] += s * x.v[pt] * m[pt];
		}
	}
	return out;
}

} // namespace

Field from_kappa_frame(const Field &w) { return frame_shift(w, +1.0); }
Field to_kappa_frame(const Field &w) { return frame_shift(w, -1.0); }

namespace {

// real trig polynomial with random complex coefficients, evaluated separably
void trig_poly(const Space &sp, double *out, Rng &rng, const FieldGen &g)
{
	std::array<int, 4> M;
	for (int a = 0; a < 4; ++a)
		M[a] = sp.n[a] > 1 ? g.modes : 0;
	if (g.theta_const)
		M[AT] = 0;
	if (sp.n[AX] > 1)
		M[AX] = g.x_modes >= 0 ? g.x_modes : (sp.degree != 0 ? 0 : g.modes);
	std::array<int, 4> W;
	for (int a = 0; a < 4; ++a)
		W[a] = 2 * M[a] + 1;
	std::normal_distribution<double> nd;
	using C = std::complex<double>;
	std::vector<C> coef(std::size_t(W[0]) * W[1] * W[2] * W[3]);
	std::size_t q = 0;
	for (int a = -M[0]; a <= M[0]; ++a)
		for (int b = -M[1]; b <= M[1]; ++b)
			for (int c = -M[2]; c <= M[2]; ++c)
				for (int d = -M[3]; d <= M[3]; ++d) {
					double k2 = a * a + b * b + c * c + d * d;
					double amp = g.amplitude / (1.0 + k2);
					C z(nd(rng), nd(rng));
					if (g.zero_mean && k2 == 0)
						z = 0;
					coef[q++] = amp * z;
				}
	auto table = [&](int axis) {
		int n = sp.n[axis];
		std::vector<C> e(std::size_t(n) * W[axis]);
		for (int i = 0; i < n; ++i)
			for (int m = -M[axis]; m <= M[axis]; ++m)
				e[std::size_t(i) * W[axis] + m + M[axis]] =
				    std::polar(1.0, 2 * std::numbers::pi * m * double(i) / n);
		return e;
	};
	auto Ex = table(AX), Ey = table(AY), Es = table(AS), Et = table(AT);
	const int nx = sp.n[0], ny = sp.n[1], ns = sp.n[2], nt = sp.n[3];
	// contract theta, s, y, x in turn
	std::vector<C> T1(std::size_t(W[0]) * W[1] * W[2] * nt);
	for (int a = 0; a < W[0]; ++a)
		for (int b = 0; b < W[1]; ++b)
			for (int c = 0; c < W[2]; ++c)
				for (int it = 0; it < nt; ++it) {
					C s = 0;
					for (int d = 0; d < W[3]; ++d)
						s += coef[((std::size_t(a) * W[1] + b) * W[2] + c) * W[3] + d] *
						     Et[std::size_t(it) * W[3] + d];
					T1[((std::size_t(a) * W[1] + b) * W[2] + c) * nt + it] = s;
				}
	std::vector<C> T2(std::size_t(W[0]) * W[1] * ns * nt);
	for (int a = 0; a < W[0]; ++a)
		for (int b = 0; b < W[1]; ++b)
			for (int is = 0; is < ns; ++is)
				for (int it = 0; it < nt; ++it) {
					C s = 0;
					for (int c = 0; c < W[2]; ++c)
						s += T1[((std::size_t(a) * W[1] + b) * W[2] + c) * nt + it] *
						     Es[std::size_t(is) * W[2] + c];
					T2[((std::size_t(a) * W[1] + b) * ns + is) * nt + it] = s;
				}
	std::vector<C> T3(std::size_t(W[0]) * ny * ns * nt);
	for (int a = 0; a < W[0]; ++a)
		for (int iy = 0; iy < ny; ++iy)
			for (long r = 0; r < long(ns) * nt; ++r) {
				C s = 0;
				for (int b = 0; b < W[1]; ++b)
					s += T2[(std::size_t(a) * W[1] + b) * ns * nt + r] * Ey[std::size_t(iy) * W[1] + b];
				T3[(std::size_t(a) * ny + iy) * ns * nt + r] = s;
			}
	long inner = long(ny) * ns * nt;
	for (int ix = 0; ix < nx; ++ix)
		for (long r = 0; r < inner; ++r) {
			C s = 0;
			for (int a = 0; a < W[0]; ++a)
				s += T3[std::size_t(a) * inner + r] * Ex[std::size_t(ix) * W[0] + a];
			out[long(ix) * inner + r] = s.real();
		}
}

void twisted_scalar(const Space &sp, double *out, Rng &rng, const FieldGen &g)
{
	long N = sp.npts();
	if (sp.degree == 0) {
		trig_poly(sp, out, rng, g);
		return;
	}
	sp.validate();
	std::vector<double> P(N);
	trig_poly(sp, P.data(), rng, g);
	const int nx = sp.n[0], ny = sp.n[1], ns = sp.n[2], nt = sp.n[3];
	long st = sp.stride(AX);
	for (int ix = 0; ix < nx; ++ix) {
		double x = double(ix) / nx;
		for (int j = -g.images; j <= g.images; ++j) {
			double u = x + j - 0.5;
			double G = std::exp(-u * u / (2 * g.width * g.width));
			if (G < 1e-300)
				continue;
			for (int iy = 0; iy < ny; ++iy) {
				long sh = j * sp.theta_shift(iy);
				for (int is = 0; is < ns; ++is) {
					long row = long(ix) * st + (long(iy) * ns + is) * nt;
					for (int it = 0; it < nt; ++it) {
						long jt = ((it - sh) % nt + nt) % nt;
						out[row + it] += G * P[row + jt];
					}
				}
			}
		}
	}
}

} // namespace

Field random_field(const Space &sp, int p, int nch, Rng &rng, const FieldGen &g)
{
	Field f(sp, p, nch);
	for (int c = 0; c < f.ncomp(); ++c)
		for (int ch = 0; ch < nch; ++ch)
			twisted_scalar(sp, f.ptr(c, ch), rng, g);
	return from_kappa_frame(f);
}

void band_limit(Field &f, int axis, int mmax)
{
	const Space &sp = f.sp;
	int n = sp.n[axis];
	if (n == 1 || (axis == AX && sp.degree != 0))
		return;
	long st = sp.stride(axis), outer = f.npts() / (st * n);
	for (int c = 0; c < f.ncomp(); ++c)
		for (int ch = 0; ch < f.nch; ++ch) {
			double *x = f.ptr(c, ch);
			for (long a = 0; a < outer; ++a)
				for (long b = 0; b < st; ++b) {
					long base = a * st * n + b;
					fft::band_limit(x + base, st, x + base, st, n, mmax);
				}
		}
}

double band_excess(const Field &f, int axis, int mmax)
{
	const Space &sp = f.sp;
	int n = sp.n[axis];
	if (n == 1)
		return 0;
	long st = sp.stride(axis), outer = f.npts() / (st * n);
	double e = 0;
	for (int c = 0; c < f.ncomp(); ++c)
		for (int ch = 0; ch < f.nch; ++ch)
			for (long a = 0; a < outer; ++a)
				for (long b = 0; b < st; ++b)
					e = std::max(e, fft::band_excess(f.ptr(c, ch) + a * st * n + b, st, n, mmax));
	return e;
}

int group_rank(const Field &g)
{
	int n = int(std::lround(std::sqrt(g.nch / 2.0)));
	if (2 * n * n != g.nch)
		throw std::invalid_argument("not a group field");
	return n;
}

Mat group_at(const Field &g, long pt)
{
	int n = group_rank(g);
	Mat m(n, n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			int ch = 2 * (i * n + k);
			m(i, k) = cplx(g.ptr(0, ch)[pt], g.ptr(0, ch + 1)[pt]);
		}
	return m;
}

void set_group_at(Field &g, long pt, const Mat &m)
{
	int n = group_rank(g);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			int ch = 2 * (i * n + k);
			g.ptr(0, ch)[pt] = m(i, k).real();
			g.ptr(0, ch + 1)[pt] = m(i, k).imag();
		}
}

Field group_exp(const LieAlgebra &alg, const Field &xi)
{
	if (xi.p != 0 || xi.nch != alg.dim())
		throw std::invalid_argument("group_exp takes a Lie-valued 0-form");
	int n = alg.rank();
	Field g(xi.sp, 0, 2 * n * n);
	std::vector<double> c(alg.dim());
	for (long pt = 0; pt < xi.npts(); ++pt) {
		for (int a = 0; a < alg.dim(); ++a)
			c[a] = xi.ptr(0, a)[pt];
		set_group_at(g, pt, exp_map(alg.to_matrix(c.data())));
	}
	return g;
}

Field group_identity(const Space &sp, int n)
{
	Field g(sp, 0, 2 * n * n);
	for (int i = 0; i < n; ++i)
		std::fill(g.ptr(0, 2 * (i * n + i)), g.ptr(0, 2 * (i * n + i)) + sp.npts(), 1.0);
	return g;
}

} // namespace calbf
