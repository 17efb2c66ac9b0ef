#include "calbf/functionals.hpp"

#include "calbf/fft.hpp"

#include <bit>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace calbf {

namespace {

constexpr double pi = std::numbers::pi;

double level_scale() { return 1.0 / (8 * pi * pi); }

// integral over the base of a top form on a base-type space (theta averaged)
double base_integral(const Field &top) { return fiber_integrate(top); }

} // namespace

double cs_normalization() { return 1.0 / (16 * pi * pi); }

ActionValue make_action(double value, std::vector<std::pair<std::string, double>> breakdown)
{
	ActionValue a;
	a.value = value;
	a.mod_one = value - std::floor(value);
	if (a.mod_one >= 1.0)
		a.mod_one = 0;
	a.breakdown = std::move(breakdown);
	return a;
}

double circle_distance(double a, double b)
{
	double d = std::fmod(a - b, 1.0);
	if (d < 0)
		d += 1;
	return std::min(d, 1 - d);
}

ActionValue cs_action(const LieAlgebra &alg, const Field &A, int k)
{
	double c = k * cs_normalization();
	double t1 = c * fiber_integrate(wedge_pair(alg, A, exterior_d(A)));
	double t2 = c / 3 * fiber_integrate(wedge_pair(alg, A, wedge_bracket(alg, A, A)));
	return make_action(t1 + t2, {{"A^dA", t1}, {"A^[A^A]/3", t2}});
}

double cs_variation(const LieAlgebra &alg, const Field &A, const Field &dA, int k)
{
	return 2 * k * cs_normalization() * fiber_integrate(wedge_pair(alg, dA, curvature(alg, A)));
}

Field hedgehog(const Space &sp, int degree, double width)
{
	Field g = group_identity(sp, 2);
	const int nx = sp.n[AX], ny = sp.n[AY], nt = sp.n[AT];
	long pt = 0;
	for (int ix = 0; ix < nx; ++ix)
		for (int iy = 0; iy < ny; ++iy)
			for (int it = 0; it < nt; ++it, ++pt) {
				double r[3] = {double(ix) / nx - 0.5, double(iy) / ny - 0.5, double(it) / nt - 0.5};
				double rho = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
				double f = degree * pi * std::erfc(rho / width);
				double s = rho > 0 ? -std::sin(f) / rho : 0.0;
				double q0 = std::cos(f), q1 = s * r[0], q2 = s * r[1], q3 = s * r[2];
				Mat U(2, 2);
				U(0, 0) = cplx(q0, q3);
				U(0, 1) = cplx(q2, q1);
				U(1, 0) = cplx(-q2, q1);
				U(1, 1) = cplx(q0, -q3);
				set_group_at(g, pt, U);
			}
	return g;
}

double winding_number(const Field &g)
{
	if (group_rank(g) != 2)
		throw std::invalid_argument("winding_number is for SU(2)");
	const Space &sp = g.sp;
	long N = sp.npts();
	// U = [[q0 + i q3, q2 + i q1], [-q2 + i q1, q0 - i q3]]
	Field q(sp, 0, 4);
	for (long pt = 0; pt < N; ++pt) {
		q.ptr(0, 0)[pt] = g.ptr(0, 0)[pt];
		q.ptr(0, 1)[pt] = g.ptr(0, 3)[pt];
		q.ptr(0, 2)[pt] = g.ptr(0, 2)[pt];
		q.ptr(0, 3)[pt] = g.ptr(0, 1)[pt];
	}
	Field dq[3] = {partial(q, AX), partial(q, AY), partial(q, AT)};
	double s = 0;
	for (long pt = 0; pt < N; ++pt) {
		Eigen::Matrix4d m;
		for (int a = 0; a < 4; ++a) {
			m(a, 0) = q.ptr(0, a)[pt];
			for (int j = 0; j < 3; ++j)
				m(a, j + 1) = dq[j].ptr(0, a)[pt];
		}
		s += m.determinant();
	}
	return s / N / (2 * pi * pi);
}

BWMoment bw_moment(const LieAlgebra &alg, const Field &a, const Field &kappa)
{
	if (kappa.sp.degree == 0)
		throw std::invalid_argument("degenerate contact volume (degree 0)");
	Field dk = exterior_d(kappa);
	Field num = top_coefficient(wedge(kappa, curvature(alg, a)) - wedge(dk, a));
	Field vol = top_coefficient(wedge(kappa, dk));
	BWMoment mu;
	mu.f = Field(a.sp, 0, alg.dim());
	for (int ch = 0; ch < alg.dim(); ++ch)
		for (long pt = 0; pt < a.npts(); ++pt)
			mu.f.ptr(0, ch)[pt] = -num.ptr(0, ch)[pt] / vol.v[pt];
	mu.I = fiber_integrate(wedge(kappa, wedge_pair(alg, a, partial(a, AT))));
	mu.x = -1;
	mu.y = -0.5 * mu.I;
	return mu;
}

double bw_moment_square(const LieAlgebra &alg, const BWMoment &mu, const Field &kappa)
{
	return contact_pair(alg, mu.f, mu.f, kappa) + 2 * mu.x * mu.y;
}

ActionValue contact_cs_action(const LieAlgebra &alg, const Field &a, const Field &kappa, int k)
{
	BWMoment mu = bw_moment(alg, a, kappa);
	double cs = cs_action(alg, a, k).value;
	double ff = k * cs_normalization() * contact_pair(alg, mu.f, mu.f, kappa);
	return make_action(cs - ff, {{"CS", cs}, {"<<f,f>>", -ff}});
}

Field bw_generator(const LieAlgebra &alg, const Field &a, const Field &kappa, double u, const Field &xi)
{
	Field D = exterior_d(xi) + wedge_bracket(alg, a, xi);
	return project_horizontal(D, kappa) + u * partial(a, AT);
}

double bw_hamiltonian(const LieAlgebra &alg, const Field &a, const Field &kappa, double u, const Field &xi)
{
	double t1 = fiber_integrate(wedge(kappa, wedge_pair(alg, xi, curvature(alg, a))));
	double t2 = fiber_integrate(wedge(kappa, wedge_pair(alg, partial(a, AT), a)));
	return -t1 + 0.5 * u * t2;
}

double bw_omega(const LieAlgebra &alg, const Field &kappa, const Field &X, const Field &Y)
{
	return fiber_integrate(wedge(kappa, wedge_pair(alg, X, Y)));
}

ActionValue caloron_bf_action(const LieAlgebra &alg, const LiftedConnection &lc, int k)
{
	const CaloronFields &f = lc.fields;
	double K = k * level_scale();
	Field F = caloron_curvature(alg, f);
	double t1 = -K * base_integral(wedge_pair(alg, F, f.Phi));
	double t2 = -0.5 * K * base_integral(wedge(f.dlambda, pointwise_pair(alg, f.Phi, f.Phi)));
	double t3 = 0.5 * K * base_integral(wedge_pair(alg, f.Lambda, partial(f.Lambda, AT)));
	double t4 = base_integral(exterior_d(lc.alpha)) + lc.twist;
	return make_action(t1 + t2 + t3 + t4,
	                   {{"-<F,Phi>", t1}, {"-dlambda<Phi,Phi>/2", t2}, {"<Lambda^Lambda'>/2", t3}, {"d alpha", t4}});
}

double cs_split_action(const LieAlgebra &alg, const Connection3d &c, int k)
{
	Field a = project_horizontal(c.A, c.kappa);
	Field phi = contract_R(c.A);
	Field dk = exterior_d(c.kappa);
	Field t1 = wedge_pair(alg, phi, wedge(c.kappa, curvature(alg, a)) - wedge(dk, a));
	Field t2 = wedge(wedge(c.kappa, dk), pointwise_pair(alg, phi, phi));
	Field t3 = wedge(c.kappa, wedge_pair(alg, a, partial(a, AT)));
	return -k * level_scale() * fiber_integrate(t1 + 0.5 * t2 - 0.5 * t3);
}

double bf_phi_variation(const LieAlgebra &alg, const CaloronFields &f, const Field &dPhi, int k)
{
	return -k * level_scale() * base_integral(wedge_pair(alg, bf_curvature(alg, f), dPhi));
}

EOMResidual eom_residual(const LieAlgebra &alg, const CaloronFields &f)
{
	EOMResidual r;
	r.bf = sup_norm(bf_curvature(alg, f));
	r.bianchi = sup_norm(higgs_covariant(alg, f));
	r.flatness = sup_norm(curvature(alg, cal_inverse(f).A));
	return r;
}

namespace {

// -sum_i (d_i F_ij + [A_i, F_ij]) in coordinate components
Field ym_gradient(const LieAlgebra &alg, const Field &A, const Field &F)
{
	const Space &sp = A.sp;
	long N = sp.npts();
	Field g(sp, 1, alg.dim());
	const auto &c1 = sp.components(1);
	Field Fij(sp, 0, alg.dim()), Ai(sp, 0, alg.dim());
	for (int j = 0; j < int(c1.size()); ++j)
		for (int i = 0; i < int(c1.size()); ++i) {
			if (i == j)
				continue;
			unsigned mi = c1[i], mj = c1[j];
			double s = mi < mj ? 1.0 : -1.0;
			int cf = sp.index_of(mi | mj);
			int axis = std::countr_zero(mi);
			for (int ch = 0; ch < alg.dim(); ++ch) {
				const double *src = F.ptr(cf, ch);
				double *dst = Fij.ptr(0, ch);
				for (long pt = 0; pt < N; ++pt)
					dst[pt] = s * src[pt];
				std::copy(A.ptr(i, ch), A.ptr(i, ch) + N, Ai.ptr(0, ch));
			}
			Field term = partial(Fij, axis) + wedge_bracket(alg, Ai, Fij);
			for (int ch = 0; ch < alg.dim(); ++ch) {
				double *dst = g.ptr(j, ch);
				const double *t = term.ptr(0, ch);
				for (long pt = 0; pt < N; ++pt)
					dst[pt] -= t[pt];
			}
		}
	return g;
}

void precondition(Field &g, double mu)
{
	const Space &sp = g.sp;
	const double c = 4 * pi * pi / mu;
	auto mult = [&](int a, int b, int k) { return 1.0 / (1.0 + c * (a * a + b * b + k * k)); };
	for (int comp = 0; comp < g.ncomp(); ++comp)
		for (int ch = 0; ch < g.nch; ++ch)
			fft::multiplier3d(g.ptr(comp, ch), sp.n[AX], sp.n[AY], sp.n[AT], mult);
}

double ym_energy(const Field &F) { return 0.5 * rms(F) * rms(F); }

} // namespace

DescentResult eom_descent(const LieAlgebra &alg, CaloronFields start, const DescentOptions &opt)
{
	if (start.Lambda.sp.degree != 0)
		throw std::invalid_argument("eom_descent works on the degree-0 torus");
	double mu = opt.mu > 0 ? opt.mu : 16 * pi * pi;
	double tau0 = opt.step > 0 ? opt.step : 1.5 / mu;
	Field A = cal_inverse(start).A;
	Field kappa = make_kappa(A.sp);
	Field F = curvature(alg, A);
	double E = ym_energy(F);
	Field g = ym_gradient(alg, A, F);

	// limited-memory BFGS with the Fourier preconditioner as the initial inverse Hessian
	constexpr int memory = 8;
	struct Pair {
		std::vector<double> s, y;
		double rho;
	};
	std::deque<Pair> pairs;
	auto dot = [](const std::vector<double> &a, const std::vector<double> &b) {
		double r = 0;
		for (std::size_t i = 0; i < a.size(); ++i)
			r += a[i] * b[i];
		return r;
	};
	double gamma = tau0;

	DescentResult res;
	for (int it = 0;; ++it) {
		double fl = sup_norm(F);
		res.history.push_back(fl);
		res.iterations = it;
		res.flatness = fl;
		if (fl < opt.target || it >= opt.max_iter)
			break;

		Field p = g;
		std::vector<double> alpha(pairs.size());
		for (int i = int(pairs.size()) - 1; i >= 0; --i) {
			alpha[i] = pairs[i].rho * dot(pairs[i].s, p.v);
			for (std::size_t q = 0; q < p.v.size(); ++q)
				p.v[q] -= alpha[i] * pairs[i].y[q];
		}
		precondition(p, mu);
		p *= gamma;
		for (std::size_t i = 0; i < pairs.size(); ++i) {
			double b = pairs[i].rho * dot(pairs[i].y, p.v);
			for (std::size_t q = 0; q < p.v.size(); ++q)
				p.v[q] += (alpha[i] - b) * pairs[i].s[q];
		}
		if (dot(p.v, g.v) <= 0) { // not a descent direction: restart from the preconditioned gradient
			pairs.clear();
			p = g;
			precondition(p, mu);
			p *= tau0;
		}

		bool moved = false;
		double t = 1;
		for (int tries = 0; tries < 40; ++tries, t *= 0.5) {
			Field An = A - t * p;
			Field Fn = curvature(alg, An);
			double En = ym_energy(Fn);
			if (En < E) {
				Field gn = ym_gradient(alg, An, Fn);
				Pair pr{(An - A).v, (gn - g).v, 0};
				double sy = dot(pr.s, pr.y);
				if (sy > 0) {
					pr.rho = 1 / sy;
					// rescale the initial Hessian by s.y / y.Py
					Field Py = gn - g;
					precondition(Py, mu);
					gamma = sy / dot(pr.y, Py.v);
					pairs.push_back(std::move(pr));
					if (int(pairs.size()) > memory)
						pairs.pop_front();
				}
				A = std::move(An);
				F = std::move(Fn);
				g = std::move(gn);
				E = En;
				moved = true;
				break;
			}
		}
		if (!moved)
			break;
	}
	res.fields = cal_forward({kappa, A});
	return res;
}

Field bf_density(const LieAlgebra &alg, const LiftedConnection &lc, int k)
{
	const CaloronFields &f = lc.fields;
	double K = k * level_scale();
	Field F = caloron_curvature(alg, f);
	Field w = -K * fiber_average(wedge_pair(alg, F, f.Phi));
	w -= 0.5 * K * wedge(f.dlambda, fiber_average(pointwise_pair(alg, f.Phi, f.Phi)));
	w += 0.5 * K * fiber_average(wedge_pair(alg, f.Lambda, partial(f.Lambda, AT)));
	w += exterior_d(lc.alpha);
	if (lc.twist) {
		double *c = w.ptr(w.sp.index_of((1u << AX) | (1u << AY)), 0);
		for (long pt = 0; pt < w.npts(); ++pt)
			c[pt] += lc.twist;
	}
	return w;
}

Field msv_form(const LieAlgebra &alg, const CaloronFields &f, int k)
{
	return 2 * k * level_scale() * fiber_average(wedge_pair(alg, bf_curvature(alg, f), higgs_covariant(alg, f)));
}

Residual msv_identity(const LieAlgebra &alg, const CaloronFields &f, int k)
{
	Field lhs = exterior_d(bf_density(alg, make_lift(f), k));
	Field rhs = 0.5 * msv_form(alg, f, k);
	return {sup_diff(lhs, rhs), std::max(sup_norm(lhs), sup_norm(rhs))};
}

Mat wilson_holonomy(const LieAlgebra &alg, const Field &A, int ix, int iy)
{
	const Space &sp = A.sp;
	int c = sp.index_of(1u << AT);
	int nt = sp.n[AT];
	double h = 1.0 / nt;
	long base = sp.stride(AX) * ix + sp.stride(AY) * iy;
	Mat H = Mat::Identity(alg.rank(), alg.rank());
	std::vector<double> x(alg.dim());
	for (int it = 0; it < nt; ++it) {
		for (int a = 0; a < alg.dim(); ++a)
			x[a] = A.ptr(c, a)[base + it];
		H = H * exp_map(-h * alg.to_matrix(x.data()));
	}
	return H;
}

double wilson_trace(const LieAlgebra &alg, const Field &A, int ix, int iy)
{
	return wilson_holonomy(alg, A, ix, iy).trace().real();
}

double wilson_orbit_lhs(const LoopGroupElement &g, const LoopElement &phi, const LoopElement &alpha, int k)
{
	AffineConvention cv{k, 1.0, -1};
	AffineVector U = affine_adjoint(g, AffineVector{0.0, alpha, 0.0}, cv);
	AffineVector V = higgs_vector(phi, cv);
	return affine_pair(U, V, cv) / k;
}

double wilson_orbit_rhs(const LoopGroupElement &g, const LoopElement &phi, const LoopElement &alpha)
{
	const LieAlgebra &alg = *alpha.alg;
	auto dg = loop_group_derivative(g);
	double s = 0;
	std::vector<double> c(alg.dim());
	for (int j = 0; j < g.n(); ++j) {
		Mat gi = g.g[j].adjoint();
		Mat m = gi * dg[j] + gi * phi.matrix(j) * g.g[j];
		s += pair(alpha.matrix(j), m);
	}
	return -s / g.n();
}

} // namespace calbf
