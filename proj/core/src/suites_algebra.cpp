#include "suites.hpp"

#include "calbf/gauge.hpp"
#include "calbf/gerbe.hpp"

#include <cmath>
#include <numbers>

namespace calbf::suites {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int instances = 100;

Mat pauli(int a)
{
	const cplx I(0, 1);
	Mat s = Mat::Zero(2, 2);
	if (a == 1)
		s << 0, 1, 1, 0;
	else if (a == 2)
		s << 0, -I, I, 0;
	else
		s << 1, 0, 0, -1;
	return s;
}

Mat tgen(int a) { return -0.5 * cplx(0, 1) * pauli(a); }

// g0 exp(4 pi m1 theta T) g1 exp(4 pi m2 theta T) g2 with T = diag(-i/2, i/2, 0, ...), |m| <= 1;
// its entries are trig polynomials of degree <= 2, so spectral derivatives of products stay exact
LoopGroupElement random_gamma(const LieAlgebra &alg, int n, Rng &rng)
{
	std::uniform_int_distribution<int> M(-1, 1);
	Mat g0 = exp_map(random_lie(alg, rng)), g1 = exp_map(random_lie(alg, rng)), g2 = exp_map(random_lie(alg, rng));
	int m1 = M(rng), m2 = M(rng);
	const Mat &T = alg.generator(2);
	LoopGroupElement g;
	for (int j = 0; j < n; ++j) {
		double th = double(j) / n;
		g.g.push_back(g0 * exp_map(4 * pi * m1 * th * T) * g1 * exp_map(4 * pi * m2 * th * T) * g2);
	}
	return g;
}

LoopElement scaled_generator(const LieAlgebra &alg, int n, int a, const std::function<double(double)> &f)
{
	return make_loop(alg, n, [&](double th, double *x) {
		for (int b = 0; b < alg.dim(); ++b)
			x[b] = 0;
		x[a] = f(th);
	});
}

// gamma(theta) = exp(4 pi theta t3): a closed loop in SU(2) with gamma^{-1} gamma' = 4 pi t3
LoopGroupElement spin_loop(int n)
{
	LoopGroupElement g;
	for (int j = 0; j < n; ++j)
		g.g.push_back(exp_map(4 * pi * double(j) / n * tgen(3)));
	return g;
}

double mat_err(const Mat &a, const Mat &b) { return (a - b).cwiseAbs().maxCoeff(); }

Splitting random_splitting(const LieAlgebra &alg, int n, Rng &rng)
{
	std::normal_distribution<double> N(0, 1);
	Splitting s;
	s.a = N(rng);
	s.zeta = random_loop(alg, n, rng);
	return s;
}

void run(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra alg(cfg.rank);
	LieAlgebra su2(2);
	const int n = cfg.nt;
	const int k = cfg.level;

	ctx.check("algebra.lie_basis", [&](Rng &, Echo &echo) {
		echo = {{"group", "su(2)"}};
		double e = mat_err(bracket(tgen(1), tgen(2)), tgen(3));
		e = std::max(e, mat_err(bracket(tgen(2), tgen(1)), -tgen(3)));
		e = std::max(e, mat_err(bracket(tgen(1), tgen(1)), Mat::Zero(2, 2)));
		e = std::max(e, std::abs(pair(tgen(1), tgen(1)) - 1));
		e = std::max(e, std::abs(pair(tgen(1), tgen(2))));
		e = std::max(e, mat_err(exp_map(Mat::Zero(2, 2)), Mat::Identity(2, 2)));
		e = std::max(e, mat_err(adjoint(exp_map(pi * tgen(3)), tgen(1)), -tgen(1)));
		return e;
	});

	ctx.check("algebra.lie_jacobi", [&](Rng &rng, Echo &echo) {
		echo = {{"rank", str(cfg.rank)}, {"instances", "200"}};
		double e = 0;
		for (int i = 0; i < 200; ++i) {
			Mat X = random_lie(alg, rng), Y = random_lie(alg, rng), Z = random_lie(alg, rng);
			Mat J = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
			e = std::max(e, J.cwiseAbs().maxCoeff());
			if (!is_lie_matrix(bracket(X, Y), 1e-12))
				e = std::max(e, 1.0);
		}
		return e;
	});

	ctx.check("algebra.lie_ad_invariance", [&](Rng &rng, Echo &echo) {
		echo = {{"rank", str(cfg.rank)}, {"instances", "200"}};
		double e = 0;
		for (int i = 0; i < 200; ++i) {
			Mat X = random_lie(alg, rng), Y = random_lie(alg, rng), Z = random_lie(alg, rng);
			e = std::max(e, std::abs(pair(bracket(Z, X), Y) + pair(X, bracket(Z, Y))));
			e = std::max(e, std::abs(pair(X, Y) - pair(Y, X)));
		}
		return e;
	});

	ctx.check("algebra.lie_ad_series", [&](Rng &rng, Echo &echo) {
		echo = {{"rank", str(cfg.rank)}, {"instances", str(instances)}, {"terms", "12"}};
		std::uniform_real_distribution<double> U(0, 1);
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			Mat X = random_lie(alg, rng);
			X *= U(rng) / std::sqrt(pair(X, X));
			Mat Y = random_lie(alg, rng);
			Mat term = Y, sum = Y;
			for (int j = 1; j <= 12; ++j) {
				term = bracket(X, term) / double(j);
				sum += term;
			}
			Mat g = exp_map(X);
			e = std::max(e, mat_err(adjoint(g, Y), sum));
			if (!is_group_matrix(g, 1e-12))
				e = std::max(e, 1.0);
		}
		return e;
	});

	ctx.check("algebra.loop_pair", [&](Rng &, Echo &echo) {
		echo = {{"n_theta", str(n)}};
		auto c1 = scaled_generator(alg, n, 0, [](double t) { return std::cos(2 * pi * t); });
		auto c2 = scaled_generator(alg, n, 1, [](double t) { return std::cos(2 * pi * t); });
		double e = std::abs(loop_pair(c1, c1) - 0.5);
		e = std::max(e, std::abs(loop_pair(c1, c2)));
		e = std::max(e, std::abs(loop_pair(c1, LoopElement(alg, n))));
		return e;
	});

	ctx.check("algebra.affine_examples", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", "2"}};
		auto cv = loop_convention(2);
		auto cosl = scaled_generator(alg, n, 0, [](double t) { return std::cos(2 * pi * t); });
		auto sinl = scaled_generator(alg, n, 0, [](double t) { return std::sin(2 * pi * t); });
		AffineVector d = affine_d(alg, n), c = affine_c(alg, n);
		// d/dtheta of sin(2 pi theta) on the unit period
		auto r1 = affine_bracket(d, {0, sinl, 0}, cv);
		double e = affine_distance(r1, {0, (2 * pi) * cosl, 0});
		auto r2 = affine_bracket({0, cosl, 0}, {0, sinl, 0}, cv);
		e = std::max(e, affine_distance(r2, {0, LoopElement(alg, n), 2 * pi}));
		auto v = random_affine(alg, n, rng);
		e = std::max(e, affine_distance(affine_bracket(c, v, cv), {0, LoopElement(alg, n), 0}));
		e = std::max(e, std::abs(affine_pair(d, c, cv) + 1));
		auto Phi = random_loop(alg, n, rng);
		AffineVector V{1, -1.0 * Phi, 0.5 * 2 * loop_pair(Phi, Phi)};
		e = std::max(e, affine_distance(V, higgs_vector(Phi, cv)));
		e = std::max(e, std::abs(affine_pair(V, V, cv)));
		e = std::max(e, std::abs(affine_pair(V, c, cv) + 1));
		return e;
	});

	ctx.check("algebra.affine_jacobi", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"levels", "1,2,3"}, {"instances", str(3 * instances)}};
		double e = 0;
		for (int kk = 1; kk <= 3; ++kk)
			for (int i = 0; i < instances; ++i) {
				auto u = random_affine(alg, n, rng), v = random_affine(alg, n, rng), w = random_affine(alg, n, rng);
				auto B = [&](const AffineVector &a, const AffineVector &b) { return affine_bracket(a, b, kk); };
				auto j1 = B(u, B(v, w)), j2 = B(v, B(w, u)), j3 = B(w, B(u, v));
				AffineVector s{j1.x + j2.x + j3.x, j1.xi + j2.xi + j3.xi, j1.y + j2.y + j3.y};
				e = std::max(e, affine_distance(s, {0, LoopElement(alg, n), 0}));
				auto a = B(u, v), b = B(v, u);
				e = std::max(e, affine_distance(a, {-b.x, -1.0 * b.xi, -b.y}));
			}
		return e;
	});

	ctx.check("algebra.affine_pair_invariance", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto u = random_affine(alg, n, rng), v = random_affine(alg, n, rng), w = random_affine(alg, n, rng);
			e = std::max(e, std::abs(affine_pair(affine_bracket(w, u, k), v, k) + affine_pair(u, affine_bracket(w, v, k), k)));
			e = std::max(e, std::abs(affine_pair(u, v, k) - affine_pair(v, u, k)));
		}
		return e;
	});

	ctx.check("algebra.affine_adjoint_isometry", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto g = random_gamma(alg, n, rng);
			auto u = random_affine(alg, n, rng), v = random_affine(alg, n, rng);
			e = std::max(e, std::abs(affine_pair(affine_adjoint(g, u, k), affine_adjoint(g, v, k), k) - affine_pair(u, v, k)));
			auto c = affine_c(alg, n);
			e = std::max(e, affine_distance(affine_adjoint(g, c, k), c));
		}
		return e;
	});

	ctx.check("algebra.affine_adjoint_homomorphism", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto g = random_gamma(alg, n, rng);
			auto u = random_affine(alg, n, rng), v = random_affine(alg, n, rng);
			auto lhs = affine_adjoint(g, affine_bracket(u, v, k), k);
			auto rhs = affine_bracket(affine_adjoint(g, u, k), affine_adjoint(g, v, k), k);
			e = std::max(e, affine_distance(lhs, rhs));
		}
		return e;
	});

	ctx.check("algebra.affine_adjoint_flow", [&](Rng &rng, Echo &echo) {
		// d/dt Ad_{exp(tX)} v = [(0,X,0), Ad_{exp(tX)} v], integrated with RK4
		const int steps = 200, count = 10;
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(count)}, {"rk4_steps", str(steps)}};
		double e = 0;
		for (int i = 0; i < count; ++i) {
			auto X = random_loop(alg, n, rng, 2, 0.35);
			AffineVector Xh{0, X, 0};
			AffineVector v = random_affine(alg, n, rng);
			auto f = [&](const AffineVector &a) { return affine_bracket(Xh, a, k); };
			auto axpy = [](const AffineVector &a, double h, const AffineVector &b) {
				return AffineVector{a.x + h * b.x, a.xi + h * b.xi, a.y + h * b.y};
			};
			double h = 1.0 / steps;
			AffineVector y = v;
			for (int s = 0; s < steps; ++s) {
				auto k1 = f(y), k2 = f(axpy(y, h / 2, k1)), k3 = f(axpy(y, h / 2, k2)), k4 = f(axpy(y, h, k3));
				y = axpy(y, h / 6, axpy(axpy(k1, 2, k2), 1, axpy(axpy(k3, 1, k3), 1, k4)));
			}
			e = std::max(e, affine_distance(y, affine_adjoint(loop_exp(X), v, k)));
		}
		return e;
	});

	ctx.check("algebra.affine_winding_example", [&](Rng &, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"loop", "exp(4 pi theta t3)"}};
		auto g = spin_loop(n);
		auto r = affine_adjoint(g, affine_d(su2, n), k);
		auto w = scaled_generator(su2, n, 2, [](double) { return 4 * pi; });
		double e = affine_distance(r, {1, -1.0 * w, 8 * pi * pi * k});
		e = std::max(e, std::abs(group_cocycle_sigma(g, {1, LoopElement(su2, n)}, k) - 8 * pi * pi * k));
		return e;
	});

	ctx.check("algebra.beta_map", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto u = random_check(alg, n, rng), v = random_check(alg, n, rng), w = random_check(alg, n, rng);
			auto lhs1 = beta_map(check_bracket(w, u), v).xi + beta_map(u, check_bracket(w, v)).xi;
			auto rhs = check_bracket(w, beta_map(u, v)).xi;
			e = std::max(e, loop_distance(lhs1, rhs));
			auto Phi = random_loop(alg, n, rng);
			CheckVector V{1, -1.0 * Phi};
			e = std::max(e, loop_distance(beta_map({0, u.xi}, V).xi, u.xi));
			e = std::max(e, loop_distance(beta_map(u, V).xi, u.xi + u.x * Phi));
		}
		return e;
	});

	ctx.check("algebra.higgs_orbit", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto V = affine_adjoint(random_gamma(alg, n, rng), affine_d(alg, n), k);
			auto [vv, vc] = higgs_constraints(V, loop_convention(k));
			e = std::max({e, std::abs(vv), std::abs(vc)});
		}
		return e;
	});

	ctx.check("algebra.group_cocycle", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto g = random_gamma(alg, n, rng);
			auto u = random_check(alg, n, rng);
			e = std::max(e, std::abs(group_cocycle_sigma(g, u, k) - affine_adjoint(g, {u.x, u.xi, 0}, k).y));
			auto g0 = loop_constant(exp_map(random_lie(alg, rng)), n);
			e = std::max(e, std::abs(group_cocycle_sigma(g0, u, k)));
		}
		return e;
	});

	ctx.check("algebra.omega_sigma", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		auto cv = loop_convention(k);
		auto cosl = scaled_generator(alg, n, 0, [](double t) { return std::cos(2 * pi * t); });
		auto sinl = scaled_generator(alg, n, 0, [](double t) { return std::sin(2 * pi * t); });
		double e = std::abs(omega_sigma({0, cosl}, {0, sinl}, {}, loop_convention(2)) - 2 * pi);
		for (int i = 0; i < instances; ++i) {
			auto s = random_splitting(alg, n, rng);
			auto u = random_check(alg, n, rng), v = random_check(alg, n, rng);
			// level cocycle minus the splitting of the check bracket
			CheckVector b = check_bracket(u, v);
			double oracle = k * loop_pair(u.xi, loop_derivative(v.xi)) - (s.a * b.x + loop_pair(s.zeta, b.xi));
			e = std::max(e, std::abs(omega_sigma(u, v, s, cv) - oracle));
			e = std::max(e, std::abs(omega_sigma(u, u, s, cv)));
			e = std::max(e, std::abs(omega_sigma(u, v, {}, cv) - k * loop_pair(u.xi, loop_derivative(v.xi))));
		}
		return e;
	});

	ctx.check("algebra.omega_sigma_cocycle", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		auto cv = loop_convention(k);
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto s = random_splitting(alg, n, rng);
			auto u = random_check(alg, n, rng), v = random_check(alg, n, rng), w = random_check(alg, n, rng);
			double c = omega_sigma(check_bracket(u, v), w, s, cv) + omega_sigma(check_bracket(v, w), u, s, cv) +
			           omega_sigma(check_bracket(w, u), v, s, cv);
			e = std::max(e, std::abs(c));
		}
		return e;
	});

	ctx.check("algebra.z_sigma", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		auto cv = loop_convention(k);
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto g = random_gamma(alg, n, rng);
			auto u = random_check(alg, n, rng);
			e = std::max(e, std::abs(z_sigma(g, u, {}, cv) - group_cocycle_sigma(g, u, cv)));
			auto g0 = loop_constant(exp_map(random_lie(alg, rng)), n);
			e = std::max(e, std::abs(z_sigma(g0, {0, u.xi}, {}, cv)));
		}
		return e;
	});

	ctx.check("algebra.z_sigma_crossed", [&](Rng &rng, Echo &echo) {
		echo = {{"n_theta", str(n)}, {"level", str(k)}, {"instances", str(instances)}};
		auto cv = loop_convention(k);
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto s = random_splitting(alg, n, rng);
			auto g1 = random_gamma(alg, n, rng), g2 = random_gamma(alg, n, rng);
			auto u = random_check(alg, n, rng);
			double lhs = z_sigma(loop_multiply(g1, g2), u, s, cv);
			double rhs = z_sigma(g1, check_adjoint(g2, u), s, cv) + z_sigma(g2, u, s, cv);
			e = std::max(e, std::abs(lhs - rhs));
		}
		return e;
	});

	// field-level extended algebra on the bundle
	const int d = cfg.degree != 0 ? cfg.degree : 1;
	Space sp = Space::bundle(cfg.nx, cfg.ny, cfg.nt, d);
	FieldGen gen, flat;
	flat.theta_const = true;
	auto element = [&](Rng &rng) {
		return ExtendedElement{random_field(sp, 0, 1, rng, flat), random_field(sp, 0, alg.dim(), rng, gen),
		                       random_field(sp, 0, 1, rng, flat)};
	};
	const int field_instances = 20;

	ctx.check("algebra.k0_cocycle", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"instances", str(field_instances)}};
		Field kappa = make_kappa(sp);
		double e = 0;
		for (int i = 0; i < field_instances; ++i) {
			Field a = random_field(sp, 0, alg.dim(), rng, gen), b = random_field(sp, 0, alg.dim(), rng, gen),
			      c = random_field(sp, 0, alg.dim(), rng, gen);
			auto br = [&](const Field &x, const Field &y) { return pointwise_bracket(alg, x, y); };
			double s = cocycle_k0(alg, br(a, b), c, kappa) + cocycle_k0(alg, br(b, c), a, kappa) +
			           cocycle_k0(alg, br(c, a), b, kappa);
			e = std::max(e, std::abs(s));
			e = std::max(e, std::abs(cocycle_k0(alg, a, b, kappa) + cocycle_k0(alg, b, a, kappa)));
			Field flat_a = random_field(sp, 0, alg.dim(), rng, flat);
			e = std::max(e, std::abs(cocycle_k0(alg, flat_a, b, kappa)));
		}
		return e;
	});

	ctx.check("algebra.extended_jacobi", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"instances", str(field_instances)}};
		double e = 0;
		for (int i = 0; i < field_instances; ++i) {
			auto u = element(rng), v = element(rng), w = element(rng);
			auto B = [&](const ExtendedElement &a, const ExtendedElement &b) { return extended_bracket(alg, a, b); };
			auto j1 = B(u, B(v, w)), j2 = B(v, B(w, u)), j3 = B(w, B(u, v));
			e = std::max({e, sup_norm(j1.xi + j2.xi + j3.xi), sup_norm(j1.x + j2.x + j3.x)});
			auto c = extended_zero(alg, sp);
			c.y = random_field(sp, 0, 1, rng, flat);
			auto z = B(c, u);
			e = std::max({e, sup_norm(z.x), sup_norm(z.xi), sup_norm(z.y)});
		}
		return e;
	});

	ctx.check("algebra.gamma_cocycle", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"instances", str(field_instances)}};
		double e = 0;
		for (int i = 0; i < field_instances; ++i) {
			auto u = element(rng), v = element(rng), w = element(rng);
			auto B = [&](const ExtendedElement &a, const ExtendedElement &b) { return extended_bracket(alg, a, b); };
			Field s = gamma_cocycle(alg, B(u, v).xi, w.xi) + gamma_cocycle(alg, B(v, w).xi, u.xi) +
			          gamma_cocycle(alg, B(w, u).xi, v.xi);
			e = std::max(e, sup_norm(s));
			e = std::max(e, sup_norm(gamma_cocycle(alg, u.xi, v.xi) + gamma_cocycle(alg, v.xi, u.xi)));
		}
		return e;
	});

	ctx.check("algebra.extended_pair_invariance", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"instances", str(field_instances)}};
		double e = 0;
		for (int i = 0; i < field_instances; ++i) {
			auto u = element(rng), v = element(rng), w = element(rng);
			Field s = extended_pair(alg, extended_bracket(alg, w, u), v) + extended_pair(alg, u, extended_bracket(alg, w, v));
			e = std::max(e, sup_norm(s));
		}
		return e;
	});
}

} // namespace

const SuiteDef &algebra()
{
	static const SuiteDef s{
	    "algebra",
	    {
	        {"algebra.lie_basis", "su(2) basis brackets, pairing and a rotation by pi", 1e-12},
	        {"algebra.lie_jacobi", "Jacobi identity of the matrix commutator", 1e-12},
	        {"algebra.lie_ad_invariance", "ad-invariance of the trace pairing", 1e-12},
	        {"algebra.lie_ad_series", "Ad of exp(X) against the ad-series to order 12", 1e-8},
	        {"algebra.loop_pair", "normalized loop pairing on cosine loops", 1e-12},
	        {"algebra.affine_examples", "affine bracket and pairing on d, c and Higgs values", 1e-10},
	        {"algebra.affine_jacobi", "Jacobi identity of the level-k affine bracket", 1e-10},
	        {"algebra.affine_pair_invariance", "invariance of the affine pairing", 1e-10},
	        {"algebra.affine_adjoint_isometry", "affine adjoint action preserves the pairing and fixes c", 1e-10},
	        {"algebra.affine_adjoint_homomorphism", "affine adjoint action respects the bracket", 1e-10},
	        {"algebra.affine_adjoint_flow", "affine adjoint action against the integrated ad-flow", 1e-9},
	        {"algebra.affine_winding_example", "adjoint of d by exp(4 pi theta t3)", 1e-10},
	        {"algebra.beta_map", "equivariance and values of the beta map", 1e-10},
	        {"algebra.higgs_orbit", "orbit of d satisfies the two Higgs constraints", 1e-10},
	        {"algebra.group_cocycle", "group cocycle equals the central defect of the adjoint action", 1e-10},
	        {"algebra.omega_sigma", "Lie algebra cocycle of a splitting against its closed form", 1e-10},
	        {"algebra.omega_sigma_cocycle", "2-cocycle identity of omega_sigma", 1e-10},
	        {"algebra.z_sigma", "group cocycle of the default splitting", 1e-10},
	        {"algebra.z_sigma_crossed", "crossed-homomorphism property of Z_sigma", 1e-10},
	        {"algebra.k0_cocycle", "cocycle k0 on the contact bundle: 2-cocycle identity and antisymmetry", 1e-8},
	        {"algebra.extended_jacobi", "Jacobi identity of the extended gauge algebra", 1e-9},
	        {"algebra.gamma_cocycle", "2-cocycle identity of gamma", 1e-8},
	        {"algebra.extended_pair_invariance", "invariance of the extended pairing", 1e-9},
	    },
	    run};
	return s;
}

} // namespace calbf::suites
