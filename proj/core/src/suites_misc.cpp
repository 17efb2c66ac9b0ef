#include "suites.hpp"

#include "calbf/functionals.hpp"
#include "calbf/gerbe.hpp"
#include "calbf/localization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace calbf::suites {

namespace {

constexpr double pi = std::numbers::pi;

double rel_err(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// ---------------------------------------------------------------- localization

void run_localization(Context &ctx)
{
	const Orbit X{1, 64}, Y{2, 64};

	ctx.check("localization.volume", [&](Rng &, Echo &echo) {
		echo = {{"radii", "1,2"}};
		double e = 0;
		for (const Orbit &o : {X, Y}) {
			e = std::max(e, std::abs(symplectic_volume(o) - 4 * pi * o.r));
			e = std::max(e, rel_err(dh_measure(o, 0.0), 4 * pi * o.r));
		}
		return e;
	});

	ctx.check("localization.dh_closed_form", [&](Rng &rng, Echo &echo) {
		// DH(xi) = 4 pi sin(r xi) / xi on the sphere of radius r
		const int points = 10;
		echo = {{"radii", "1,2"}, {"points", str(points)}};
		std::uniform_real_distribution<double> U(-8, 8);
		double e = 0;
		for (const Orbit &o : {X, Y})
			for (int i = 0; i < points; ++i) {
				double xi = U(rng);
				e = std::max(e, rel_err(dh_measure(o, xi), 4 * pi * std::sin(o.r * xi) / xi));
			}
		return e;
	});

	ctx.check("localization.dh_symmetry", [&](Rng &rng, Echo &echo) {
		echo = {{"radii", "1,2"}, {"points", "10"}};
		std::uniform_real_distribution<double> U(0, 8);
		double e = 0;
		for (int i = 0; i < 10; ++i) {
			double xi = U(rng);
			auto a = dh_measure(X, xi), b = dh_measure(X, -xi);
			e = std::max({e, std::abs(a - std::conj(b)), std::abs(a.imag())});
			auto u = dh_measure(std::vector<Orbit>{X, Y}, xi);
			e = std::max(e, std::abs(u - a - dh_measure(Y, xi)));
		}
		return e;
	});

	ctx.check("localization.support_scaling", [&](Rng &, Echo &echo) {
		double r1 = dh_support_radius(X), r2 = dh_support_radius(Y);
		echo = {{"radius_1", str(r1)}, {"radius_2", str(r2)}};
		return std::max(std::abs(r1 - X.r), std::abs(r2 / r1 - 2));
	});

	ctx.check("localization.resolution_guard", [&](Rng &, Echo &echo) {
		echo = {{"xi", "1e4"}, {"panels", str(X.panels)}};
		try {
			dh_measure(X, 1e4);
		} catch (const std::domain_error &) {
			return 0.0;
		}
		return 1.0;
	});

	ctx.check("localization.pairing", [&](Rng &, Echo &echo) {
		echo = {{"radius", str(X.r)}, {"eps", "0.1,1,10"}};
		double e = 0;
		for (double eps : {0.1, 1.0, 10.0}) {
			auto z = z_norm_squared(X, eps);
			e = std::max(e, z.rel());
			double closed = 2 * pi * std::sqrt(2 * pi * eps) * std::erf(1 / std::sqrt(2 * eps));
			e = std::max(e, std::abs(z.direct - closed) / closed);
		}
		return e;
	});

	ctx.check("localization.z_pair", [&](Rng &, Echo &echo) {
		auto z = z_pair(X, Y);
		echo = {{"radii", "1,2"}, {"points", "4096"}, {"direct", str(z.direct)}, {"factorized", str(z.other)}};
		return z.rel();
	});

	ctx.check("localization.z_pair_refinement", [&](Rng &, Echo &echo) {
		auto a = z_pair(X, Y, 4096), b = z_pair(X, Y, 8192);
		echo = {{"radii", "1,2"}, {"points", "4096,8192"}};
		return std::abs(a.other - b.other) / std::abs(b.other);
	});
}

// ---------------------------------------------------------------- gerbe

Splitting random_splitting(const LieAlgebra &alg, int n, Rng &rng)
{
	Splitting s;
	s.a = std::normal_distribution<double>(0, 1)(rng);
	s.zeta = random_loop(alg, n, rng);
	return s;
}

void run_gerbe(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra alg(cfg.rank);
	const int k = cfg.level;
	const int dt = cfg.degree != 0 ? cfg.degree : 1;
	FieldGen flat;
	flat.theta_const = true;

	auto fields = [&](int d, Rng &rng) {
		Space b = Space::base(cfg.nx, cfg.ny, cfg.nt, d);
		return make_caloron(random_field(b, 1, alg.dim(), rng), random_field(b, 0, alg.dim(), rng));
	};

	for (int d : {0, dt}) {
		ctx.check(d == 0 ? "gerbe.principal_curvature_untwisted" : "gerbe.principal_curvature_twisted",
		          [&, d](Rng &rng, Echo &echo) {
			          auto f = fields(d, rng);
			          auto G = gerbe_curvature(alg, f, random_splitting(alg, cfg.nt, rng), k);
			          echo = {{"grid", grid_str(f.Lambda.sp)}, {"degree", str(d)}, {"level", str(k)}};
			          double e = sup_diff(G.central, G.central_closed) / std::max(1.0, sup_norm(G.central_closed));
			          return std::max(e, sup_diff(G.central + G.s_sigma, G.sigma_central));
		          });
	}

	ctx.check("gerbe.lift_identity", [&](Rng &rng, Echo &echo) {
		// f - d alpha = -s_V(F of the lifted connection)
		auto f = fields(0, rng);
		echo = {{"grid", grid_str(f.Lambda.sp)}, {"degree", "0"}, {"level", str(k)}};
		auto s = random_splitting(alg, cfg.nt, rng);
		auto lc = make_lift(f);
		lc.alpha = random_field(f.Lambda.sp, 1, 1, rng, flat);
		Field lhs = curving_f(alg, f, s, k) - exterior_d(lc.alpha);
		Field rhs = -1.0 * lifted_splitting_curvature(alg, lc, s, k);
		return sup_diff(lhs, rhs) / std::max(1.0, sup_norm(lhs));
	});

	ctx.check("gerbe.lift_twist", [&](Rng &rng, Echo &echo) {
		auto f = fields(0, rng);
		echo = {{"grid", grid_str(f.Lambda.sp)}, {"degree", "0"}, {"twists", "1,3"}};
		auto s = random_splitting(alg, cfg.nt, rng);
		auto lc = make_lift(f);
		double I0 = fiber_integrate(lifted_splitting_curvature(alg, lc, s, k));
		double e = 0;
		for (int n : {1, 3}) {
			auto lt = lift_twist(lc, random_field(f.Lambda.sp, 1, 1, rng, flat), n);
			e = std::max(e, std::abs(fiber_integrate(lifted_splitting_curvature(alg, lt, s, k)) - I0 - n));
		}
		return e;
	});

	for (int d : {0, dt}) {
		ctx.check(d == 0 ? "gerbe.splitting_change_untwisted" : "gerbe.splitting_change_twisted",
		          [&, d](Rng &rng, Echo &echo) {
			          // changing the splitting by (a, zeta) changes the curving by -d l(L)
			          auto f = fields(d, rng);
			          echo = {{"grid", grid_str(f.Lambda.sp)}, {"degree", str(d)}, {"level", str(k)}};
			          auto s = random_splitting(alg, cfg.nt, rng), ds = random_splitting(alg, cfg.nt, rng);
			          Splitting s2{s.a + ds.a, s.zeta + ds.zeta};
			          Field df = curving_f(alg, f, s2, k) - curving_f(alg, f, s, k);
			          Field ex = -1.0 * (ds.a * f.dlambda + exterior_d(splitting_of_connection(alg, f, {0, ds.zeta})));
			          return sup_diff(df, ex) / std::max(1.0, sup_norm(df));
		          });
	}

	using namespace heisenberg;
	auto rand_h = [](Rng &rng) {
		std::uniform_real_distribution<double> U(-2, 2);
		return H{U(rng), U(rng), U(rng)};
	};
	const int instances = 100;

	ctx.check("gerbe.heisenberg_adjoint", [&](Rng &rng, Echo &echo) {
		echo = {{"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			H g = rand_h(rng), X = rand_h(rng);
			H a = adjoint_fd(g, X);
			e = std::max({e, std::abs(a[0] - X[0]), std::abs(a[1] - X[1]), std::abs(a[2] - X[2] - omega(g, X))});
		}
		return e;
	});

	ctx.check("gerbe.heisenberg_bracket", [&](Rng &rng, Echo &echo) {
		echo = {{"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			H X = rand_h(rng), Y = rand_h(rng);
			H b = bracket_fd(X, Y);
			e = std::max({e, std::abs(b[0]), std::abs(b[1]), std::abs(b[2] - omega(X, Y))});
		}
		return e;
	});

	ctx.check("gerbe.heisenberg_cocycle", [&](Rng &rng, Echo &echo) {
		// Z(g, X) = Ad_g sigma(X) - sigma(Ad_g X) with sigma(X) = (X1, X2, 0)
		echo = {{"instances", str(instances)}};
		auto Z = [](const H &g, const H &X) { return adjoint_fd(g, {X[0], X[1], 0})[2]; };
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			H g = rand_h(rng), h = rand_h(rng), X = rand_h(rng);
			e = std::max(e, std::abs(Z(g, X) - omega(g, X)));
			e = std::max(e, std::abs(Z(multiply(g, h), X) - Z(g, adjoint_fd(h, X)) - Z(h, X)));
		}
		return e;
	});

	ctx.check("gerbe.heisenberg_curvature", [&](Rng &rng, Echo &echo) {
		// nu is left-invariant and d nu = -da ^ db on bilinear two-parameter families
		echo = {{"instances", str(instances)}};
		const double h = 0.5;
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			H g0 = rand_h(rng), u = rand_h(rng), v = rand_h(rng), w = rand_h(rng), L = rand_h(rng);
			auto at = [&](double s, double t) {
				return H{g0[0] + s * u[0] + t * v[0] + s * t * w[0], g0[1] + s * u[1] + t * v[1] + s * t * w[1],
				         g0[2] + s * u[2] + t * v[2] + s * t * w[2]};
			};
			auto ds = [&](double, double t) { return H{u[0] + t * w[0], u[1] + t * w[1], u[2] + t * w[2]}; };
			auto dt_ = [&](double s, double) { return H{v[0] + s * w[0], v[1] + s * w[1], v[2] + s * w[2]}; };
			double dnu = (nu(at(h, 0), dt_(h, 0)) - nu(at(-h, 0), dt_(-h, 0))) / (2 * h) -
			             (nu(at(0, h), ds(0, h)) - nu(at(0, -h), ds(0, -h))) / (2 * h);
			e = std::max(e, std::abs(dnu + (u[0] * v[1] - v[0] * u[1])));
			// left translation g -> L g pushes dg to the central difference of L (g + t dg)
			H g = at(0, 0), dg = ds(0, 0);
			H p = multiply(L, H{g[0] + h * dg[0], g[1] + h * dg[1], g[2] + h * dg[2]});
			H m = multiply(L, H{g[0] - h * dg[0], g[1] - h * dg[1], g[2] - h * dg[2]});
			H Ldg{(p[0] - m[0]) / (2 * h), (p[1] - m[1]) / (2 * h), (p[2] - m[2]) / (2 * h)};
			e = std::max(e, std::abs(nu(multiply(L, g), Ldg) - nu(g, dg)));
		}
		return e;
	});
}

// ---------------------------------------------------------------- symmetry

void run_symmetry(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra alg(cfg.rank);
	const int d = cfg.degree;
	Space sp = Space::bundle(cfg.nx, cfg.ny, cfg.nt, d);
	Field kappa = make_kappa(sp);
	FieldGen gen, flat;
	flat.theta_const = true;
	auto group = [&](Rng &rng) { return group_exp(alg, random_field(sp, 0, alg.dim(), rng, gen)); };
	auto horiz = [&](Rng &rng, const FieldGen &g, int nch) {
		return project_horizontal(random_field(sp, 1, nch, rng, g), kappa);
	};

	ctx.check("symmetry.identity", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}};
		Field A = random_field(sp, 1, alg.dim(), rng);
		Field one = group_identity(sp, cfg.rank);
		return sup_diff(gauge_act_3d(alg, one, A), A);
	});

	ctx.check("symmetry.group_fields", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}};
		Field g = group(rng), h = group(rng);
		double e = group_unitarity_defect(group_multiply(g, h));
		e = std::max(e, group_unitarity_defect(group_inverse(g)));
		e = std::max(e, sup_diff(group_multiply(g, group_inverse(g)), group_identity(sp, cfg.rank)));
		return e;
	});

	ctx.check("symmetry.pure_gauge_flat", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"amplitude", "0.25"}};
		FieldGen smooth;
		smooth.amplitude = 0.25;
		Field A = maurer_cartan(alg, group_exp(alg, random_field(sp, 0, alg.dim(), rng, smooth)));
		return sup_norm(curvature(alg, A)) / std::max(1.0, sup_norm(A));
	});

	ctx.check("symmetry.reduced_square", [&](Rng &rng, Echo &echo) {
		// horizontal part of A^g equals the reduced action on the horizontal part of A
		const int pairs = 10;
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"instances", str(pairs)}};
		double e = 0;
		for (int i = 0; i < pairs; ++i) {
			Field g = group(rng);
			Field A = random_field(sp, 1, alg.dim(), rng);
			Field lhs = project_horizontal(gauge_act_3d(alg, g, A), kappa);
			Field rhs = gauge_act_reduced(alg, g, project_horizontal(A, kappa), kappa);
			e = std::max(e, sup_diff(lhs, rhs));
		}
		return e;
	});

	ctx.check("symmetry.hamiltonian", [&](Rng &rng, Echo &echo) {
		// Omega(u . l, Y) = d/dt <<<F_(l + tY), u>>>, exact for a quadratic moment map
		const int instances = 5;
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			CConnection l{kappa, horiz(rng, gen, alg.dim()), horiz(rng, flat, 1)};
			CConnection Y{horiz(rng, flat, 1), horiz(rng, gen, alg.dim()), horiz(rng, flat, 1)};
			ExtendedElement u{random_field(sp, 0, 1, rng, flat), random_field(sp, 0, alg.dim(), rng, gen),
			                  random_field(sp, 0, 1, rng, flat)};
			double lhs = omega_cconnection(alg, rep_on_cconnection(alg, u, l), Y);
			const double h = 0.5;
			double rhs = (moment_pairing(alg, moment_f(alg, l + h * Y), u) -
			              moment_pairing(alg, moment_f(alg, l + (-h) * Y), u)) /
			             (2 * h);
			e = std::max(e, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
		}
		return e;
	});

	ctx.check("symmetry.omega_antisymmetric", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}};
		CConnection X{horiz(rng, flat, 1), horiz(rng, gen, alg.dim()), horiz(rng, flat, 1)};
		CConnection Y{horiz(rng, flat, 1), horiz(rng, gen, alg.dim()), horiz(rng, flat, 1)};
		return std::abs(omega_cconnection(alg, X, Y) + omega_cconnection(alg, Y, X)) +
		       std::abs(omega_cconnection(alg, X, X));
	});
}

} // namespace

const SuiteDef &localization()
{
	static const SuiteDef s{
	    "localization",
	    {
	        {"localization.volume", "symplectic volume of the orbit and DH at zero", 1e-12},
	        {"localization.dh_closed_form", "DH measure of the sphere against 4 pi sin(r xi)/xi", 1e-10},
	        {"localization.dh_symmetry", "DH is real, even and additive over disjoint orbits", 1e-12},
	        {"localization.support_scaling", "support radius of the pushforward scales with the orbit", 1e-9},
	        {"localization.resolution_guard", "quadrature refuses under-resolved frequencies", 0.5},
	        {"localization.pairing", "Gaussian norm directly and via the DH pairing (relative)", 1e-6},
	        {"localization.z_pair", "pair integral directly and via the factorized DH form (relative)", 1e-5},
	        {"localization.z_pair_refinement", "factorized pair integral under grid doubling (relative)", 1e-7},
	    },
	    run_localization};
	return s;
}

const SuiteDef &gerbe()
{
	static const SuiteDef s{
	    "gerbe",
	    {
	        {"gerbe.principal_curvature_untwisted", "central curvature against its closed form, untwisted", 1e-9},
	        {"gerbe.principal_curvature_twisted", "central curvature against its closed form, twisted", 1e-6},
	        {"gerbe.lift_identity", "curving minus d alpha equals minus s_V of the lifted curvature", 1e-8},
	        {"gerbe.lift_twist", "a twist of n shifts the integrated lifted curvature by n", 1e-8},
	        {"gerbe.splitting_change_untwisted", "change of splitting shifts the curving by an exact form", 1e-9},
	        {"gerbe.splitting_change_twisted", "change of splitting shifts the curving by an exact form, twisted",
	         1e-9},
	        {"gerbe.heisenberg_adjoint", "Heisenberg adjoint action from group products", 1e-12},
	        {"gerbe.heisenberg_bracket", "Heisenberg bracket from group commutators", 1e-12},
	        {"gerbe.heisenberg_cocycle", "Heisenberg group cocycle and crossed-homomorphism property", 1e-12},
	        {"gerbe.heisenberg_curvature", "left-invariant connection form with d nu = -da ^ db", 1e-12},
	    },
	    run_gerbe};
	return s;
}

const SuiteDef &symmetry()
{
	static const SuiteDef s{
	    "symmetry",
	    {
	        {"symmetry.identity", "the identity gauge transformation acts trivially", 1e-14},
	        {"symmetry.group_fields", "products and inverses of group fields stay unitary", 1e-12},
	        {"symmetry.pure_gauge_flat", "pure gauge connections are flat (relative)", 1e-6},
	        {"symmetry.reduced_square", "gauge action commutes with the horizontal projection", 1e-8},
	        {"symmetry.hamiltonian", "the extended gauge action is Hamiltonian with moment map F", 1e-6},
	        {"symmetry.omega_antisymmetric", "symplectic form on connections is antisymmetric", 1e-12},
	    },
	    run_symmetry};
	return s;
}

} // namespace calbf::suites
