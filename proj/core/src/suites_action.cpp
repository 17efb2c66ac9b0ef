#include "suites.hpp"

#include "calbf/functionals.hpp"

#include <cmath>
#include <numbers>

namespace calbf::suites {

namespace {

constexpr double pi = std::numbers::pi;

// degree maps need a finer grid than the smooth random fields
constexpr int hedgehog_grid = 80;
constexpr double hedgehog_width = 0.12;

double five_point(const std::function<double(double)> &f, double h)
{
	return (8 * (f(h) - f(-h)) - (f(2 * h) - f(-2 * h))) / (12 * h);
}

void run_cs(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra su2(2);
	const int k = cfg.level;
	Space big = Space::bundle(hedgehog_grid, hedgehog_grid, hedgehog_grid, 0);

	for (int deg : {1, 2}) {
		ctx.check("cs.quantization_" + str(deg), [&, deg](Rng &, Echo &echo) {
			echo = {{"grid", grid_str(big)}, {"level", str(k)}, {"map_degree", str(deg)}, {"width", str(hedgehog_width)}};
			Field U = hedgehog(big, deg, hedgehog_width);
			return std::abs(cs_action(su2, maurer_cartan(su2, U), k).value - k * deg);
		});
	}

	ctx.check("cs.winding_oracle", [&](Rng &, Echo &echo) {
		echo = {{"grid", grid_str(big)}, {"map_degrees", "1,2"}};
		double e = 0;
		for (int deg : {1, 2})
			e = std::max(e, std::abs(winding_number(hedgehog(big, deg, hedgehog_width)) - deg));
		return e;
	});

	ctx.check("cs.gauge_mod_z", [&](Rng &rng, Echo &echo) {
		echo = {{"grid", grid_str(big)}, {"level", str(k)}, {"map_degree", "1"}};
		Field A = random_field(big, 1, su2.dim(), rng);
		Field U = hedgehog(big, 1, hedgehog_width);
		double a = cs_action(su2, A, k).value, b = cs_action(su2, gauge_act_3d(su2, U, A), k).value;
		return circle_distance(a, b);
	});

	ctx.check("cs.variation", [&](Rng &rng, Echo &echo) {
		LieAlgebra alg(cfg.rank);
		Space sp = Space::bundle(cfg.nx, cfg.ny, cfg.nt, cfg.degree);
		const int directions = 5;
		echo = {{"grid", grid_str(sp)}, {"degree", str(cfg.degree)}, {"level", str(k)}, {"directions", str(directions)}};
		Field A = random_field(sp, 1, alg.dim(), rng);
		double e = 0;
		for (int i = 0; i < directions; ++i) {
			Field dA = random_field(sp, 1, alg.dim(), rng);
			double fd = five_point([&](double t) { return cs_action(alg, A + t * dA, k).value; }, 1e-2);
			double an = cs_variation(alg, A, dA, k);
			e = std::max(e, std::abs(fd - an) / std::max(1.0, std::abs(an)));
		}
		return e;
	});
}

void run_bf(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra alg(cfg.rank);
	const int k = cfg.level;
	Space base = Space::base(cfg.nx, cfg.ny, cfg.nt, cfg.degree);
	FieldGen flat;
	flat.theta_const = true;

	for (int n : {1, 3}) {
		ctx.check("bf.lift_twist_" + str(n), [&, n](Rng &rng, Echo &echo) {
			echo = {{"grid", grid_str(base)}, {"degree", str(cfg.degree)}, {"level", str(k)}, {"twist", str(n)}};
			auto f = make_caloron(random_field(base, 1, alg.dim(), rng), random_field(base, 0, alg.dim(), rng));
			auto lc = make_lift(f);
			lc.alpha = random_field(base, 1, 1, rng, flat);
			double s0 = caloron_bf_action(alg, lc, k).value;
			double s1 = caloron_bf_action(alg, lift_twist(lc, random_field(base, 1, 1, rng, flat), n), k).value;
			return std::abs(s1 - s0 - n);
		});
	}

	ctx.check("bf.large_gauge_twist", [&](Rng &rng, Echo &echo) {
		// large gauge transformation of degree 1 followed by a twist of 2: S changes by an integer
		LieAlgebra su2(2);
		Space big = Space::bundle(hedgehog_grid, hedgehog_grid, hedgehog_grid, 0);
		echo = {{"grid", grid_str(big)}, {"level", str(k)}, {"map_degree", "1"}, {"twist", "2"}};
		Field A = random_field(big, 1, su2.dim(), rng);
		Field U = hedgehog(big, 1, hedgehog_width);
		auto lc = make_lift(cal_forward(make_connection(A)));
		auto lg = make_lift(cal_forward(make_connection(gauge_act_3d(su2, U, A))));
		Space b = base_of(big);
		lg = lift_twist(lg, random_field(b, 1, 1, rng, flat), 2);
		return circle_distance(caloron_bf_action(su2, lc, k).value, caloron_bf_action(su2, lg, k).value);
	});

	for (int d : {0, cfg.degree != 0 ? cfg.degree : 1}) {
		ctx.check(d == 0 ? "bf.cs_agreement_untwisted" : "bf.cs_agreement_twisted", [&, d](Rng &rng, Echo &echo) {
			// S = -CS_k(A) and the split form of the same action, relative to |CS|
			Space b = Space::base(cfg.nx, cfg.ny, cfg.nt, d);
			echo = {{"grid", grid_str(b)}, {"degree", str(d)}, {"level", str(k)}};
			auto f = make_caloron(random_field(b, 1, alg.dim(), rng), random_field(b, 0, alg.dim(), rng));
			auto c = cal_inverse(f);
			double S = caloron_bf_action(alg, make_lift(f), k).value;
			double cs = cs_action(alg, c.A, k).value;
			double split = cs_split_action(alg, c, k);
			double scale = std::max(1.0, std::abs(cs));
			return std::max(std::abs(S + cs), std::abs(split + cs)) / scale;
		});
	}
}

void run_bw(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra alg(cfg.rank);
	const int k = cfg.level;
	const int d = cfg.degree != 0 ? cfg.degree : 1;
	Space sp = Space::bundle(24, 24, 24, d);
	Field kappa = make_kappa(sp);

	ctx.check("bw.ratio_spread", [&](Rng &rng, Echo &echo) {
		const int fields = 20;
		std::vector<double> r;
		for (int i = 0; i < fields; ++i) {
			Field a = project_horizontal(random_field(sp, 1, alg.dim(), rng), kappa);
			auto mu = bw_moment(alg, a, kappa);
			r.push_back(bw_moment_square(alg, mu, kappa) / contact_cs_action(alg, a, kappa, k).value);
		}
		double mean = 0, var = 0;
		for (double v : r)
			mean += v / fields;
		for (double v : r)
			var += (v - mean) * (v - mean) / fields;
		echo = {{"grid", grid_str(sp)},  {"degree", str(d)},
		        {"level", str(k)},       {"fields", str(fields)},
		        {"mean", str(mean)},     {"expected_mean", str(-16 * pi * pi / k)}};
		return std::sqrt(var) / std::abs(mean);
	});

	ctx.check("bw.moment_map", [&](Rng &rng, Echo &echo) {
		// Omega(X_(u,xi), Y) = d/dt <mu(a + tY), (u,xi)>
		const int instances = 3;
		echo = {{"grid", grid_str(sp)}, {"degree", str(d)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			Field a = project_horizontal(random_field(sp, 1, alg.dim(), rng), kappa);
			Field xi = random_field(sp, 0, alg.dim(), rng);
			Field Y = project_horizontal(random_field(sp, 1, alg.dim(), rng), kappa);
			double u = std::uniform_real_distribution<double>(-1, 1)(rng);
			double om = bw_omega(alg, kappa, bw_generator(alg, a, kappa, u, xi), Y);
			double fd = five_point([&](double t) { return bw_hamiltonian(alg, a + t * Y, kappa, u, xi); }, 1e-2);
			e = std::max(e, std::abs(om - fd) / std::max(1.0, std::abs(om)));
		}
		return e;
	});
}

void run_msv(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra alg(cfg.rank);
	const int k = cfg.level;
	const int ns = 8;

	auto rel = [&](int d, Rng &rng, Echo &echo) {
		Space b = Space::base3(cfg.nx, cfg.ny, ns, cfg.nt, d);
		echo = {{"grid", grid_str(b)}, {"degree", str(d)}, {"level", str(k)}};
		auto f = make_caloron(random_field(b, 1, alg.dim(), rng), random_field(b, 0, alg.dim(), rng));
		return msv_identity(alg, f, k).rel();
	};
	ctx.check("msv.untwisted", [&](Rng &rng, Echo &echo) { return rel(0, rng, echo); });
	ctx.check("msv.twisted", [&](Rng &rng, Echo &echo) { return rel(cfg.degree != 0 ? cfg.degree : 1, rng, echo); });
}

void run_wilson(Context &ctx)
{
	const RunConfig &cfg = ctx.cfg;
	LieAlgebra su2(2);
	LieAlgebra alg(cfg.rank);
	Space sp = Space::bundle(cfg.nx, cfg.ny, cfg.nt, 0);

	ctx.check("wilson.trivial", [&](Rng &, Echo &echo) {
		echo = {{"grid", grid_str(sp)}, {"rank", str(cfg.rank)}};
		Field A(sp, 1, alg.dim());
		return std::abs(wilson_trace(alg, A, 0, 0) - cfg.rank);
	});

	ctx.check("wilson.half_turn", [&](Rng &, Echo &echo) {
		// A = 2 pi t3 dtheta has holonomy exp(-2 pi t3) = -1 in SU(2)
		echo = {{"grid", grid_str(sp)}, {"group", "su(2)"}};
		Field A(sp, 1, su2.dim());
		double *c = A.ptr(sp.index_of(1u << AT), 2);
		std::fill(c, c + sp.npts(), 2 * pi);
		double e = 0;
		for (int ix : {0, sp.n[AX] / 2})
			e = std::max(e, std::abs(wilson_trace(su2, A, ix, ix) + 2));
		return e;
	});

	ctx.check("wilson.orbit", [&](Rng &rng, Echo &echo) {
		const int instances = 50, n = 64;
		echo = {{"n_theta", str(n)}, {"level", str(cfg.level)}, {"instances", str(instances)}};
		double e = 0;
		for (int i = 0; i < instances; ++i) {
			auto g = loop_exp(random_loop(alg, n, rng));
			auto phi = random_loop(alg, n, rng), a = random_loop(alg, n, rng);
			e = std::max(e, std::abs(wilson_orbit_lhs(g, phi, a, cfg.level) - wilson_orbit_rhs(g, phi, a)));
		}
		return e;
	});

	ctx.check("wilson.gauge_invariance", [&](Rng &rng, Echo &echo) {
		// theta-independent gauge transformations conjugate the holonomy
		echo = {{"grid", grid_str(sp)}, {"rank", str(cfg.rank)}};
		FieldGen flat;
		flat.theta_const = true;
		Field g = group_exp(alg, random_field(sp, 0, alg.dim(), rng, flat));
		Field A = random_field(sp, 1, alg.dim(), rng);
		Field Ag = gauge_act_3d(alg, g, A);
		double e = 0;
		for (int ix = 0; ix < sp.n[AX]; ix += 5)
			for (int iy = 0; iy < sp.n[AY]; iy += 7)
				e = std::max(e, std::abs(wilson_trace(alg, Ag, ix, iy) - wilson_trace(alg, A, ix, iy)));
		return e;
	});
}

} // namespace

const SuiteDef &cs()
{
	static const SuiteDef s{
	    "cs",
	    {
	        {"cs.quantization_1", "CS_k of a degree-1 pure gauge equals k", 1e-6},
	        {"cs.quantization_2", "CS_k of a degree-2 pure gauge equals 2k", 1e-6},
	        {"cs.winding_oracle", "determinant formula for the degree of the hedgehog maps", 1e-6},
	        {"cs.gauge_mod_z", "CS_k is invariant mod Z under a large gauge transformation", 1e-6},
	        {"cs.variation", "first variation of CS_k against finite differences", 1e-6},
	    },
	    run_cs};
	return s;
}

const SuiteDef &bf()
{
	static const SuiteDef s{
	    "bf",
	    {
	        {"bf.lift_twist_1", "a degree-1 twist of the lift shifts the action by 1", 1e-8},
	        {"bf.lift_twist_3", "a degree-3 twist of the lift shifts the action by 3", 1e-8},
	        {"bf.large_gauge_twist", "large gauge transformation plus twist leaves the action fixed mod Z", 1e-6},
	        {"bf.cs_agreement_untwisted", "caloron action and split form against -CS_k, untwisted (relative)", 1e-9},
	        {"bf.cs_agreement_twisted", "caloron action and split form against -CS_k, twisted (relative)", 1e-6},
	    },
	    run_bf};
	return s;
}

const SuiteDef &bw()
{
	static const SuiteDef s{
	    "bw",
	    {
	        {"bw.ratio_spread", "relative spread of <<<mu,mu>>>/CS' over random connections", 1e-5},
	        {"bw.moment_map", "moment map property of the contact Hamiltonian", 1e-6},
	    },
	    run_bw};
	return s;
}

const SuiteDef &msv()
{
	static const SuiteDef s{
	    "msv",
	    {
	        {"msv.untwisted", "exterior derivative of the action density against msv, untwisted (relative)", 1e-9},
	        {"msv.twisted", "exterior derivative of the action density against msv, twisted (relative)", 1e-6},
	    },
	    run_msv};
	return s;
}

const SuiteDef &wilson()
{
	static const SuiteDef s{
	    "wilson",
	    {
	        {"wilson.trivial", "trivial connection has trace equal to the rank", 1e-12},
	        {"wilson.half_turn", "holonomy of 2 pi t3 dtheta is -1", 1e-10},
	        {"wilson.orbit", "orbit pairing equals minus the loop action", 1e-8},
	        {"wilson.gauge_invariance", "trace is invariant under theta-independent gauge transformations", 1e-12},
	    },
	    run_wilson};
	return s;
}

} // namespace calbf::suites
